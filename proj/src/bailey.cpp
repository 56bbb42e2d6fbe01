#include "qbailey/bailey.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qbailey {

namespace {

int pow_sign(int s, long n) { return (s == 1 || n % 2 == 0) ? 1 : -1; }

void validate_base(const Monomial& a) {
    if (a.sign != 1 && a.sign != -1)
        throw std::invalid_argument("base parameter: sign must be +1 or -1");
    if (a.expo_num < 0)
        throw std::domain_error("base parameter: exponent must be >= 0");
}

std::string index_str(std::span<const long> idx) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < idx.size(); ++i)
        os << (i ? "," : "") << idx[i];
    os << ")";
    return os.str();
}

/* odometer over [0, n_max]^dims; returns false when wrapped */
bool advance(std::vector<long>& idx, long n_max) {
    for (auto& v : idx) {
        if (++v <= n_max) return true;
        v = 0;
    }
    return false;
}

/* ---- slot specializations -------------------------------------------- */

/* (rho)_n * rho^{-n}, split into a sign, an integer lattice exponent offset
 * (possibly negative for finite monomials; combined before any series is
 * shifted) and a series factor with constant term 1 (or the zero series once
 * an inverse-q-power slot passes its cap). */
struct SlotWeight {
    int sign = 1;
    long expo = 0;
    QSeries series;
};

SlotWeight slot_weight(const RhoSpec& rho, long n, int D, long T, PochCache& cache) {
    switch (rho.kind) {
        case RhoSpec::Kind::finite_monomial:
            return {pow_sign(rho.sign, n), -rho.expo_num * n,
                    cache.p(rho.sign, rho.expo_num, D, n)};
        case RhoSpec::Kind::inverse_q_power: {
            QSeries s = cache.p(1, D, D, rho.power) * cache.rp(1, D, D, rho.power - n);
            return {pow_sign(-1, n), D * n * (n - 1) / 2, std::move(s)};
        }
        case RhoSpec::Kind::infinity_limit:
            return {pow_sign(-1, n), D * n * (n - 1) / 2, QSeries::one(D, T)};
    }
    throw std::logic_error("unreachable");
}

/* effective lattice exponent of rho (rho = q^-N sits N base steps below 1) */
long rho_expo(const RhoSpec& rho, int D) {
    return rho.kind == RhoSpec::Kind::finite_monomial ? rho.expo_num : -rho.power * D;
}
int rho_sign(const RhoSpec& rho) {
    return rho.kind == RhoSpec::Kind::finite_monomial ? rho.sign : 1;
}

/* 1/(aq/rho)_n */
QSeries rhs_denom_recip(const RhoSpec& rho, const Monomial& a, long n, int D, PochCache& cache) {
    if (rho.kind == RhoSpec::Kind::infinity_limit) return QSeries::one(D, cache.trunc());
    const long e = a.expo_num + D - rho_expo(rho, D);
    if (e < 0)
        throw std::domain_error("lemma specialization: aq/rho falls below the lattice");
    return cache.rp(a.sign * rho_sign(rho), e, D, n);
}

/* (aq/rho)_inf */
QSeries slot_inf_poch(const RhoSpec& rho, const Monomial& a, int D, PochCache& cache) {
    if (rho.kind == RhoSpec::Kind::infinity_limit) return QSeries::one(D, cache.trunc());
    const long e = a.expo_num + D - rho_expo(rho, D);
    if (e < 0)
        throw std::domain_error("lemma specialization: aq/rho falls below the lattice");
    return cache.p(a.sign * rho_sign(rho), e, D, std::nullopt);
}

/* 1/(aq/(rho1 rho2))_inf */
QSeries combined_inf_recip(const RhoSpec& r1, const RhoSpec& r2, const Monomial& a, int D,
                           PochCache& cache) {
    if (r1.kind == RhoSpec::Kind::infinity_limit || r2.kind == RhoSpec::Kind::infinity_limit)
        return QSeries::one(D, cache.trunc());
    const long e = a.expo_num + D - rho_expo(r1, D) - rho_expo(r2, D);
    if (e < 0)
        throw std::domain_error("lemma specialization: aq/(rho1 rho2) falls below the lattice");
    return cache.rp(a.sign * rho_sign(r1) * rho_sign(r2), e, D, std::nullopt);
}

/* Largest n the evaluator must visit: the explicit lattice exponent of the
 * term at index n is E(n) = k D n(n-1)/2 + (e_a + D - sum e_finite) n with
 * k the number of non-finite slots; once E(n) >= trunc (past the vertex for
 * the quadratic case) every later term is absorbed by the truncation. An
 * inverse q-power slot additionally caps n at its N. */
long slot_n_max(std::span<const RhoSpec> rhos, const Monomial& a, int D, long trunc) {
    long k = 0, e_fin = 0;
    long cap = -1;
    for (const auto& r : rhos) {
        if (r.kind == RhoSpec::Kind::finite_monomial) {
            e_fin += r.expo_num;
        } else {
            ++k;
            if (r.kind == RhoSpec::Kind::inverse_q_power)
                cap = (cap < 0) ? r.power : std::min(cap, r.power);
        }
    }
    const long lin = a.expo_num + D - e_fin;
    auto E = [&](long n) { return k * D * n * (n - 1) / 2 + lin * n; };
    long n_max;
    if (k == 0) {
        if (lin <= 0)
            throw std::domain_error(
                "lemma specialization does not terminate: explicit exponent has no growth");
        n_max = (trunc + lin - 1) / lin;
    } else {
        long n = 1;
        while (E(n) < trunc || E(n + 1) < E(n)) ++n;
        n_max = n;
    }
    if (cap >= 0) n_max = std::min(n_max, cap);
    return n_max;
}

struct Memo {
    std::mutex m;
    std::map<std::pair<std::vector<long>, long>, QSeries> table;
};

} // namespace

VerifyReport check_onefold(const OnefoldPair& pair, long n_max, long trunc) {
    validate_base(pair.a);
    const auto t0 = std::chrono::steady_clock::now();
    const int D = pair.denom;
    PochCache cache(D, trunc);
    VerifyReport rep;
    rep.id = pair.name;
    rep.order = trunc;
    rep.denom = D;
    long checked = 0;
    for (long n = 0; n <= n_max; ++n) {
        ++checked;
        QSeries lhs = pair.beta(n, trunc);
        QSeries rhs = QSeries::zero(D, trunc);
        for (long r = 0; r <= n; ++r) {
            QSeries av = pair.alpha(r, trunc);
            if (av.is_zero()) continue;
            rhs += av * cache.rp(pair.a.sign, pair.a.expo_num + D, D, n + r) *
                   cache.rp(1, D, D, n - r);
        }
        if (auto mm = QSeries::first_mismatch(lhs, rhs, trunc)) {
            rep.status = VerifyReport::Status::mismatch;
            rep.first_mismatch = VerifyReport::Mismatch{mm->expo_num, D, mm->lhs, mm->rhs};
            rep.note = "defining relation fails at n=" + std::to_string(n);
            break;
        }
    }
    rep.term_count = checked;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

VerifyReport check_multifold(const MultifoldPair& pair, long n_max, long trunc) {
    validate_base(pair.a);
    const auto t0 = std::chrono::steady_clock::now();
    const int D = pair.denom;
    PochCache cache(D, trunc);
    VerifyReport rep;
    rep.id = pair.name;
    rep.order = trunc;
    rep.denom = D;
    std::vector<long> n(static_cast<size_t>(pair.folds), 0);
    long checked = 0;
    do {
        ++checked;
        QSeries lhs = pair.beta(n, trunc);
        QSeries rhs = QSeries::zero(D, trunc);
        std::vector<long> r(n.size(), 0);
        do {
            bool in_box = true;
            for (size_t i = 0; i < n.size(); ++i)
                if (r[i] > n[i]) { in_box = false; break; }
            if (!in_box) continue;
            QSeries av = pair.alpha(r, trunc);
            if (av.is_zero()) continue;
            QSeries term = std::move(av);
            for (size_t i = 0; i < n.size(); ++i)
                term = term * cache.rp(pair.a.sign, pair.a.expo_num + D, D, n[i] + r[i]) *
                       cache.rp(1, D, D, n[i] - r[i]);
            rhs += term;
        } while (advance(r, n_max));
        if (auto mm = QSeries::first_mismatch(lhs, rhs, trunc)) {
            rep.status = VerifyReport::Status::mismatch;
            rep.first_mismatch = VerifyReport::Mismatch{mm->expo_num, D, mm->lhs, mm->rhs};
            rep.note = "defining relation fails at n=" + index_str(n);
            break;
        }
    } while (advance(n, n_max));
    rep.term_count = checked;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

std::pair<QSeries, QSeries> lemma_eval(const OnefoldPair& pair, const RhoSpec& rho1,
                                       const RhoSpec& rho2, long trunc) {
    validate_base(pair.a);
    const int D = pair.denom;
    const Monomial& a = pair.a;
    PochCache cache(D, trunc);
    const RhoSpec rhos[2] = {rho1, rho2};
    const long n_max = slot_n_max(rhos, a, D, trunc);

    QSeries lhs = QSeries::zero(D, trunc);
    QSeries rhs_sum = QSeries::zero(D, trunc);
    for (long n = 0; n <= n_max; ++n) {
        SlotWeight w1 = slot_weight(rho1, n, D, trunc, cache);
        SlotWeight w2 = slot_weight(rho2, n, D, trunc, cache);
        const long expo = w1.expo + w2.expo + (a.expo_num + D) * n;
        if (expo < 0)
            throw std::domain_error("lemma specialization: negative combined exponent at n=" +
                                    std::to_string(n));
        if (expo >= trunc) continue;
        const int sign = w1.sign * w2.sign * pow_sign(a.sign, n);
        QSeries base = w1.series * w2.series;
        if (base.is_zero()) continue;

        QSeries lterm = base * pair.beta(n, trunc);
        lhs += lterm.scaled(sign).shifted(expo);

        QSeries av = pair.alpha(n, trunc);
        if (av.is_zero()) continue;
        QSeries rterm = base * av;
        rterm = rterm * rhs_denom_recip(rho1, a, n, D, cache);
        rterm = rterm * rhs_denom_recip(rho2, a, n, D, cache);
        rhs_sum += rterm.scaled(sign).shifted(expo);
    }
    QSeries pre = slot_inf_poch(rho1, a, D, cache) * slot_inf_poch(rho2, a, D, cache);
    pre = pre * cache.rp(a.sign, a.expo_num + D, D, std::nullopt);
    pre = pre * combined_inf_recip(rho1, rho2, a, D, cache);
    return {std::move(lhs), pre * rhs_sum};
}

MultifoldPair twofold_from_onefold(const OnefoldPair& pair) {
    validate_base(pair.a);
    const Monomial a = pair.a;
    const int D = pair.denom;
    auto alpha1 = pair.alpha;
    auto beta1 = pair.beta;

    MultifoldPair out;
    out.name = pair.name + ".twofold";
    out.folds = 2;
    out.a = a;
    out.denom = D;
    out.alpha = [a, D, alpha1](std::span<const long> idx, long trunc) {
        if (idx.size() != 2) throw std::invalid_argument("twofold alpha: need 2 indices");
        if (idx[0] != idx[1]) return QSeries::zero(D, trunc);
        const long n = idx[0];
        const long e = D * n * n + a.expo_num * n;
        return QSeries::monomial(pow_sign(a.sign, n), e, D, trunc) * alpha1(n, trunc);
    };
    auto memo = std::make_shared<Memo>();
    out.beta = [a, D, beta1, memo](std::span<const long> idx, long trunc) {
        if (idx.size() != 2) throw std::invalid_argument("twofold beta: need 2 indices");
        const std::pair<std::vector<long>, long> key{{idx[0], idx[1]}, trunc};
        std::lock_guard<std::mutex> lock(memo->m);
        if (auto it = memo->table.find(key); it != memo->table.end()) return it->second;
        PochCache cache(D, trunc);
        QSeries sum = QSeries::zero(D, trunc);
        for (long j = 0; j <= std::min(idx[0], idx[1]); ++j) {
            const long e = D * j * j + a.expo_num * j;
            if (e >= trunc) break;
            QSeries term = QSeries::monomial(pow_sign(a.sign, j), e, D, trunc) * beta1(j, trunc);
            term = term * cache.rp(1, D, D, idx[0] - j) * cache.rp(1, D, D, idx[1] - j);
            sum += term;
        }
        sum = sum * cache.rp(a.sign, a.expo_num + D, D, idx[0] + idx[1]);
        memo->table.emplace(key, sum);
        return sum;
    };
    return out;
}

MultifoldPair theorem1_lift(const MultifoldPair& pair) {
    validate_base(pair.a);
    const Monomial a = pair.a;
    const int D = pair.denom;
    const int l = pair.folds;
    auto alpha_in = pair.alpha;
    auto beta_in = pair.beta;

    MultifoldPair out;
    out.name = pair.name + ".lift";
    out.folds = 2 * l;
    out.a = a;
    out.denom = D;
    out.alpha = [a, D, l, alpha_in](std::span<const long> idx, long trunc) {
        if (static_cast<int>(idx.size()) != 2 * l)
            throw std::invalid_argument("lifted alpha: wrong index count");
        std::vector<long> r(static_cast<size_t>(l));
        long e = 0, rsum = 0;
        for (int i = 0; i < l; ++i) {
            if (idx[2 * i] != idx[2 * i + 1]) return QSeries::zero(D, trunc);
            r[i] = idx[2 * i];
            e += D * r[i] * r[i] + a.expo_num * r[i];
            rsum += r[i];
        }
        return QSeries::monomial(pow_sign(a.sign, rsum), e, D, trunc) * alpha_in(r, trunc);
    };
    auto memo = std::make_shared<Memo>();
    out.beta = [a, D, l, beta_in, memo](std::span<const long> idx, long trunc) {
        if (static_cast<int>(idx.size()) != 2 * l)
            throw std::invalid_argument("lifted beta: wrong index count");
        const std::pair<std::vector<long>, long> key{{idx.begin(), idx.end()}, trunc};
        std::lock_guard<std::mutex> lock(memo->m);
        if (auto it = memo->table.find(key); it != memo->table.end()) return it->second;
        PochCache cache(D, trunc);
        std::vector<long> cap(static_cast<size_t>(l));
        for (int k = 0; k < l; ++k)
            cap[k] = std::min(idx[2 * k], idx[2 * k + 1]);
        QSeries sum = QSeries::zero(D, trunc);
        std::vector<long> iv(static_cast<size_t>(l), 0);
        for (;;) {
            bool in_box = true;
            long e = 0, isum = 0;
            for (int k = 0; k < l; ++k) {
                if (iv[k] > cap[k]) { in_box = false; break; }
                e += D * iv[k] * iv[k] + a.expo_num * iv[k];
                isum += iv[k];
            }
            if (in_box && e < trunc) {
                QSeries term =
                    QSeries::monomial(pow_sign(a.sign, isum), e, D, trunc) * beta_in(iv, trunc);
                for (int k = 0; k < l; ++k)
                    term = term * cache.rp(1, D, D, idx[2 * k] - iv[k]) *
                           cache.rp(1, D, D, idx[2 * k + 1] - iv[k]);
                sum += term;
            }
            bool carried = false;
            for (int k = 0; k < l; ++k) {
                if (++iv[k] <= cap[k]) { carried = true; break; }
                iv[k] = 0;
            }
            if (!carried) break;
        }
        for (int k = 0; k < l; ++k)
            sum = sum * cache.rp(a.sign, a.expo_num + D, D, idx[2 * k] + idx[2 * k + 1]);
        memo->table.emplace(key, sum);
        return sum;
    };
    return out;
}

MultifoldPair tensor_product(const MultifoldPair& a, const MultifoldPair& b,
                             const std::string& name) {
    if (a.a.sign != b.a.sign || a.a.expo_num != b.a.expo_num || a.denom != b.denom)
        throw std::invalid_argument("tensor_product: pairs must share base and lattice");
    MultifoldPair out;
    out.name = name;
    out.folds = a.folds + b.folds;
    out.a = a.a;
    out.denom = a.denom;
    const int la = a.folds;
    auto aa = a.alpha, ab = a.beta, ba = b.alpha, bb = b.beta;
    out.alpha = [la, aa, ba](std::span<const long> idx, long trunc) {
        return aa(idx.subspan(0, la), trunc) * ba(idx.subspan(la), trunc);
    };
    out.beta = [la, ab, bb](std::span<const long> idx, long trunc) {
        return ab(idx.subspan(0, la), trunc) * bb(idx.subspan(la), trunc);
    };
    return out;
}

MultifoldPair as_multifold(const OnefoldPair& pair) {
    MultifoldPair out;
    out.name = pair.name;
    out.folds = 1;
    out.a = pair.a;
    out.denom = pair.denom;
    auto alpha = pair.alpha, beta = pair.beta;
    out.alpha = [alpha](std::span<const long> idx, long trunc) { return alpha(idx[0], trunc); };
    out.beta = [beta](std::span<const long> idx, long trunc) { return beta(idx[0], trunc); };
    return out;
}

std::pair<QSeries, QSeries> twofold_lemma_eval(const MultifoldPair& pair, const RhoSpec& x,
                                               const RhoSpec& y, const RhoSpec& z,
                                               const RhoSpec& w, const Monomial& a1,
                                               const Monomial& a2, long trunc) {
    if (pair.folds != 2) throw std::invalid_argument("twofold_lemma_eval: pair must be 2-fold");
    validate_base(a1);
    validate_base(a2);
    const int D = pair.denom;
    PochCache cache(D, trunc);
    const RhoSpec first[2] = {x, y};
    const RhoSpec second[2] = {z, w};
    const long n1_max = slot_n_max(first, a1, D, trunc);
    const long n2_max = slot_n_max(second, a2, D, trunc);

    QSeries lhs = QSeries::zero(D, trunc);
    QSeries rhs_sum = QSeries::zero(D, trunc);
    std::vector<long> idx(2);
    for (long n1 = 0; n1 <= n1_max; ++n1) {
        SlotWeight wx = slot_weight(x, n1, D, trunc, cache);
        SlotWeight wy = slot_weight(y, n1, D, trunc, cache);
        QSeries base1 = wx.series * wy.series;
        if (base1.is_zero()) continue;
        const long e1 = wx.expo + wy.expo + (a1.expo_num + D) * n1;
        const int s1 = wx.sign * wy.sign * pow_sign(a1.sign, n1);
        QSeries den1 =
            rhs_denom_recip(x, a1, n1, D, cache) * rhs_denom_recip(y, a1, n1, D, cache);
        for (long n2 = 0; n2 <= n2_max; ++n2) {
            SlotWeight wz = slot_weight(z, n2, D, trunc, cache);
            SlotWeight ww = slot_weight(w, n2, D, trunc, cache);
            const long expo = e1 + wz.expo + ww.expo + (a2.expo_num + D) * n2;
            if (expo < 0)
                throw std::domain_error(
                    "lemma specialization: negative combined exponent at n=(" +
                    std::to_string(n1) + "," + std::to_string(n2) + ")");
            if (expo >= trunc) continue;
            QSeries base = base1 * (wz.series * ww.series);
            if (base.is_zero()) continue;
            const int sign = s1 * wz.sign * ww.sign * pow_sign(a2.sign, n2);
            idx[0] = n1;
            idx[1] = n2;

            QSeries lterm = base * pair.beta(idx, trunc);
            lhs += lterm.scaled(sign).shifted(expo);

            QSeries av = pair.alpha(idx, trunc);
            if (!av.is_zero()) {
                QSeries rterm = base * av * den1;
                rterm = rterm * rhs_denom_recip(z, a2, n2, D, cache);
                rterm = rterm * rhs_denom_recip(w, a2, n2, D, cache);
                rhs_sum += rterm.scaled(sign).shifted(expo);
            }
        }
    }
    QSeries pre = slot_inf_poch(x, a1, D, cache) * slot_inf_poch(y, a1, D, cache);
    pre = pre * slot_inf_poch(z, a2, D, cache) * slot_inf_poch(w, a2, D, cache);
    pre = pre * cache.rp(a1.sign, a1.expo_num + D, D, std::nullopt);
    pre = pre * cache.rp(a2.sign, a2.expo_num + D, D, std::nullopt);
    pre = pre * combined_inf_recip(x, y, a1, D, cache);
    pre = pre * combined_inf_recip(z, w, a2, D, cache);
    return {std::move(lhs), pre * rhs_sum};
}

std::pair<QSeries, QSeries> multifold_limit_sum(const MultifoldPair& pair, long trunc) {
    validate_base(pair.a);
    const int D = pair.denom;
    const Monomial a = pair.a;
    const int l = pair.folds;
    PochCache cache(D, trunc);
    /* per-slot weight s_a^n q^(D n^2 + e_a n); largest useful n per slot */
    long n_cap = 0;
    while (D * n_cap * n_cap + a.expo_num * n_cap < trunc) ++n_cap;

    QSeries lhs = QSeries::zero(D, trunc);
    QSeries rhs_sum = QSeries::zero(D, trunc);
    std::vector<long> n(static_cast<size_t>(l), 0);
    for (;;) {
        long e = 0, nsum = 0;
        for (int i = 0; i < l; ++i) {
            e += D * n[i] * n[i] + a.expo_num * n[i];
            nsum += n[i];
        }
        if (e < trunc) {
            const QSeries weight = QSeries::monomial(pow_sign(a.sign, nsum), e, D, trunc);
            lhs += weight * pair.beta(n, trunc);
            QSeries av = pair.alpha(n, trunc);
            if (!av.is_zero()) rhs_sum += weight * av;
        }
        bool carried = false;
        for (int i = 0; i < l; ++i) {
            if (++n[i] <= n_cap) { carried = true; break; }
            n[i] = 0;
        }
        if (!carried) break;
    }
    QSeries pre = cache.rp(a.sign, a.expo_num + D, D, std::nullopt).pow(static_cast<unsigned>(l));
    return {std::move(lhs), pre * rhs_sum};
}

} // namespace qbailey
