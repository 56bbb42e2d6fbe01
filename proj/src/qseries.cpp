#include "qbailey/qseries.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qbailey {

QSeries::QSeries(int denom, long trunc) : denom_(denom) {
    if (denom < 1)
        throw std::invalid_argument("QSeries: denom must be >= 1");
    if (trunc < 1)
        throw std::invalid_argument("QSeries: trunc must be >= 1");
    coeffs_.resize(static_cast<size_t>(trunc));
}

QSeries QSeries::one(int denom, long trunc) {
    QSeries s(denom, trunc);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const mpz_class& coeff, long expo_num, int denom, long trunc) {
    if (expo_num < 0)
        throw std::domain_error("QSeries::monomial: negative exponent (lattice is nonnegative)");
    QSeries s(denom, trunc);
    if (expo_num < trunc)
        s.coeffs_[static_cast<size_t>(expo_num)] = coeff;
    return s;
}

QSeries QSeries::from_coeffs(std::vector<mpz_class> coeffs, int denom) {
    QSeries s(denom, static_cast<long>(coeffs.empty() ? 1 : coeffs.size()));
    if (!coeffs.empty()) s.coeffs_ = std::move(coeffs);
    return s;
}

const mpz_class& QSeries::coeff(long expo_num) const {
    if (expo_num < 0 || expo_num >= trunc())
        throw std::out_of_range("QSeries::coeff: exponent outside [0, trunc)");
    return coeffs_[static_cast<size_t>(expo_num)];
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<long> QSeries::min_expo() const {
    for (long k = 0; k < trunc(); ++k)
        if (coeffs_[static_cast<size_t>(k)] != 0) return k;
    return std::nullopt;
}

static void require_same_denom(const QSeries& a, const QSeries& b, const char* op) {
    if (a.denom() != b.denom())
        throw std::invalid_argument(std::string("QSeries: denom mismatch in ") + op +
                                    " (rescale first)");
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_denom(a, b, "add");
    const long t = std::min(a.trunc(), b.trunc());
    QSeries r(a.denom(), t);
    for (long k = 0; k < t; ++k)
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_same_denom(a, b, "sub");
    const long t = std::min(a.trunc(), b.trunc());
    QSeries r(a.denom(), t);
    for (long k = 0; k < t; ++k)
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_denom(a, b, "mul");
    const long t = std::min(a.trunc(), b.trunc());
    QSeries r(a.denom(), t);
    for (long i = 0; i < t; ++i) {
        const mpz_class& ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (long j = 0; j < t - i; ++j) {
            const mpz_class& bj = b.coeffs_[j];
            if (bj == 0) continue;
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(denom_, trunc());
    for (long k = 0; k < trunc(); ++k)
        r.coeffs_[k] = -coeffs_[k];
    return r;
}

QSeries QSeries::scaled(const mpz_class& c) const {
    QSeries r(denom_, trunc());
    for (long k = 0; k < trunc(); ++k)
        r.coeffs_[k] = c * coeffs_[k];
    return r;
}

QSeries QSeries::inverse() const {
    const mpz_class& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("QSeries::inverse: constant term " + c0.get_str() +
                                " is not a unit in Z");
    /* b0 = 1/c0; b_n = -(1/c0) * sum_{k=1}^{n} a_k b_{n-k} */
    const long t = trunc();
    QSeries r(denom_, t);
    r.coeffs_[0] = c0;
    for (long n = 1; n < t; ++n) {
        mpz_class acc = 0;
        for (long k = 1; k <= n; ++k) {
            if (coeffs_[k] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), coeffs_[k].get_mpz_t(), r.coeffs_[n - k].get_mpz_t());
        }
        r.coeffs_[n] = (c0 == 1) ? -acc : acc;
    }
    return r;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries r = QSeries::one(denom_, trunc());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

QSeries QSeries::rescaled(int new_denom) const {
    if (new_denom < 1)
        throw std::invalid_argument("QSeries::rescaled: denom must be >= 1");
    if (new_denom == denom_) return *this;
    if (new_denom % denom_ == 0) {
        const long f = new_denom / denom_;
        QSeries r(new_denom, trunc() * f);
        for (long k = 0; k < trunc(); ++k)
            r.coeffs_[k * f] = coeffs_[k];
        return r;
    }
    if (denom_ % new_denom == 0) {
        const long f = denom_ / new_denom;
        /* exponents k/denom with k < trunc are known, i.e. coarse numerators
         * k' = k/f with k' < ceil(trunc/f) */
        QSeries r(new_denom, (trunc() + f - 1) / f);
        for (long k = 0; k < trunc(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (k % f != 0)
                throw std::domain_error(
                    "QSeries::rescaled: lossy coarsening, nonzero coefficient at exponent " +
                    std::to_string(k) + "/" + std::to_string(denom_));
            r.coeffs_[k / f] = coeffs_[k];
        }
        return r;
    }
    throw std::invalid_argument("QSeries::rescaled: denominators are not nested");
}

QSeries QSeries::shifted(long delta_num) const {
    const long t = trunc();
    if (delta_num >= 0) {
        QSeries r(denom_, t);
        for (long k = 0; k + delta_num < t; ++k)
            r.coeffs_[k + delta_num] = coeffs_[k];
        return r;
    }
    const long d = -delta_num;
    for (long k = 0; k < std::min(d, t); ++k)
        if (coeffs_[k] != 0)
            throw std::domain_error("QSeries::shifted: support would cross below q^0");
    if (t - d < 1)
        throw std::domain_error("QSeries::shifted: shift exceeds truncation");
    QSeries r(denom_, t - d);
    for (long k = d; k < t; ++k)
        r.coeffs_[k - d] = coeffs_[k];
    return r;
}

QSeries QSeries::substitute_q_power(long k) const {
    if (k < 1)
        throw std::invalid_argument("QSeries::substitute_q_power: power must be >= 1");
    QSeries r(denom_, trunc());
    for (long i = 0; i < trunc(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (i * k < trunc())
            r.coeffs_[i * k] = coeffs_[i];
    }
    return r;
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc < 1 || new_trunc > trunc())
        throw std::invalid_argument("QSeries::truncated: order outside (0, trunc]");
    QSeries r(denom_, new_trunc);
    for (long k = 0; k < new_trunc; ++k)
        r.coeffs_[k] = coeffs_[k];
    return r;
}

std::optional<QSeries::Mismatch> QSeries::first_mismatch(const QSeries& a, const QSeries& b,
                                                         long order) {
    require_same_denom(a, b, "first_mismatch");
    if (order < 1 || order > a.trunc() || order > b.trunc())
        throw std::invalid_argument(
            "QSeries::first_mismatch: requested order exceeds a truncation");
    for (long k = 0; k < order; ++k)
        if (a.coeffs_[k] != b.coeffs_[k])
            return Mismatch{k, a.coeffs_[k], b.coeffs_[k]};
    return std::nullopt;
}

std::string QSeries::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k < trunc(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << "*";
            os << "q";
            const long g = std::gcd(k, static_cast<long>(denom_));
            const long num = k / g, den = denom_ / g;
            if (den == 1) {
                if (num != 1) os << "^" << num;
            } else {
                os << "^(" << num << "/" << den << ")";
            }
        }
    }
    if (first) os << "0";
    return os.str();
}

void QSeries::write_csv(std::ostream& os) const {
    for (long k = 0; k < trunc(); ++k) {
        if (coeffs_[k] == 0) continue;
        os << k << "," << denom_ << "," << coeffs_[k].get_str() << "\n";
    }
}

} // namespace qbailey
