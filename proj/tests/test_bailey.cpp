#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbailey/bailey.hpp"
#include "qbailey/catalog.hpp"

#include <random>
#include <thread>

using namespace qbailey;

namespace {

bool equals(const QSeries& a, const QSeries& b) {
    return !QSeries::first_mismatch(a, b, std::min(a.trunc(), b.trunc())).has_value();
}

bool matched(const VerifyReport& r) { return r.status == VerifyReport::Status::match; }

/* beta computed straight from the defining relation, for synthetic pairs */
OnefoldPair pair_from_alpha(std::string name, Monomial a,
                            std::function<QSeries(long, long)> alpha) {
    OnefoldPair p;
    p.name = std::move(name);
    p.a = a;
    p.alpha = alpha;
    p.beta = [a, alpha](long n, long T) {
        QSeries s = QSeries::zero(1, T);
        for (long r = 0; r <= n; ++r) {
            QSeries av = alpha(r, T);
            if (av.is_zero()) continue;
            s += av * poch_reciprocal({a.sign, a.expo_num + 1, 1, n + r}, 1, T) *
                 poch_reciprocal({1, 1, 1, n - r}, 1, T);
        }
        return s;
    };
    return p;
}

} // namespace

TEST_CASE("defining relation: catalogued onefold pairs") {
    CHECK(matched(check_onefold(make_unit_onefold(), 6, 30)));
    CHECK(matched(check_onefold(make_pair_3536(), 8, 30)));
}

TEST_CASE("defining relation at n_max = 0 checks beta_0 = alpha_0") {
    OnefoldPair p;
    p.name = "beta0-mismatch";
    p.a = {1, 0};
    p.alpha = [](long n, long T) { return n == 0 ? QSeries::one(1, T) : QSeries::zero(1, T); };
    p.beta = [](long, long T) { return QSeries::one(1, T) + QSeries::monomial(1, 0, 1, T); };
    VerifyReport r = check_onefold(p, 0, 10);
    CHECK(r.status == VerifyReport::Status::mismatch);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->expo_num == 0);
    CHECK(r.first_mismatch->lhs == 2);
    CHECK(r.first_mismatch->rhs == 1);
    CHECK(r.note.find("n=0") != std::string::npos);

    p.beta = [](long, long T) { return QSeries::one(1, T); };
    CHECK(matched(check_onefold(p, 0, 10)));
}

TEST_CASE("defining relation: catalogued multifold pairs") {
    CHECK(matched(check_multifold(make_unit_twofold(), 3, 25)));
    CHECK(matched(check_multifold(make_pair_3738(), 3, 25)));
    CHECK(matched(check_multifold(make_unit_fourfold(), 2, 20)));
}

TEST_CASE("twofold constructor reproduces the catalogued 2-fold pair") {
    MultifoldPair constructed = twofold_from_onefold(make_pair_3536());
    MultifoldPair display = make_pair_3738();
    const long T = 25;
    for (long n1 : {0L, 1L, 2L, 3L})
        for (long n2 : {0L, 1L, 3L}) {
            const std::vector<long> idx{n1, n2};
            CHECK(equals(constructed.beta(idx, T), display.beta(idx, T)));
            CHECK(equals(constructed.alpha(idx, T), display.alpha(idx, T)));
        }
}

TEST_CASE("the displayed 2-fold beta absorbs the unit factor (1-q)") {
    /* prefactor 1/(q)_{N1+N2+1} instead of the constructor's 1/(q^2;q)_{N1+N2} */
    MultifoldPair constructed = twofold_from_onefold(make_pair_3536());
    const long T = 25;
    PochCache c(1, T);
    auto displayed_beta = [&](long n1, long n2) {
        QSeries s = QSeries::zero(1, T);
        for (long j = 0; j <= std::min(n1, n2); ++j) {
            QSeries t = QSeries::monomial(j % 2 == 0 ? 1 : -1, j * j + j, 1, T);
            t = t * c.rp(1, 1, 1, n1 - j) * c.rp(1, 1, 1, n2 - j) * c.rp(1, 2, 2, j);
            s += t;
        }
        return c.rp(1, 1, 1, n1 + n2 + 1) * s;
    };
    QSeries one_minus_q = QSeries::one(1, T) - QSeries::monomial(1, 1, 1, T);
    for (long n1 : {0L, 1L, 2L})
        for (long n2 : {0L, 2L, 3L}) {
            const std::vector<long> idx{n1, n2};
            CHECK(equals(constructed.beta(idx, T), one_minus_q * displayed_beta(n1, n2)));
        }
}

TEST_CASE("twofold constructor on the unit pair gives the eq-4.2 kernel") {
    MultifoldPair constructed = twofold_from_onefold(make_unit_onefold());
    MultifoldPair display = make_unit_twofold();
    const long T = 25;
    for (long n1 : {0L, 1L, 2L, 4L})
        for (long n2 : {0L, 2L, 3L}) {
            const std::vector<long> idx{n1, n2};
            CHECK(equals(constructed.beta(idx, T), display.beta(idx, T)));
        }
    CHECK(matched(check_multifold(constructed, 3, 20)));
}

TEST_CASE("theorem1 lift reproduces the catalogued 4-fold pair") {
    MultifoldPair lifted = theorem1_lift(twofold_from_onefold(make_unit_onefold()));
    MultifoldPair display = make_unit_fourfold();
    const long T = 20;
    for (const auto& idx : std::vector<std::vector<long>>{
             {0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}, {2, 1, 2, 1}, {2, 2, 2, 2}}) {
        CHECK(equals(lifted.beta(idx, T), display.beta(idx, T)));
        CHECK(equals(lifted.alpha(idx, T), display.alpha(idx, T)));
    }
}

TEST_CASE("lifted alpha is supported on the pairing diagonal only") {
    MultifoldPair lifted = theorem1_lift(make_pair_3738());
    const long T = 20;
    CHECK(lifted.folds == 4);
    CHECK(lifted.alpha(std::vector<long>{1, 0, 0, 0}, T).is_zero());
    CHECK(lifted.alpha(std::vector<long>{1, 1, 2, 1}, T).is_zero());
    /* (1,1,2,2) pairs up to r = (1,2), where the inner alpha (itself
     * diagonal) vanishes; (1,1,1,1) survives */
    CHECK(lifted.alpha(std::vector<long>{1, 1, 2, 2}, T).is_zero());
    CHECK(!lifted.alpha(std::vector<long>{1, 1, 1, 1}, T).is_zero());
    /* diagonal value carries the q^(sum r^2) a^(sum r) weight */
    MultifoldPair inner = make_pair_3738();
    QSeries expect = QSeries::monomial(1, (1 + 1) + (1 + 1), 1, T) *
                     inner.alpha(std::vector<long>{1, 1}, T);
    CHECK(equals(lifted.alpha(std::vector<long>{1, 1, 1, 1}, T), expect));
}

TEST_CASE("lift of a randomized finitely-supported alpha stays a Bailey pair") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, 4);
    for (int iter = 0; iter < 5; ++iter) {
        const Monomial a = (iter % 2 == 0) ? Monomial{1, 0} : Monomial{1, 1};
        std::vector<QSeries> support;
        for (int n = 0; n <= 2; ++n) {
            QSeries s = QSeries::monomial(coeff(rng), expo(rng), 1, 64) +
                        QSeries::monomial(coeff(rng), expo(rng), 1, 64);
            support.push_back(s);
        }
        auto alpha = [support](long n, long T) {
            if (n > 2) return QSeries::zero(1, T);
            return support[static_cast<size_t>(n)].truncated(T);
        };
        OnefoldPair p = pair_from_alpha("random", a, alpha);
        CHECK(matched(check_onefold(p, 4, 20)));
        MultifoldPair lifted = twofold_from_onefold(p);
        CHECK(matched(check_multifold(lifted, 3, 20)));
        CHECK(matched(check_multifold(theorem1_lift(lifted), 2, 16)));
    }
}

TEST_CASE("lemma specializations agree on both sides") {
    const OnefoldPair p = make_pair_3536();
    const long T = 25;
    const RhoSpec inf = RhoSpec::infinity();
    for (const auto& [r1, r2] : std::vector<std::pair<RhoSpec, RhoSpec>>{
             {RhoSpec::monomial(-1, 1), inf},
             {RhoSpec::inverse_q_power(3), inf},
             {RhoSpec::inverse_q_power(2), RhoSpec::inverse_q_power(3)},
             {inf, inf}}) {
        auto [lhs, rhs] = lemma_eval(p, r1, r2, T);
        CHECK(equals(lhs, rhs));
    }
}

TEST_CASE("double inverse-q-power specialization reproduces the constructor beta") {
    const OnefoldPair p = make_pair_3536();
    const long T = 25;
    auto [lhs, rhs] = lemma_eval(p, RhoSpec::inverse_q_power(2), RhoSpec::inverse_q_power(3), T);
    MultifoldPair constructed = twofold_from_onefold(p);
    QSeries expect = poch(PochSpec::finite(1, 1, 1, 2), 1, T) *
                     poch(PochSpec::finite(1, 1, 1, 3), 1, T) *
                     poch(PochSpec::finite(1, 2, 1, 5), 1, T) * // (aq)_{N1+N2} at a=q
                     constructed.beta(std::vector<long>{2, 3}, T);
    CHECK(equals(lhs, expect));
    CHECK(equals(rhs, expect));
}

TEST_CASE("lemma under rho1 = -q telescopes to the Euler product") {
    /* with beta_n = (-1)^n/(q^2;q^2)_n the weights reduce to
     * (-1)^n q^(n(n+1)/2)/(q)_n, whose sum is (q;q)_inf */
    const long T = 60;
    auto [lhs, rhs] = lemma_eval(make_pair_3536(), RhoSpec::monomial(-1, 1),
                                 RhoSpec::infinity(), T);
    QSeries euler = poch(PochSpec::infinite(1, 1, 1), 1, T);
    CHECK(equals(lhs, euler));
    CHECK(equals(rhs, euler));
}

TEST_CASE("rho = q^0 = 1 collapses the sum to the n = 0 term") {
    const OnefoldPair p = make_pair_3536();
    const long T = 20;
    auto [lf, rf] = lemma_eval(p, RhoSpec::monomial(1, 0), RhoSpec::infinity(), T);
    auto [li, ri] = lemma_eval(p, RhoSpec::inverse_q_power(0), RhoSpec::infinity(), T);
    CHECK(equals(lf, li));
    CHECK(equals(rf, ri));
    CHECK(equals(lf, rf));
    CHECK(equals(lf, p.beta(0, T)));
}

TEST_CASE("infinity-limit weight is the large-K limit of q^-K") {
    /* (q^-K;q)_n (c/q^-K)^n -> (-1)^n q^(n(n-1)/2) c^n; at truncation T the
     * two evaluations agree exactly once K >= T + n_max */
    const long T = 20;
    for (const OnefoldPair& p : {make_pair_3536(), make_unit_onefold()}) {
        auto [lK, rK] = lemma_eval(p, RhoSpec::inverse_q_power(40), RhoSpec::infinity(), T);
        auto [li, ri] = lemma_eval(p, RhoSpec::infinity(), RhoSpec::infinity(), T);
        CHECK(equals(lK, li));
        CHECK(equals(rK, ri));
    }
}

TEST_CASE("lemma evaluation is lattice-independent") {
    /* the same pair pushed onto the half-integer lattice must give the
     * rescaled series, including under inverse-q-power specializations */
    const OnefoldPair p1 = make_pair_3536();
    OnefoldPair p2;
    p2.name = "pair-3.5-3.6@D2";
    p2.a = {1, 2}; // a = q has numerator 2 on the D = 2 lattice
    p2.denom = 2;
    p2.alpha = [p1](long n, long T) {
        return p1.alpha(n, (T + 1) / 2).rescaled(2).truncated(T);
    };
    p2.beta = [p1](long n, long T) {
        return p1.beta(n, (T + 1) / 2).rescaled(2).truncated(T);
    };
    const long T = 16;
    for (const auto& [r1a, r2a, r1b, r2b] :
         std::vector<std::tuple<RhoSpec, RhoSpec, RhoSpec, RhoSpec>>{
             {RhoSpec::monomial(-1, 1), RhoSpec::infinity(), RhoSpec::monomial(-1, 2),
              RhoSpec::infinity()},
             {RhoSpec::inverse_q_power(2), RhoSpec::inverse_q_power(3),
              RhoSpec::inverse_q_power(2), RhoSpec::inverse_q_power(3)}}) {
        auto [l1, rr1] = lemma_eval(p1, r1a, r2a, T);
        auto [l2, rr2] = lemma_eval(p2, r1b, r2b, 2 * T);
        CHECK(equals(l2, rr2));
        CHECK(equals(l1.rescaled(2), l2));
        CHECK(equals(rr1.rescaled(2), rr2));
    }
}

TEST_CASE("lemma rejects non-terminating or sub-lattice specializations") {
    const OnefoldPair unit = make_unit_onefold(); // a = 1
    CHECK_THROWS_AS(
        lemma_eval(unit, RhoSpec::monomial(-1, 1), RhoSpec::monomial(-1, 1), 20),
        std::domain_error); // explicit exponent has no growth
    CHECK_THROWS_AS(
        lemma_eval(unit, RhoSpec::monomial(-1, 3), RhoSpec::infinity(), 20),
        std::domain_error); // combined exponent dips negative
}

TEST_CASE("twofold lemma on the machine-built pair") {
    MultifoldPair pair2 = twofold_from_onefold(make_pair_3536());
    const Monomial q{1, 1};
    const RhoSpec inf = RhoSpec::infinity();
    const long T = 25;
    {
        auto [lhs, rhs] = twofold_lemma_eval(pair2, inf, inf, inf, inf, q, q, T);
        CHECK(equals(lhs, rhs));
    }
    {
        auto [lhs, rhs] = twofold_lemma_eval(pair2, RhoSpec::monomial(-1, 1), inf,
                                             RhoSpec::monomial(-1, 1), inf, q, q, T);
        CHECK(equals(lhs, rhs));
    }
}

TEST_CASE("multifold limit sums collapse to Euler powers on the unit tower") {
    const long T = 25;
    {
        auto [lhs, rhs] = multifold_limit_sum(make_unit_twofold(), T);
        QSeries expect = poch_reciprocal(PochSpec::infinite(1, 1, 1), 1, T).pow(2);
        CHECK(equals(lhs, rhs));
        CHECK(equals(rhs, expect));
    }
    {
        auto [lhs, rhs] = multifold_limit_sum(make_unit_fourfold(), 18);
        QSeries expect = poch_reciprocal(PochSpec::infinite(1, 1, 1), 1, 18).pow(4);
        CHECK(equals(lhs, rhs));
        CHECK(equals(rhs, expect));
    }
}

TEST_CASE("delta alpha means the limit-sum right side is the bare prefactor") {
    MultifoldPair p = make_unit_twofold();
    auto [lhs, rhs] = multifold_limit_sum(p, 20);
    QSeries pre = poch_reciprocal(PochSpec::infinite(1, 1, 1), 1, 20).pow(2);
    CHECK(equals(rhs, pre)); // only the zero multi-index survives in the alpha sum
}

TEST_CASE("tensor product multiplies slotwise") {
    MultifoldPair t =
        tensor_product(make_unit_twofold(), as_multifold(make_unit_onefold()), "unit2x1");
    CHECK(t.folds == 3);
    const long T = 20;
    const std::vector<long> idx{2, 1, 2};
    QSeries expect = make_unit_twofold().beta(std::vector<long>{2, 1}, T) *
                     make_unit_onefold().beta(2, T);
    CHECK(equals(t.beta(idx, T), expect));
    CHECK(matched(check_multifold(t, 2, 16)));
    CHECK_THROWS_AS(tensor_product(make_unit_twofold(), make_pair_3738(), "bad"),
                    std::invalid_argument); // mismatched bases
}

TEST_CASE("memoized betas are safe under concurrent evaluation") {
    MultifoldPair lifted = theorem1_lift(make_unit_twofold());
    const long T = 16;
    const std::vector<std::vector<long>> indices = {
        {1, 1, 1, 1}, {2, 1, 0, 2}, {0, 0, 0, 0}, {2, 2, 2, 2}, {1, 0, 2, 1}};
    std::vector<QSeries> serial;
    for (const auto& idx : indices)
        serial.push_back(lifted.beta(idx, T));

    MultifoldPair fresh = theorem1_lift(make_unit_twofold());
    std::vector<std::vector<QSeries>> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (int rep = 0; rep < 3; ++rep)
                for (const auto& idx : indices)
                    results[t].push_back(fresh.beta(idx, T));
        });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 4; ++t)
        for (size_t i = 0; i < results[t].size(); ++i)
            CHECK(equals(results[t][i], serial[i % indices.size()]));
}
