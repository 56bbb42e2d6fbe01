#pragma once

#include "qbailey/qprod.hpp"
#include "qbailey/qseries.hpp"
#include "qbailey/report.hpp"

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qbailey {

/* sign * q^(expo_num/D) — the only shape the base parameter a takes here */
struct Monomial {
    int sign = 1;
    long expo_num = 0;
};

/* A Bailey pair (alpha_n, beta_n) relative to a. The sequences are callables
 * n -> series at the given truncation so that constructions can nest without
 * materializing tables; implementations that sum (memoized lifts, catalog
 * displays) must be pure in (n, trunc). */
struct OnefoldPair {
    std::string name;
    Monomial a;
    int denom = 1;
    std::function<QSeries(long n, long trunc)> alpha, beta;
};

/* l-fold pair relative to a common base a (all slots share a; the catalog
 * never needs distinct bases). Indices are multi-indices of length folds. */
struct MultifoldPair {
    std::string name;
    int folds = 1;
    Monomial a;
    int denom = 1;
    std::function<QSeries(std::span<const long> idx, long trunc)> alpha, beta;
};

/* Specialization of one Bailey-lemma parameter slot. */
struct RhoSpec {
    enum class Kind { finite_monomial, inverse_q_power, infinity_limit };
    Kind kind = Kind::infinity_limit;
    int sign = 1;      // finite_monomial
    long expo_num = 0; // finite_monomial: e >= 0 (lattice units)
    long power = 0;    // inverse_q_power: N >= 0, rho = q^-N

    static RhoSpec monomial(int sign, long expo_num) {
        return {Kind::finite_monomial, sign, expo_num, 0};
    }
    static RhoSpec inverse_q_power(long n) { return {Kind::inverse_q_power, 1, 0, n}; }
    static RhoSpec infinity() { return {Kind::infinity_limit, 1, 0, 0}; }
};

/* Check the defining relation
 *   beta_n = sum_{r=0}^{n} alpha_r / ((aq;q)_{n+r} (q;q)_{n-r})
 * for every n <= n_max, exactly to trunc. The report's note carries the
 * first failing index; term_count is the number of indices checked. */
VerifyReport check_onefold(const OnefoldPair& pair, long n_max, long trunc);

/* Same over the full multi-index box [0, n_max]^folds. */
VerifyReport check_multifold(const MultifoldPair& pair, long n_max, long trunc);

/* Both sides of the Bailey lemma
 *
 *   sum_n (rho1)_n (rho2)_n (aq/rho1 rho2)^n beta_n
 *     = (aq/rho1)_inf (aq/rho2)_inf / ((aq)_inf (aq/rho1 rho2)_inf)
 *       * sum_n (rho1)_n (rho2)_n (aq/rho1 rho2)^n alpha_n / ((aq/rho1)_n (aq/rho2)_n)
 *
 * under the given slot specializations. The infinity limit replaces
 * (rho)_n (c/rho)^n by (-1)^n q^(n(n-1)/2) c^n per slot; rho = q^-N uses
 *   (q^-N;q)_n q^(Nn) = (-1)^n q^(n(n-1)/2) (q)_N / (q)_{N-n}
 * so every stored exponent stays on the nonnegative lattice and the n-sum
 * terminates at n = N through the 1/(q)_{N-n} = 0 convention. A
 * specialization whose combined exponents go negative, or whose explicit
 * exponent does not grow, is a hard error. */
std::pair<QSeries, QSeries> lemma_eval(const OnefoldPair& pair, const RhoSpec& rho1,
                                       const RhoSpec& rho2, long trunc);

/* The 2-fold pair obtained by specializing the lemma at rho_i = q^-N_i:
 *   alpha'_{n,n} = q^(n^2) a^n alpha_n  (zero off the diagonal)
 *   beta'_{N1,N2} = (1/(aq)_{N1+N2}) sum_j q^(j^2) a^j beta_j
 *                    / ((q)_{N1-j} (q)_{N2-j})
 * beta' is memoized (thread-safe: the memo is mutex-protected). */
MultifoldPair twofold_from_onefold(const OnefoldPair& pair);

/* Doubling construction: from an l-fold pair relative to a, the 2l-fold pair
 *   alpha'_{n1..n2l} = q^(sum r_i^2) a^(sum r_i) alpha_{r}   when
 *                      n1=n2=r_1, ..., n_{2l-1}=n_{2l}=r_l, else 0
 *   beta'_{n1..n2l}  = (1/prod_i (aq)_{n_{2i-1}+n_{2i}}) sum_{i1..il}
 *                      q^(sum i_k^2) a^(sum i_k) beta_{i}
 *                      / prod_k (q)_{n_{2k-1}-i_k} (q)_{n_{2k}-i_k}
 * beta' is memoized as above. */
MultifoldPair theorem1_lift(const MultifoldPair& pair);

/* Slotwise product of two pairs with the same base: the defining relation
 * factors across slots, so the result is an (lA+lB)-fold pair. Used to form
 * odd fold counts for the 1/(q)_inf^(2M) family. */
MultifoldPair tensor_product(const MultifoldPair& a, const MultifoldPair& b,
                             const std::string& name);

MultifoldPair as_multifold(const OnefoldPair& pair);

/* Both sides of the 2-fold lemma: slots (x,y) act on the first index with
 * base a1, (z,w) on the second with base a2. The relation holds when the
 * pair is relative to a1 = a2 = pair.a; the bases are parameters so the
 * evaluator can also exercise the degenerate combinations in tests. */
std::pair<QSeries, QSeries> twofold_lemma_eval(const MultifoldPair& pair, const RhoSpec& x,
                                               const RhoSpec& y, const RhoSpec& z,
                                               const RhoSpec& w, const Monomial& a1,
                                               const Monomial& a2, long trunc);

/* The all-limits l-fold lemma: every slot gets two infinity specializations,
 * giving per-slot weight q^(n^2) (aq^... ) collapsed to
 *   lhs = sum_n q^(sum n_i^2) a^(sum n_i) q^(sum n_i) ... beta_n
 *       = sum_n s_a^(sum n) q^(sum (D n_i^2 + e_a n_i)) beta_n
 *   rhs = (1/(aq)_inf^l) * sum_n (same weights) alpha_n */
std::pair<QSeries, QSeries> multifold_limit_sum(const MultifoldPair& pair, long trunc);

} // namespace qbailey
