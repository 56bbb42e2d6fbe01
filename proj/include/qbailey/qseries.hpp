#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>
#include <iosfwd>

namespace qbailey {

/* Exact truncated power series on the exponent lattice (1/denom)*Z>=0 with
 * arbitrary-precision integer coefficients.
 *
 * A QSeries holds the coefficients of sum_k c_k q^(k/denom) for lattice
 * exponents 0 <= k < trunc; the series is known modulo q^(trunc/denom).
 * Storage is dense: one mpz per lattice slot, zeros stored explicitly.
 *
 * The lattice is nonnegative by construction. Term generators must combine
 * exponent arithmetic (including the negative pieces of indefinite theta
 * exponents) in plain integers first; shifting nonzero support below q^0
 * throws instead of growing a Laurent tail.
 *
 * Arithmetic between two series requires equal denom (rescale first); the
 * result is truncated at the shorter operand. All operations return new
 * values; a constructed series is never mutated through the public API
 * except by assignment to the whole object, so instances may be shared
 * freely across threads. */
class QSeries {
public:
    QSeries(int denom, long trunc);

    static QSeries zero(int denom, long trunc) { return QSeries(denom, trunc); }
    static QSeries one(int denom, long trunc);
    /* coeff * q^(expo_num/denom); a term at or beyond trunc is absorbed
     * into the truncation (the result is the zero series). Negative
     * exponents are a hard error. */
    static QSeries monomial(const mpz_class& coeff, long expo_num, int denom, long trunc);
    /* adopt a dense coefficient vector (index = exponent numerator) */
    static QSeries from_coeffs(std::vector<mpz_class> coeffs, int denom);

    int denom() const { return denom_; }
    long trunc() const { return static_cast<long>(coeffs_.size()); }
    const mpz_class& coeff(long expo_num) const;
    bool is_zero() const;
    /* smallest lattice exponent with a nonzero coefficient */
    std::optional<long> min_expo() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& b) { *this = *this + b; return *this; }
    QSeries& operator*=(const QSeries& b) { *this = *this * b; return *this; }

    QSeries scaled(const mpz_class& c) const;
    /* reciprocal; requires constant coefficient +1 or -1 */
    QSeries inverse() const;
    /* small nonnegative integer power */
    QSeries pow(unsigned e) const;

    /* Same formal series on the lattice with denominator new_denom. Refining
     * (new_denom a multiple of denom) always works; coarsening requires every
     * nonzero exponent numerator to be divisible by denom/new_denom. trunc is
     * renormalized so the known q-order is preserved. */
    QSeries rescaled(int new_denom) const;
    /* multiply by q^(delta_num/denom); delta_num may be negative, in which
     * case nonzero support crossing below q^0 throws and trunc shrinks by
     * |delta_num| (the top coefficients are no longer determined) */
    QSeries shifted(long delta_num) const;
    /* substitute q -> q^k (exponent numerators multiplied by k, same denom,
     * same trunc; terms pushed past trunc are dropped) */
    QSeries substitute_q_power(long k) const;
    QSeries truncated(long new_trunc) const;

    struct Mismatch {
        long expo_num;
        mpz_class lhs, rhs;
    };
    /* Compare coefficients for all lattice exponents below order. Requires
     * equal denom and both truncs >= order (comparing less than asked for is
     * an error, never a silent success). Returns the smallest disagreeing
     * exponent, or nullopt on a match. */
    static std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, long order);

    /* "c0 + c1*q + c2*q^2 + ..." (nonzero terms; exponents printed as k/denom
     * when denom > 1) */
    std::string to_text() const;
    /* CSV rows "expo_num,denom,coeff", nonzero coefficients only */
    void write_csv(std::ostream& os) const;

private:
    int denom_;
    std::vector<mpz_class> coeffs_;
};

} // namespace qbailey
