#pragma once

#include "qbailey/qseries.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace qbailey {

/* A q-shifted factorial (sign * q^(expo_num/D); q^(base_num/D))_length.
 *
 * All arguments that occur in the catalog are of the form +-q^e, so the
 * argument is carried as a sign and a lattice exponent. length is a finite
 * integer (negative allowed, see poch_reciprocal) or infinite. */
struct PochSpec {
    int sign = 1;                 // +1 or -1
    long expo_num = 0;            // e >= 0, in units 1/D
    long base_num = 1;            // b >= 1, in units 1/D
    std::optional<long> length;   // nullopt = infinite

    static PochSpec finite(int sign, long e, long b, long n) { return {sign, e, b, n}; }
    static PochSpec infinite(int sign, long e, long b) { return {sign, e, b, std::nullopt}; }
};

/* Expanded product prod_k (1 - sign*q^((e + k*b)/D)), truncated at trunc.
 * Finite lengths must be >= 0 (the negative-length convention lives in
 * poch_reciprocal only); an infinite product multiplies factors until they
 * fall beyond the truncation. (x;q)_0 = 1. */
QSeries poch(const PochSpec& spec, int denom, long trunc);

/* 1 / (sign*q^(e/D); q^(b/D))_length.
 *
 * Convention: for a finite negative length -m (m > 0) the result is the ZERO
 * series; this is what makes the catalog's stated summation ranges literally
 * correct (the j = 0 terms of the entries with 1/(q)_{2j-1} die here).
 * A factor with zero exponent is an error: 1/(1-1) vanishes and 1/(1+1) is
 * not invertible over Z. */
QSeries poch_reciprocal(const PochSpec& spec, int denom, long trunc);

/* (q^(e1/D), q^(e2/D), q^(e3/D); q^(base/D))_inf */
QSeries triple_poch_infinite(long e1, long e2, long e3, long base, int denom, long trunc);

/* Memo for repeated poch/poch_reciprocal lookups at one fixed (denom, trunc).
 * Catalog builders hit the same finite lengths over and over while scanning
 * multi-index boxes. Not thread-safe; use one per builder invocation. */
class PochCache {
public:
    PochCache(int denom, long trunc) : denom_(denom), trunc_(trunc) {}

    const QSeries& p(int sign, long e, long b, std::optional<long> len);
    const QSeries& rp(int sign, long e, long b, std::optional<long> len);

    int denom() const { return denom_; }
    long trunc() const { return trunc_; }

private:
    using Key = std::tuple<int, long, long, long, bool>;
    int denom_;
    long trunc_;
    std::map<Key, QSeries> memo_;
};

} // namespace qbailey
