#include "qbailey/qprod.hpp"

#include <limits>
#include <stdexcept>

namespace qbailey {

namespace {

void validate(const PochSpec& spec, int denom, long trunc) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("PochSpec: sign must be +1 or -1");
    if (spec.expo_num < 0)
        throw std::domain_error("PochSpec: argument exponent must be >= 0");
    if (spec.base_num < 1)
        throw std::domain_error("PochSpec: base exponent must be >= 1");
    if (denom < 1 || trunc < 1)
        throw std::invalid_argument("PochSpec: bad denom/trunc");
}

/* in place: v *= (1 - s*q^x), x >= 1 */
void mul_factor(std::vector<mpz_class>& v, int s, long x) {
    const long t = static_cast<long>(v.size());
    for (long k = t - 1 - x; k >= 0; --k) {
        if (v[k] == 0) continue;
        if (s == 1)
            v[k + x] -= v[k];
        else
            v[k + x] += v[k];
    }
}

/* in place: v *= 1/(1 - s*q^x) = v * sum_m s^m q^(m x), x >= 1 */
void mul_factor_reciprocal(std::vector<mpz_class>& v, int s, long x) {
    const long t = static_cast<long>(v.size());
    for (long k = 0; k + x < t; ++k) {
        if (v[k] == 0) continue;
        if (s == 1)
            v[k + x] += v[k];
        else
            v[k + x] -= v[k];
    }
}

} // namespace

QSeries poch(const PochSpec& spec, int denom, long trunc) {
    validate(spec, denom, trunc);
    if (spec.length && *spec.length < 0)
        throw std::domain_error("poch: negative length (only poch_reciprocal defines it)");
    std::vector<mpz_class> v(static_cast<size_t>(trunc));
    v[0] = 1;
    for (long k = 0;; ++k) {
        if (spec.length && k >= *spec.length) break;
        const long x = spec.expo_num + k * spec.base_num;
        if (x >= trunc) break; // remaining factors are 1 mod q^(trunc/D)
        if (x == 0) {
            if (spec.sign == 1)
                return QSeries::zero(denom, trunc); // factor (1 - 1)
            for (auto& c : v) c *= 2;               // factor (1 + 1)
            continue;
        }
        mul_factor(v, spec.sign, x);
    }
    return QSeries::from_coeffs(std::move(v), denom);
}

QSeries poch_reciprocal(const PochSpec& spec, int denom, long trunc) {
    validate(spec, denom, trunc);
    if (spec.length && *spec.length < 0)
        return QSeries::zero(denom, trunc); // 1/(a;q)_{-m} := 0
    std::vector<mpz_class> v(static_cast<size_t>(trunc));
    v[0] = 1;
    for (long k = 0;; ++k) {
        if (spec.length && k >= *spec.length) break;
        const long x = spec.expo_num + k * spec.base_num;
        if (x >= trunc) break;
        if (x == 0) {
            if (spec.sign == 1)
                throw std::domain_error("poch_reciprocal: division by vanishing factor (1-1)");
            throw std::domain_error("poch_reciprocal: factor (1+1) is not invertible over Z");
        }
        mul_factor_reciprocal(v, spec.sign, x);
    }
    return QSeries::from_coeffs(std::move(v), denom);
}

QSeries triple_poch_infinite(long e1, long e2, long e3, long base, int denom, long trunc) {
    QSeries r = poch(PochSpec::infinite(1, e1, base), denom, trunc);
    r = r * poch(PochSpec::infinite(1, e2, base), denom, trunc);
    return r * poch(PochSpec::infinite(1, e3, base), denom, trunc);
}

const QSeries& PochCache::p(int sign, long e, long b, std::optional<long> len) {
    const Key key{sign, e, b, len.value_or(std::numeric_limits<long>::min()), false};
    auto it = memo_.find(key);
    if (it == memo_.end())
        it = memo_.emplace(key, poch({sign, e, b, len}, denom_, trunc_)).first;
    return it->second;
}

const QSeries& PochCache::rp(int sign, long e, long b, std::optional<long> len) {
    const Key key{sign, e, b, len.value_or(std::numeric_limits<long>::min()), true};
    auto it = memo_.find(key);
    if (it == memo_.end())
        it = memo_.emplace(key, poch_reciprocal({sign, e, b, len}, denom_, trunc_)).first;
    return it->second;
}

} // namespace qbailey
