// Arbitrary-precision rationals, backed by GMP. All algebra in this
// library is exact; this is the ground field.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhecke {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (sgn(base) == 0) {
        if (e < 0) throw std::domain_error("0^negative");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    long k = e < 0 ? -e : e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer b(1);
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// p/r for integers, plain integer when r == 1
inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace qhecke
