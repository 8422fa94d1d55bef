// Quantum integers, factorials, binomials and Pochhammer symbols:
//   [L]_q = (q^L - q^-L)/(q - q^-1) = q^{L-1} + q^{L-3} + ... + q^{-(L-1)}
//   (a ; q)_p = prod_{r=0}^{p-1} (1 - a q^r)

#pragma once

#include <stdexcept>

#include "scalaruq.hpp"

namespace qhecke {

inline LaurentQ qnum(int L) {
    if (L < 0) throw std::domain_error("qnum: negative argument");
    LaurentQ r;
    for (int e = -(L - 1); e <= L - 1; e += 2) r.add_term(e, Rational(1));
    return r;
}

inline LaurentQ qfact(int L) {
    if (L < 0) throw std::domain_error("qfact: negative argument");
    LaurentQ r = LaurentQ::one();
    for (int i = 1; i <= L; ++i) r *= qnum(i);
    return r;
}

// [L choose p]_q; always a Laurent polynomial, returned through ScalarQ
inline ScalarQ qbinom(int L, int p) {
    if (p < 0 || p > L) throw std::domain_error("qbinom: p out of range");
    ScalarQ r = ScalarQ(qfact(L)) / ScalarQ(qfact(p) * qfact(L - p));
    if (!r.is_polynomial()) throw std::logic_error("qbinom: division not exact");
    return r;
}

// (a ; q)_p over the u-polynomial ring, a symbolic in u
inline ScalarUQ qpoch(const ScalarUQ& a, int p) {
    if (p < 0) throw std::domain_error("qpoch: negative length");
    ScalarUQ r = ScalarUQ::one();
    for (int s = 0; s < p; ++s) {
        ScalarUQ f = ScalarUQ::one();
        f -= a * ScalarQ::q_pow(s);
        r *= f;
    }
    return r;
}

// evaluated forms at a rational point q0 (and base b0 for Pochhammer)
inline Rational qnum_at(int L, const Rational& q0) { return qnum(L).eval(q0); }

inline Rational qbinom_at(int L, int p, const Rational& q0) {
    return qbinom(L, p).eval(q0);
}

// (a ; b)_p with rational a, b
inline Rational qpoch_at(const Rational& a, const Rational& b, int p) {
    Rational r(1), f(a);
    for (int s = 0; s < p; ++s) {
        r *= Rational(1) - f;
        f *= b;
    }
    return r;
}

}  // namespace qhecke
