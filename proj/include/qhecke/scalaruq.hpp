// ScalarUQ: Laurent polynomials in u with ScalarQ coefficients. This is
// the coefficient ring of the two-parameter Hecke algebra and of the
// HOMFLYPT polynomial. u is never inverted into a rational function; the
// only u-units needed are the monomials u^e.

#pragma once

#include "laurent.hpp"
#include "scalarq.hpp"

namespace qhecke {

using ScalarUQ = Laurent<ScalarQ>;

template <>
struct RingTraits<Laurent<ScalarQ>> {
    static ScalarUQ zero() { return ScalarUQ(); }
    static ScalarUQ one() { return ScalarUQ::one(); }
    static bool is_zero(const ScalarUQ& s) { return s.is_zero(); }
    static ScalarUQ from_rational(const Rational& r) { return ScalarUQ(ScalarQ(r)); }
};

inline ScalarUQ uq_from_q(const ScalarQ& s) { return ScalarUQ(s); }
inline ScalarUQ u_pow(int e) { return ScalarUQ::gen(e); }

// (u^-1 - u)/(q - q^-1), the Markov trace value of 1 in H_{n+1} vs H_n
inline ScalarUQ markov_unknot_factor() {
    ScalarQ inv = (ScalarQ::q_pow(1) - ScalarQ::q_pow(-1)).inverse();
    ScalarUQ r;
    r.add_term(-1, inv);
    r.add_term(1, -inv);
    return r;
}

inline Rational uq_eval(const ScalarUQ& s, const Rational& q0, const Rational& u0) {
    Rational acc(0);
    for (const auto& [e, c] : s.coeffs) acc += c.eval(q0) * rat_pow(u0, e);
    return acc;
}

// Laurent polynomials in an interpolating variable over ScalarUQ; the
// output ring of the T_d invariants.
using ScalarUGQ = Laurent<ScalarUQ>;

template <>
struct RingTraits<Laurent<ScalarUQ>> {
    static ScalarUGQ zero() { return ScalarUGQ(); }
    static ScalarUGQ one() { return ScalarUGQ::one(); }
    static bool is_zero(const ScalarUGQ& s) { return s.is_zero(); }
    static ScalarUGQ from_rational(const Rational& r) {
        return ScalarUGQ(RingTraits<ScalarUQ>::from_rational(r));
    }
};

}  // namespace qhecke
