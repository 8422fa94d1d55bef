// ScalarQ: exact univariate rational functions in q over the rationals,
// stored as a reduced fraction of Laurent polynomials. The denominator is
// an ordinary polynomial with constant term nonzero, monic in its highest
// power; the numerator absorbs q-shifts and rational content.

#pragma once

#include <stdexcept>
#include <string>

#include "laurent.hpp"
#include "rational.hpp"

namespace qhecke {

namespace detail {

// ordinary-polynomial division helpers; inputs have min_exp >= 0
inline LaurentQ poly_rem(LaurentQ a, const LaurentQ& b) {
    while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
        Rational f = a.coeff(a.max_exp()) / b.coeff(b.max_exp());
        int sh = a.max_exp() - b.max_exp();
        for (const auto& [e, c] : b.coeffs) a.add_term(e + sh, -f * c);
    }
    return a;
}

inline LaurentQ poly_gcd(LaurentQ a, LaurentQ b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.min_exp());
    b = b.shifted(-b.min_exp());
    while (!b.is_zero()) {
        LaurentQ r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.shifted(-b.min_exp());
    }
    // monic
    Rational lead = a.coeff(a.max_exp());
    a *= Rational(1) / lead;
    return a;
}

inline LaurentQ poly_div_exact(LaurentQ a, const LaurentQ& b) {
    LaurentQ quo;
    while (!a.is_zero()) {
        if (a.max_exp() < b.max_exp())
            throw std::logic_error("non-exact polynomial division");
        Rational f = a.coeff(a.max_exp()) / b.coeff(b.max_exp());
        int sh = a.max_exp() - b.max_exp();
        quo.add_term(sh, f);
        for (const auto& [e, c] : b.coeffs) a.add_term(e + sh, -f * c);
    }
    return quo;
}

}  // namespace detail

class ScalarQ {
  public:
    LaurentQ num;
    LaurentQ den;  // min_exp 0, monic in highest power; never zero

    ScalarQ() : den(LaurentQ::one()) {}
    ScalarQ(const Rational& r) : num(LaurentQ(r)), den(LaurentQ::one()) {}
    ScalarQ(long n) : ScalarQ(Rational(n)) {}
    explicit ScalarQ(LaurentQ n) : num(std::move(n)), den(LaurentQ::one()) {}
    ScalarQ(LaurentQ n, LaurentQ d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("division by zero in ScalarQ");
        reduce();
    }

    static ScalarQ q_pow(int e) { return ScalarQ(LaurentQ::gen(e)); }
    static ScalarQ q() { return q_pow(1); }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_one(); }

    void reduce() {
        if (num.is_zero()) {
            den = LaurentQ::one();
            return;
        }
        int shift = den.min_exp();
        if (shift != 0) {
            den = den.shifted(-shift);
            num = num.shifted(-shift);
        }
        if (!den.is_one()) {
            LaurentQ g = detail::poly_gcd(num.shifted(-num.min_exp()), den);
            if (!(g.is_zero()) && g.max_exp() > 0) {
                int nm = num.min_exp();
                num = detail::poly_div_exact(num.shifted(-nm), g).shifted(nm);
                den = detail::poly_div_exact(den, g);
            }
        }
        Rational lead = den.coeff(den.max_exp());
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            den *= inv;
            num *= inv;
        }
    }

    ScalarQ& operator+=(const ScalarQ& o) {
        if (den == o.den) {
            num += o.num;
            if (num.is_zero() || den.is_one()) {
                if (num.is_zero()) den = LaurentQ::one();
                return *this;
            }
            reduce();
            return *this;
        }
        num = num * o.den + o.num * den;
        den = den * o.den;
        reduce();
        return *this;
    }
    ScalarQ& operator-=(const ScalarQ& o) { return *this += -o; }
    ScalarQ operator-() const {
        ScalarQ r;
        r.num = -num;
        r.den = den;
        return r;
    }
    ScalarQ& operator*=(const ScalarQ& o) {
        num = num * o.num;
        den = den * o.den;
        reduce();
        return *this;
    }
    ScalarQ& operator/=(const ScalarQ& o) {
        if (o.is_zero()) throw std::domain_error("division by zero in ScalarQ");
        num = num * o.den;
        den = den * o.num;
        int sh = den.min_exp();
        num = num.shifted(-sh);
        den = den.shifted(-sh);
        reduce();
        return *this;
    }
    friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
    friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
    friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
    friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }

    ScalarQ inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero ScalarQ");
        return ScalarQ(den, num);
    }

    bool operator==(const ScalarQ& o) const { return num == o.num && den == o.den; }
    bool operator!=(const ScalarQ& o) const { return !(*this == o); }
    bool operator<(const ScalarQ& o) const {
        if (num != o.num) return num < o.num;
        return den < o.den;
    }

    // evaluation at a nonzero rational point; throws on a pole
    Rational eval(const Rational& q0) const {
        if (sgn(q0) == 0 && (num.is_zero() ? false : num.min_exp() < 0))
            throw std::domain_error("evaluation of q^-1 at 0");
        Rational d = den.eval(q0);
        if (qhecke::is_zero(d)) throw std::domain_error("evaluation at a pole");
        return num.eval(q0) / d;
    }

    std::string str(const std::string& var = "q") const {
        if (is_polynomial()) return num.str(var);
        return num.str(var) + " / " + den.str(var);
    }
};

template <>
struct RingTraits<ScalarQ> {
    static ScalarQ zero() { return ScalarQ(); }
    static ScalarQ one() { return ScalarQ(Rational(1)); }
    static bool is_zero(const ScalarQ& s) { return s.is_zero(); }
    static ScalarQ from_rational(const Rational& r) { return ScalarQ(r); }
};

}  // namespace qhecke
