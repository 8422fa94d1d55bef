// Sparse Laurent polynomials in one variable over a coefficient ring R.
// Instantiated as Laurent<Rational> (polynomials in q, or in t for the
// Hilbert series work) and as Laurent<ScalarQ> (polynomials in u, and in
// the interpolating variable of the Yokonuma invariants).

#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"

namespace qhecke {

template <class R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
    static bool is_zero(const R& r) { return r == R(0); }
    static R from_rational(const Rational& r) { return R(r); }
};

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return sgn(r) == 0; }
    static Rational from_rational(const Rational& r) { return r; }
};

template <class R>
class Laurent {
  public:
    // exponent -> coefficient, no zero coefficients stored
    std::map<int, R> coeffs;

    Laurent() = default;
    explicit Laurent(const R& c) {
        if (!RingTraits<R>::is_zero(c)) coeffs.emplace(0, c);
    }
    static Laurent monomial(int e, const R& c) {
        Laurent p;
        if (!RingTraits<R>::is_zero(c)) p.coeffs.emplace(e, c);
        return p;
    }
    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(RingTraits<R>::one()); }
    static Laurent gen(int e = 1) { return monomial(e, RingTraits<R>::one()); }

    bool is_zero() const { return coeffs.empty(); }
    bool is_one() const {
        return coeffs.size() == 1 && coeffs.begin()->first == 0 &&
               coeffs.begin()->second == RingTraits<R>::one();
    }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero");
        return coeffs.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero");
        return coeffs.rbegin()->first;
    }
    R coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? RingTraits<R>::zero() : it->second;
    }

    void add_term(int e, const R& c) {
        if (RingTraits<R>::is_zero(c)) return;
        auto [it, fresh] = coeffs.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (RingTraits<R>::is_zero(it->second)) coeffs.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : coeffs) r.coeffs.emplace(e, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs)
            for (const auto& [eb, cb] : b.coeffs) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator*=(const R& s) {
        if (RingTraits<R>::is_zero(s)) {
            coeffs.clear();
            return *this;
        }
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            it->second *= s;
            if (RingTraits<R>::is_zero(it->second))
                it = coeffs.erase(it);
            else
                ++it;
        }
        return *this;
    }
    friend Laurent operator*(Laurent a, const R& s) { return a *= s; }

    Laurent shifted(int d) const {
        Laurent r;
        for (const auto& [e, c] : coeffs) r.coeffs.emplace(e + d, c);
        return r;
    }

    bool operator==(const Laurent& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return coeffs < o.coeffs; }

    // substitute var -> var^-1
    Laurent invert_var() const {
        Laurent r;
        for (const auto& [e, c] : coeffs) r.coeffs.emplace(-e, c);
        return r;
    }

    template <class S>
    S eval(const S& x) const {
        if (is_zero()) return S(0);
        S acc(0);
        S xp(1);
        int cur = 0;
        // exponents ascending; negative handled by inverse
        S xinv(0);
        if (min_exp() < 0) xinv = S(1) / x;
        for (const auto& [e, c] : coeffs) {
            while (cur < e) {
                xp = xp * x;
                ++cur;
            }
            while (cur > e) {
                xp = xp * xinv;
                --cur;
            }
            acc += S(c) * xp;
        }
        return acc;
    }

    // canonical text form: terms ascending by exponent, "c*v^e" with the
    // constant term printed bare, e.g. "-1*q^-1 + 2 + 1*q^3". Nested
    // coefficient rings are printed in parentheses with variable `inner`.
    std::string str(const std::string& var = "q",
                    const std::string& inner = "q") const;
};

template <class R>
std::string Laurent<R>::str(const std::string& var, const std::string& inner) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        std::string body;
        bool negative = false;
        if constexpr (std::is_same_v<R, Rational>) {
            Rational a = c;
            if (sgn(a) < 0) {
                negative = true;
                a = -a;
            }
            body = a.get_str();
            if (e != 0) body += "*" + var + "^" + std::to_string(e);
        } else {
            body = "(" + c.str(inner) + ")";
            if (e != 0) body += "*" + var + "^" + std::to_string(e);
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

using LaurentQ = Laurent<Rational>;

}  // namespace qhecke
