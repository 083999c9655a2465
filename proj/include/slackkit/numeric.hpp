#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "slackkit/errors.hpp"

namespace slackkit {

// All scalar arithmetic in the library is exact.  Rationals are GMP
// rationals (always kept in canonical form: coprime, positive
// denominator); the only irrational field used anywhere is Q(sqrt 5).
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& x) { return sgn(x); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Parses "p/q" or "p" (decimal digits, optional leading '-').
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("invalid rational literal '" + std::string(s) + "'");
    }
    Rational q;
    if (q.set_str(std::string(s), 10) != 0)
        throw ParseError("invalid rational literal '" + std::string(s) + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
// Representation is unique since sqrt(5) is irrational.
struct QuadExt {
    Rational a;
    Rational b;

    QuadExt() : a(0), b(0) {}
    QuadExt(Rational rational_part) : a(std::move(rational_part)), b(0) {}
    QuadExt(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    QuadExt(long v) : a(v), b(0) {}
    QuadExt(int v) : a(v), b(0) {}

    static QuadExt sqrt5() { return QuadExt(Rational(0), Rational(1)); }
    // golden ratio (1+sqrt5)/2
    static QuadExt phi() { return QuadExt(Rational(1, 2), Rational(1, 2)); }
    // the two roots of x^2 + x - 1
    static QuadExt alpha1() { return QuadExt(Rational(-1, 2), Rational(1, 2)); }
    static QuadExt alpha2() { return QuadExt(Rational(-1, 2), Rational(-1, 2)); }

    bool is_rational() const { return sgn(b) == 0; }

    QuadExt conjugate() const { return QuadExt(a, -b); }

    // field norm a^2 - 5 b^2; zero only for the zero element
    Rational norm() const { return a * a - 5 * b * b; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b);
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        Rational n = y.norm();
        if (sgn(n) == 0) throw DivisionByZero();
        QuadExt z = x * y.conjugate();
        return QuadExt(z.a / n, z.b / n);
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

// Sign under the real embedding sqrt(5) > 0, decided without floating
// point: when a and b disagree in sign, compare a^2 against 5 b^2.
inline int sign_of(const QuadExt& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    return sa * sgn(x.a * x.a - 5 * x.b * x.b);
}

inline bool is_zero(const QuadExt& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

inline int compare(const QuadExt& x, const QuadExt& y) { return sign_of(x - y); }

inline std::string to_string(const QuadExt& x) {
    if (x.is_rational()) return x.a.get_str();
    std::string s;
    if (sgn(x.a) != 0) s += x.a.get_str();
    if (sgn(x.b) > 0 && !s.empty()) s += "+";
    if (x.b == -1)
        s += "-";
    else if (x.b != 1)
        s += x.b.get_str() + "*";
    s += "sqrt(5)";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << to_string(x);
}

// Uniform scalar interface used by the generic linear algebra.
template <typename K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static constexpr const char* name() { return "rational"; }
};

template <>
struct scalar_traits<QuadExt> {
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(Rational(1)); }
    static bool is_zero(const QuadExt& x) { return slackkit::is_zero(x); }
    static constexpr const char* name() { return "quadext"; }
};

} // namespace slackkit
