#pragma once

#include "eqlines/polynomial.hpp"

#include <string>
#include <vector>

namespace eqlines {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(int c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    /// Converts a polynomial in at most one variable `var`.
    static UniPoly from_polynomial(const Polynomial& p, std::string_view var);
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    Polynomial to_polynomial(std::string_view var) const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Rational& s) const;
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;

    /// Quotient and remainder; throws on division by zero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    /// Monic greatest common divisor (zero if both are zero).
    static UniPoly gcd(UniPoly a, UniPoly b);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Rational function in the single indeterminate `a`, kept in canonical form:
/// numerator and denominator coprime and the denominator monic.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    RationalFunction(const UniPoly& num, const UniPoly& den);
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction a() { return RationalFunction(UniPoly::x(), UniPoly(1)); }

    Polynomial numerator() const { return num_.to_polynomial("a"); }
    Polynomial denominator() const { return den_.to_polynomial("a"); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    Rational eval(const Rational& at) const;
    RationalFunction pow(int e) const;
    std::string str() const;

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

private:
    void canonicalize();
    UniPoly num_;
    UniPoly den_;
};

/// True iff f·den(g) and g·den(f) are the same polynomial.
bool ratfun_equal(const RationalFunction& f, const RationalFunction& g);

}  // namespace eqlines
