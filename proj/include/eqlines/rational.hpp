#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eqlines {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& num);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "7", "-3/11", "1654.1" and "-0.25".
    static Rational parse(std::string_view text);
    /// Exact binary value of a finite double.
    static Rational from_double(double x);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& gmp() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;
    std::string str() const { return v_.get_str(); }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(int e) const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Binomial coefficient C(top, bottom); zero when bottom > top or bottom < 0.
mpz_class binomial(long top, long bottom);

}  // namespace eqlines
