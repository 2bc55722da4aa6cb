#include "eqlines/rational.hpp"

#include <cmath>
#include <ostream>

namespace eqlines {

Rational::Rational(long long num, long long den) : v_(static_cast<long>(num), 1) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ /= mpq_class(static_cast<long>(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num) : v_(num) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();

    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part == "-" || part == "+") throw bad();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class n = parse_int(s.substr(0, slash));
        mpz_class d = parse_int(s.substr(slash + 1));
        if (d == 0) throw bad();
        return Rational(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty()) throw bad();
        mpz_class w = parse_int(whole);
        mpz_class f = parse_int(frac);
        if (frac[0] == '-' || frac[0] == '+') throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class n = ::abs(w) * scale + f;
        if (negative) n = -n;
        return Rational(n, scale);
    }
    return Rational(parse_int(s));
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational::from_double: non-finite value");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

long double Rational::to_long_double() const {
    // Split into a double head and a double tail for ~106 bits of the value.
    double head = v_.get_d();
    mpq_class rest = v_ - mpq_class(head);
    return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(long top, long bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return r;
}

}  // namespace eqlines
