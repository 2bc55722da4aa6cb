#include "eqlines/ratfun.hpp"

#include <sstream>

namespace eqlines {

UniPoly::UniPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, std::string_view var) {
    Polynomial q = p.trimmed();
    if (q.variables().size() > 1 || (q.variables().size() == 1 && q.variables()[0] != var))
        throw std::invalid_argument("UniPoly: polynomial is not univariate in '" + std::string(var) + "'");
    std::vector<Rational> c(q.degree(var) + 1);
    for (const auto& [e, v] : q.terms()) c[e.empty() ? 0 : e[0]] = v;
    return UniPoly(std::move(c));
}

Polynomial UniPoly::to_polynomial(std::string_view var) const {
    Polynomial::TermMap terms;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) terms.emplace(Polynomial::Exponents{static_cast<unsigned>(i)}, c_[i]);
    return Polynomial::from_terms({std::string(var)}, terms).trimmed();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(1), b = *this;
    while (e) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {UniPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
    Rational lead_inv = b.leading().inverse();
    for (int i = da; i >= db; --i) {
        Rational f = rem[static_cast<std::size_t>(i)] * lead_inv;
        q[static_cast<std::size_t>(i - db)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    canonicalize();
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(UniPoly::from_polynomial(num, "a")), den_(UniPoly::from_polynomial(den, "a")) {
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::divmod(num_, g).first;
        den_ = UniPoly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    num_ = num_.scaled(lead.inverse());
    den_ = den_.scaled(lead.inverse());
}

Rational RationalFunction::eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at " + at.str());
    return num_.eval(at) / d;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(den_, num_).pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string RationalFunction::str() const {
    std::ostringstream os;
    os << "(" << numerator().str() << ")/(" << denominator().str() << ")";
    return os.str();
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

bool ratfun_equal(const RationalFunction& f, const RationalFunction& g) {
    return f.num() * g.den() == g.num() * f.den();
}

}  // namespace eqlines
