#include "eqlines/polynomial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace eqlines {

namespace {

int fixed_rank(std::string_view name) {
    static constexpr std::array<std::string_view, 4> order{"u", "v", "t", "a"};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == name) return static_cast<int>(i);
    return static_cast<int>(order.size());
}

void add_term(Polynomial::TermMap& terms, const Polynomial::Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
    int ra = fixed_rank(a), rb = fixed_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out(a);
    for (const auto& name : b)
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return variable_less(x, y); });
    return out;
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(std::string_view name) {
    Polynomial p;
    p.vars_ = {std::string(name)};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, const TermMap& terms) {
    std::vector<std::string> sorted = merge_variables({}, vars);
    if (sorted.size() != vars.size()) throw std::invalid_argument("Polynomial: duplicate variable names");
    std::vector<std::size_t> slot(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
        slot[i] = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
    Polynomial p;
    p.vars_ = sorted;
    for (const auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw std::invalid_argument("Polynomial: exponent length mismatch");
        Exponents ce(sorted.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ce[slot[i]] = e[i];
        add_term(p.terms_, ce, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (unsigned x : e)
            if (x != 0) return false;
    return true;
}

unsigned Polynomial::degree(std::string_view var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::coefficient_of(std::string_view var, unsigned power) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return power == 0 ? *this : Polynomial();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    Polynomial out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + static_cast<std::ptrdiff_t>(idx));
    for (const auto& [e, c] : terms_) {
        if (e[idx] != power) continue;
        Exponents r = e;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
        add_term(out.terms_, r, c);
    }
    return out;
}

Polynomial Polynomial::embed(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) throw std::invalid_argument("Polynomial::embed: variable set is not a superset");
        slot[i] = static_cast<std::size_t>(it - vars.begin());
    }
    Polynomial out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Polynomial Polynomial::trimmed() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return *this;
    Polynomial out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Rational Polynomial::eval(const Point& point) const {
    std::vector<const Rational*> values(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) throw MissingVariable(vars_[i]);
        values[i] = &it->second;
    }
    // Powers are cached per variable; degrees here are small.
    std::vector<std::vector<Rational>> powers(vars_.size(), std::vector<Rational>{Rational(1)});
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * *values[i]);
            if (e[i] != 0) term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::string_view var, const Polynomial& replacement) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    unsigned top = degree(var);
    Polynomial result;
    Polynomial power(1);
    for (unsigned e = 0; e <= top; ++e) {
        Polynomial coeff = coefficient_of(var, e);
        if (!coeff.is_zero()) result += coeff * power;
        if (e < top) power *= replacement;
    }
    return result.trimmed();
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    auto vars = merge_variables(vars_, o.vars_);
    Polynomial self = embed(vars);
    Polynomial other = o.embed(vars);
    for (const auto& [e, c] : other.terms_) add_term(self.terms_, e, c);
    *this = std::move(self);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    auto vars = merge_variables(a.vars_, b.vars_);
    Polynomial x = a.embed(vars), y = b.embed(vars);
    Polynomial out;
    out.vars_ = vars;
    Polynomial::Exponents e(vars.size());
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out.terms_, e, ca * cb);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial ta = a.trimmed(), tb = b.trimmed();
    if (ta.terms_.empty() || tb.terms_.empty()) return ta.terms_.empty() && tb.terms_.empty();
    return ta.vars_ == tb.vars_ && ta.terms_ == tb.terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.rbegin(), terms_.rend());
    for (const auto& [e, c] : sorted) {
        Rational coef = c;
        if (!first) {
            os << (coef.sign() < 0 ? " - " : " + ");
            coef = coef.abs();
        } else if (coef.sign() < 0) {
            os << "-";
            coef = coef.abs();
        }
        first = false;
        bool monomial = false;
        for (unsigned x : e) monomial |= x != 0;
        if (!monomial || coef != Rational(1)) {
            os << coef;
            if (monomial) os << "*";
        }
        bool need_star = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace eqlines
