#pragma once

#include "eqlines/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eqlines {

/// Thrown by Polynomial::eval when the point does not assign a variable.
class MissingVariable : public std::invalid_argument {
public:
    explicit MissingVariable(const std::string& name)
        : std::invalid_argument("no value assigned to variable '" + name + "'"), name_(name) {}
    const std::string& variable() const { return name_; }

private:
    std::string name_;
};

using Point = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are kept in a canonical order: u, v, t, a first, then any other
/// name lexicographically. Exponent vectors always have one slot per variable
/// and zero coefficients are never stored, so two equal polynomials compare
/// equal structurally.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(std::string_view name);
    /// Builds from explicit terms over the given variables (any order).
    static Polynomial from_terms(std::vector<std::string> vars, const TermMap& terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned degree(std::string_view var) const;
    unsigned total_degree() const;
    /// Coefficient of var^e viewed as a polynomial in the remaining variables.
    Polynomial coefficient_of(std::string_view var, unsigned e) const;

    Rational eval(const Point& point) const;
    Polynomial substitute(std::string_view var, const Polynomial& replacement) const;
    Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string str() const;

    /// Same polynomial expressed over a (canonically ordered) superset of its variables.
    Polynomial embed(const std::vector<std::string>& vars) const;
    /// Drops variables that no term uses.
    Polynomial trimmed() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Canonical ordering rank used for variable lists.
bool variable_less(std::string_view a, std::string_view b);
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

inline Rational poly_eval(const Polynomial& p, const Point& point) { return p.eval(point); }
inline Polynomial poly_substitute(const Polynomial& p, std::string_view var,
                                  const Polynomial& replacement) {
    return p.substitute(var, replacement);
}

}  // namespace eqlines
