#pragma once

#include "eqlines/polynomial.hpp"

#include <memory>

namespace eqlines {

/// P_k^n normalized by P_k^n(1) = 1, as a polynomial in u.
struct GegenbauerPoly {
    int dim = 0;
    int degree = 0;
    Polynomial poly;
    std::vector<Rational> coeffs;  // coeffs[j] multiplies u^j
};

/// Memoized; safe to call from concurrent threads. Throws std::domain_error for n < 2.
const GegenbauerPoly& gegenbauer(int n, int k);

/// Exact P_k^n(u) by the three-term value recurrence (no polynomial built).
Rational gegenbauer_eval(int n, int k, const Rational& u);

/// P_0^n(u), ..., P_kmax^n(u).
std::vector<Rational> gegenbauer_values(int n, int kmax, const Rational& u);

/// Dense coefficients c_0..c_k of P_k^n in u.
std::vector<Rational> gegenbauer_coefficients(int n, int k);

}  // namespace eqlines
