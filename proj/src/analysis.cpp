#include "eqlines/analysis.hpp"

#include "eqlines/bounds.hpp"

#include <stdexcept>
#include <string>

namespace eqlines {

CaseBounds case_bounds(long long k) {
    if (k < 1) throw std::domain_error("case_bounds: requires k >= 1");
    CaseBounds c;
    c.k = k;
    c.n_a = (2 * k + 3) * (2 * k + 3) - 3;
    c.n_b = (2 * k + 1) * (2 * k + 1) - 2;
    c.case_a = Rational(4 * c.n_a * (k + 1) * (k + 2)) / Rational((2 * k + 3) * (2 * k + 3) - c.n_a);
    c.case_b = Rational(c.n_b * (c.n_b + 1) / 2);
    return c;
}

Rational case_a_expanded(long long k) {
    return Rational(8, 3) * Rational(2 * k * k + 6 * k + 3) * Rational((k + 1) * (k + 2));
}

Rational case_b_expanded(long long k) { return Rational(4 * k * k + 4 * k - 1) * Rational(2 * k * k + 2 * k); }

Crossover crossover_k() {
    // case A grows like 16k^4/3 and case B like 8k^4, so the search ends quickly.
    for (long long k = 1;; ++k) {
        CaseBounds c = case_bounds(k);
        if (c.case_a < c.case_b) return {k, c.n_a};
    }
}

long long bracket_k(long long n) {
    if (n < 7) throw std::domain_error("bracket_k: requires n >= 7, got " + std::to_string(n));
    long long k = 1;
    while ((2 * k + 3) * (2 * k + 3) - 2 <= n) ++k;
    return k;
}

bool main_theorem_covers_bracket(long long k) {
    long long a = 2 * k + 1;
    return 3 * a * a - 16 >= (2 * k + 3) * (2 * k + 3) - 3;
}

std::vector<BracketFact> bracket_facts(long long k_lo, long long k_hi) {
    std::vector<BracketFact> out;
    for (long long k = k_lo; k <= k_hi; ++k) {
        long long a = 2 * k + 1;
        MainTheoremRange r = main_theorem_range(a);
        out.push_back({k, a * a - 2, (2 * k + 3) * (2 * k + 3) - 3, r.hi, r.value, main_theorem_covers_bracket(k)});
    }
    return out;
}

}  // namespace eqlines
