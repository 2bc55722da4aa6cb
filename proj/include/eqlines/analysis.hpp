#pragma once

#include "eqlines/rational.hpp"

#include <vector>

namespace eqlines {

/// The two King-Tang bound shapes at level k, both exact.
struct CaseBounds {
    long long k = 0;
    long long n_a = 0;  // (2k+3)^2 - 3, where case A is evaluated
    long long n_b = 0;  // (2k+1)^2 - 2
    Rational case_a;    // 4n(k+1)(k+2)/((2k+3)^2 - n) at n = n_a
    Rational case_b;    // n_b(n_b+1)/2
};

/// Requires k >= 1.
CaseBounds case_bounds(long long k);

/// 8/3 (2k^2+6k+3)(k+1)(k+2) and (4k^2+4k-1)(2k^2+2k), the expanded forms.
Rational case_a_expanded(long long k);
Rational case_b_expanded(long long k);

struct Crossover {
    long long k = 0;
    long long n = 0;  // (2k+3)^2 - 3
};
/// Smallest k >= 1 with case A < case B.
Crossover crossover_k();

/// The k with (2k+1)^2 - 2 <= n < (2k+3)^2 - 2. Requires n >= 7.
long long bracket_k(long long n);

/// Whether the main theorem at a = 2k+1 covers every n of bracket k,
/// i.e. 3(2k+1)^2 - 16 >= (2k+3)^2 - 3.
bool main_theorem_covers_bracket(long long k);

struct BracketFact {
    long long k;
    long long lo;        // (2k+1)^2 - 2
    long long hi;        // (2k+3)^2 - 3
    long long theorem_hi;  // 3(2k+1)^2 - 16
    long long value;     // main-theorem bound on the bracket
    bool covered;
};
std::vector<BracketFact> bracket_facts(long long k_lo, long long k_hi);

}  // namespace eqlines
