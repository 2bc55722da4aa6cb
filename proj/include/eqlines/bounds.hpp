#pragma once

#include "eqlines/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

enum class BoundMethod { gerzon, neumann, relative, main_theorem, relaxation_certificate, sdp };
std::string to_string(BoundMethod m);

/// Replay of the multiplier argument bounding 1 + A at n = 3/a^2 - 16.
struct ProofChainCertificate {
    Rational a;
    Rational n_sub;
    Rational t;
    Rational combined_coeff;  // common coefficient of B and C after t*(S1 row) + (S3 row)
    Rational bound_on_A;
    Rational final_bound;
    std::vector<std::string> checked;  // names of the steps that passed, in order
};

/// Raised when an exact identity or sign condition of the proof chain fails.
class CertificateError : public std::runtime_error {
public:
    CertificateError(std::string step, const std::string& detail)
        : std::runtime_error("proof chain step '" + step + "' failed: " + detail), step_(std::move(step)) {}
    const std::string& step() const { return step_; }

private:
    std::string step_;
};

struct BoundResult {
    Rational value;  // real upper bound; M <= floor(value)
    BoundMethod method = BoundMethod::gerzon;
    std::optional<ProofChainCertificate> certificate;

    mpz_class line_bound() const { return value.floor(); }
};

/// n(n+1)/2.
long long gerzon_bound(long long n);
/// 2n unless 1/alpha is an odd integer.
std::optional<long long> neumann_bound(long long n, const Rational& alpha);
/// n(1 - alpha^2)/(1 - n alpha^2) when the denominator is positive.
std::optional<Rational> relative_bound(long long n, const Rational& alpha);

struct MainTheoremRange {
    long long lo;
    long long hi;
    long long value;
};
/// Throws std::domain_error for a < 3.
MainTheoremRange main_theorem_range(long long a);
/// (a^2-2)(a^2-1)/2 when a^2-2 <= n <= 3a^2-16.
std::optional<long long> main_theorem_bound(long long a, long long n);

/// Exact replay at cosine a, 0 < a <= 1/3. `t_perturbation` is added to the
/// multiplier (fault injection; any nonzero value must make the chain fail).
ProofChainCertificate verify_proof_chain(const Rational& a, const Rational& t_perturbation = Rational(0));

/// Same identities in the field Q(a). `t_perturbation` is added to t.
bool verify_proof_chain_symbolic(const Rational& t_perturbation = Rational(0));

/// det W(x) = B + C - A(A-1) as a polynomial identity in x1..x6.
bool verify_det_w_identity();

/// Row coefficients of the diagonal-entry constraints, normalized so A has
/// coefficient 1: A + b*B + c*C >= 0.
struct RelaxationRow {
    Rational b;
    Rational c;
};
/// k = 3 row from the closed forms, valid for rational n > 3.
RelaxationRow s3_row(const Rational& n, const Rational& a);
/// k = 1 row from the general kernel.
RelaxationRow s1_row(int n, const Rational& a);

/// max 1 + A subject to the two rows, A(A-1) <= B + C and B, C >= 0, solved
/// exactly. Empty when the relaxation is unbounded. Requires n >= 4, 0 < alpha < 1.
std::optional<Rational> relaxation_bound(int n, const Rational& alpha);

/// Minimum over applicable methods. Ties prefer main_theorem, relative,
/// neumann, relaxation_certificate, sdp, gerzon in that order.
/// `sdp_upper` is a numerical upper bound; it enters as its ceiling.
BoundResult best_bound(long long n, const Rational& alpha, std::optional<long double> sdp_upper = std::nullopt);

}  // namespace eqlines
