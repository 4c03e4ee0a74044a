#ifndef BESSELMV_VERIFY_HPP
#define BESSELMV_VERIFY_HPP

#include <string>
#include <vector>

#include "besselmv/moments.hpp"

namespace besselmv {

struct VerificationReport {
    std::string case_id;
    bool pass = false;
    std::string lhs, rhs;
    std::string equation_tag;
    double ms = 0.0;
};

// Exact orthogonality: the rational part of the pairing of two distinct
// Bessel polynomials vanishes identically in Q(a,k).
std::vector<VerificationReport> verify_orthogonality(int n, int max_weight);

// Diagonal values. At n=1 the pairing must equal the closed normalisation
// formula exactly; for every n the ratio K(lambda) = pairing/closed-form is
// checked to be lambda-independent and is reported verbatim.
std::vector<VerificationReport> verify_diagonal_norms(int n, int max_weight);

// torus_moment(nu) = weight_coefficient(nu+(1^n)) * (-2)^{|nu|+n} * jack_norm(nu+(1^n)).
VerificationReport moment_consistency_check(const Partition& nu, int n);
std::vector<VerificationReport> verify_moments(int n, int max_weight);

// Constant-term Jack orthogonality and norms at a fixed integer kappa.
std::vector<VerificationReport> verify_jack_norms(int n, int max_weight, int kappa_int);

// Constant coefficient of Y_lambda against the displayed closed form, plus
// the box-product variant as a diagnostic.
std::vector<VerificationReport> verify_zero_specialisation(int n, int max_weight);

// Pole certificates for all Bessel polynomials in the budget, and for the
// rational parts of their pairings.
std::vector<VerificationReport> verify_rationality(int n, int max_weight);

// Bridge between torus and half-line moments, in the displayed form; the
// corrected-constant variant and the constant itself are reported alongside.
VerificationReport integral_equality_check(const Partition& nu, int n);
std::vector<VerificationReport> verify_integral_equality(int n, int max_weight);

// J_lambda monomial coefficients are polynomials in 1/kappa with nonnegative
// integer coefficients.
std::vector<VerificationReport> verify_jack_integrality(int n, int max_weight);

// Operator triangularity, containment stability in the Jack basis, the
// complement/reciprocal identity and the shift identity.
std::vector<VerificationReport> verify_structural(int n, int max_weight);

// f2_closed related to laguerre_closed through the box complement.
std::vector<VerificationReport> verify_halfline_complement_chain(int n, int max_weight);

}  // namespace besselmv

#endif
