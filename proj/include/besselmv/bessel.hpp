#ifndef BESSELMV_BESSEL_HPP
#define BESSELMV_BESSEL_HPP

#include <vector>

#include "besselmv/jack.hpp"

namespace besselmv {

// Monic-in-P_lambda eigenfunction of the Bessel-type operator. The Jack
// support is contained in {mu : mu subset of lambda}; the eigen residual is
// verified exactly at construction.
struct BesselPolynomial {
    Partition lambda;
    int n = 0;
    JackExpansion jack_coeffs;
    SymmetricPolynomial monomial_form;
    ParamRational eigenvalue;
};

const BesselPolynomial& bessel_polynomial(const Partition& lambda, int n);

// Closed zero-specialisation Y_lambda(0^n) in its displayed Pochhammer form.
// Rational in both parameters, so the Gamma content is always empty.
// Known to disagree with the eigenfunctions for n >= 2; see
// bessel_at_zero_box_form for the variant the polynomials actually satisfy.
GammaProduct bessel_at_zero(const Partition& lambda, int n);

// Equivalent box-product evaluation of the constant term:
// 2^|lambda| * prod_{i<j} [k(j-i+1)]_{li-lj}/[k(j-i)]_{li-lj}
//            / prod_{(i,j) in lambda} (a-2+l_i+j+k(2n-l'_j-i)).
// Matches the computed constant coefficient of Y_lambda exactly.
ParamRational bessel_at_zero_box_form(const Partition& lambda, int n);

// Constant coefficient of Y_lambda versus the displayed closed form.
bool constant_term_consistency(const Partition& lambda, int n);

// Diagonal value I_mu(mu; k, (a-1)/2 + k n) of the interpolation polynomials.
ParamPolynomial interpolation_diagonal(const Partition& mu, int n);

struct PoleCertificate {
    bool pass = false;
    std::vector<LinearForm> factors;  // with multiplicity, deterministic order
    ParamPolynomial leftover;         // constant iff pass
};

// Trial-divides every coefficient denominator by the allowed pole families
// (q*k + p) and (a - 1 + i*k + m); passes iff nothing else remains.
PoleCertificate pole_certificate(const BesselPolynomial& y);

// Implied interpolation ratios I_mu(lambda)/I_mu(mu) =
// u_{lambda mu} * Y_mu(0^n)/Y_lambda(0^n), emitted as diagnostics.
std::vector<std::pair<Partition, ParamRational>> binomial_ratio_diagnostics(const BesselPolynomial& y);

}  // namespace besselmv

#endif
