#ifndef BESSELMV_JACK_HPP
#define BESSELMV_JACK_HPP

#include <map>
#include <utility>

#include "besselmv/gamma_product.hpp"
#include "besselmv/sympoly.hpp"

namespace besselmv {

// Coordinates in the Jack basis {P_mu}.
struct JackExpansion {
    int n = 0;
    std::map<Partition, ParamRational> coeffs;

    bool operator==(const JackExpansion& o) const { return n == o.n && coeffs == o.coeffs; }
};

// P_lambda = m_lambda + sum_{mu < lambda} u_mu m_mu, the unique eigenfunction
// of the Sutherland-type operator with monic leading term. Symbolic in kappa;
// results are memoised and safe for concurrent readers.
SymmetricPolynomial jack_polynomial(const Partition& lambda, int n);

// Same with kappa specialised to a rational value (needed for integer-kappa
// torus pairings and for numeric weight-series tables).
SymmetricPolynomial jack_polynomial_at(const Partition& lambda, int n, const Rational& kappa);

JackExpansion to_jack_basis(const SymmetricPolynomial& f);
JackExpansion to_jack_basis_at(const SymmetricPolynomial& f, const Rational& kappa);
SymmetricPolynomial from_jack_basis(const JackExpansion& e);
SymmetricPolynomial from_jack_basis_at(const JackExpansion& e, const Rational& kappa);

// <P_lambda, P_lambda>'_n as a product of four Gamma factors per pair i<j.
GammaProduct jack_norm_closed(const Partition& lambda, int n);

// (1/n!) * constant term of f(x) g(1/x) prod_{i!=j} (1 - x_i/x_j)^kappa,
// computed by exact Laurent expansion. Requires integer kappa >= 1 and
// coefficients free of both parameters after substituting kappa.
Rational torus_pairing_integer_kappa(const SymmetricPolynomial& f, const SymmetricPolynomial& g,
                                     int kappa_int);

// Integral form J_lambda = kappa^{-|lambda|} h^lambda P_lambda together with
// the box product h^lambda.
std::pair<SymmetricPolynomial, ParamRational> jack_integral_form(const Partition& lambda, int n);

// Closed principal specialisation J_lambda(1^n).
ParamRational jack_integral_one(const Partition& lambda, int n);

// Verifies (y_1...y_n)^N P_nu(1/y) = P_nuhat(y) exactly in Q(kappa).
bool reciprocal_complement_check(const Partition& nu, int box_width, int n);

}  // namespace besselmv

#endif
