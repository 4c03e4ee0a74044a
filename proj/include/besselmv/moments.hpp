#ifndef BESSELMV_MOMENTS_HPP
#define BESSELMV_MOMENTS_HPP

#include <vector>

#include "besselmv/bessel.hpp"
#include "besselmv/gamma_product.hpp"

namespace besselmv {

// Coefficient of P_lambda(-2/x) in the weight series, without the contour
// prefactor: prod_{i<j} G(k(j-i)+li-lj+1)/G(k(j-i-1)+li-lj+1)
//          * prod_i G(ki)G(a+k(2n-i-1)) / (G(k)G(a-1+k(2n-i-1)+li)).
GammaProduct weight_coefficient(const Partition& lambda, int n);

// Closed torus moment of P_nu against the weight:
// (-2)^{|nu|+n} prod_{i<j} G(k(j-i+1)+d)/G(k(j-i)+d)
//             * prod_i G(ki)G(a+k(2n-i-1)) / (G(k)G(a+k(2n-i-1)+nu_i)).
GammaProduct torus_moment(const Partition& nu, int n);

// The nu-independent Gamma factor G0(n) = torus_moment(empty).
GammaProduct torus_moment_base(int n);

// R(nu) = torus_moment(nu)/G0(n), always rational:
// (-2)^{|nu|} prod_{i<j} [k(j-i+1)]_d/[k(j-i)]_d * prod_i 1/[a+k(2n-i-1)]_{nu_i}.
ParamRational torus_moment_ratio(const Partition& nu, int n);

struct MomentEntry {
    Partition nu;
    GammaProduct value;
    ParamRational ratio;
};
// Moments for all |nu| <= max_weight, length <= n, in enumeration order.
std::vector<MomentEntry> moment_table(int n, int max_weight);

// Pairing against the weight: expands f*g in the Jack basis and sums the
// closed moments, keeping the rational part separate from G0(n).
struct WPairing {
    GammaProduct value;          // G0(n) * rational_part
    ParamRational rational_part;  // sum over nu of c_nu R(nu)
};
WPairing w_pairing(const SymmetricPolynomial& f, const SymmetricPolynomial& g, int n);

// Right-hand side of the diagonal normalisation formula (pure Pochhammer).
ParamRational normfactor_rhs(const Partition& lambda, int n);

// Closed half-line moment of P_nu against the weight
// prod x^{a-2} e^{-2/x} prod |x_i-x_j|^{2k} / n!.
GammaProduct f2_closed(const Partition& nu, int n);

// The constant bridging the torus and half-line moments, in its displayed
// form (-1)^n 2^{-(a-2)n-k n(n-1)} prod_i G(k)/(G(ki) G(-a+1-k(2n-i-1))).
GammaProduct bridge_constant_displayed(int n);
// Variant with the kappa Gamma ratio inverted; this one makes the bridge an
// identity for every n (the displayed form only at n=1).
GammaProduct bridge_constant_corrected(int n);

// Selberg-type integral of P_nu against y^{alpha-1}(1-y)^{beta-1} on [0,1]^n.
GammaProduct kadell_closed(const Partition& nu, int n, const LinearForm& alpha, const LinearForm& beta);

// Its beta -> infinity limit: P_nu against y^{alpha-1} e^{-y} on R_+^n.
GammaProduct laguerre_closed(const Partition& nu, int n, const LinearForm& alpha);

}  // namespace besselmv

#endif
