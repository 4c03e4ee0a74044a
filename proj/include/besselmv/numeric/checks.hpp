#ifndef BESSELMV_NUMERIC_CHECKS_HPP
#define BESSELMV_NUMERIC_CHECKS_HPP

#include <complex>
#include <string>
#include <vector>

#include "besselmv/bessel.hpp"
#include "besselmv/numeric/weight_series.hpp"

namespace besselmv::numeric {

struct NumericReport {
    std::string case_id;
    std::string equation_tag;
    bool pass = false;
    std::complex<double> value{};
    std::complex<double> reference{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    long nodes = 0;
    uint64_t seed = 0;    // nonzero only for Monte Carlo cases
    double std_err = 0.0;  // Monte Carlo standard error
    std::string detail;
};

// Contour quadrature of the pairing of two Bessel polynomials against the
// truncated weight series, compared with 0 off the diagonal and with the
// exact pairing on it. Needs n = 1, or a positive integer kappa. With
// krall_frink set, both polynomials are rescaled to constant term one.
// Doubling checks on the node count and the truncation guard against an
// inconclusive quadrature; a violation throws.
NumericReport contour_orthogonality_numeric(const Partition& lambda, const Partition& mu, int n,
                                            double a_val, const Rational& kappa,
                                            const QuadratureConfig& cfg, bool krall_frink = false);

// Contour quadrature of the moment of a single Jack polynomial, compared
// with the closed torus moment.
NumericReport torus_moment_numeric(const Partition& nu, int n, double a_val, const Rational& kappa,
                                   const QuadratureConfig& cfg);

// Selberg-type integral on [0,1]^n versus the closed value. Tensor tanh-sinh
// quadrature by default; Monte Carlo with the configured seed when
// monte_carlo is set (pass criterion: two standard errors).
NumericReport kadell_numeric(const Partition& nu, int n, const Rational& alpha, const Rational& beta,
                             const Rational& kappa, const QuadratureConfig& cfg, bool monte_carlo = false);

// Laguerre-type integral on R_+^n versus the closed value (Gauss-Laguerre).
NumericReport laguerre_numeric(const Partition& nu, int n, const Rational& alpha, const Rational& kappa,
                               const QuadratureConfig& cfg);

// Rescaled Selberg values at beta = 10^2, 10^3, 10^4 must approach the
// Laguerre value with strictly decreasing error.
NumericReport laguerre_limit_transition(const Partition& nu, int n, const Rational& alpha,
                                        const Rational& kappa);

// Orthogonality against x^{a-2} e^{-2/x} |x_i-x_j|^{2 kappa} on R_+^n, after
// the change of variables y = 2/x (Gauss-Laguerre or Monte Carlo). Requires
// the admissibility window a < -2(max weight + kappa(n-1)) + 1.
NumericReport l2_orthogonality_numeric(const Partition& lambda, const Partition& mu, int n, double a_val,
                                       const Rational& kappa, const QuadratureConfig& cfg,
                                       bool monte_carlo = false);

// Half-line moment of a Jack polynomial versus the closed value.
NumericReport halfline_moment_numeric(const Partition& nu, int n, const Rational& a_val,
                                      const Rational& kappa, const QuadratureConfig& cfg);

// Numeric spot check of the torus/half-line bridge: contour moment versus
// bridge constant times the closed half-line value, in the displayed or the
// corrected form.
NumericReport bridge_numeric_spot(const Partition& nu, int n, const Rational& a_val, const Rational& kappa,
                                  const QuadratureConfig& cfg, bool corrected);

}  // namespace besselmv::numeric

#endif
