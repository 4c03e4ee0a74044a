#ifndef BESSELMV_NUMERIC_QUADRATURE_HPP
#define BESSELMV_NUMERIC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace besselmv::numeric {

// Mean of f over points_per_circle equally spaced nodes starting at angle 0;
// exact for Laurent monomials x^m with |m| < points_per_circle.
std::complex<double> circle_mean(int points_per_circle,
                                 const std::function<std::complex<double>(std::complex<double>)>& f);

struct QuadNode {
    double x, w;
};

// tanh-sinh nodes and weights on (0, 1); node count grows with the level.
std::vector<QuadNode> tanh_sinh_points(int level);

// Adaptive tanh-sinh on (0, 1): doubles the level until the result is stable
// to target_rel (handles endpoint algebraic singularities).
double tanh_sinh_01(const std::function<double(double)>& f, double target_rel, int max_level = 12);

// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on (0, inf);
// exact for polynomials of degree <= 2 npoints - 1. Requires alpha > -1.
std::vector<QuadNode> gauss_laguerre(int npoints, double alpha);

}  // namespace besselmv::numeric

#endif
