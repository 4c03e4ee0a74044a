#include "besselmv/numeric/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace besselmv::numeric {

std::complex<double> circle_mean(int points_per_circle,
                                 const std::function<std::complex<double>(std::complex<double>)>& f) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < points_per_circle; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / points_per_circle;
        sum += f(std::polar(1.0, theta));
    }
    return sum / static_cast<double>(points_per_circle);
}

std::vector<QuadNode> tanh_sinh_points(int level) {
    // h = 2^-level; nodes x = (1 + tanh(pi/2 sinh(t)))/2 for t = k h. The
    // left node is computed as 1/(1+e^{2s}) to stay accurate near 0.
    const double h = std::ldexp(1.0, -level);
    std::vector<QuadNode> nodes;
    const double half_pi = 0.5 * std::numbers::pi;
    for (int k = 0;; ++k) {
        const double t = k * h;
        const double s = half_pi * std::sinh(t);
        const double w = h * half_pi * std::cosh(t) / (std::cosh(s) * std::cosh(s));
        const double left = 1.0 / (1.0 + std::exp(2.0 * s));
        const double right = 1.0 - left;
        if (w < 1e-18 || left <= 0.0 || right >= 1.0) break;
        nodes.push_back({right, w});
        if (k > 0) nodes.push_back({left, w});
        if (k > 1000000) throw std::logic_error("tanh-sinh node generation ran away");
    }
    return nodes;
}

double tanh_sinh_01(const std::function<double(double)>& f, double target_rel, int max_level) {
    double prev = 0.0;
    bool have_prev = false;
    for (int level = 5; level <= max_level; ++level) {
        double sum = 0.0;
        for (const auto& nd : tanh_sinh_points(level)) sum += nd.w * f(nd.x);
        if (have_prev) {
            const double scale = std::max(std::abs(sum), std::abs(prev));
            if (scale == 0.0 || std::abs(sum - prev) <= target_rel * scale) return sum;
        }
        prev = sum;
        have_prev = true;
    }
    return prev;
}

std::vector<QuadNode> gauss_laguerre(int npoints, double alpha) {
    if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre needs alpha > -1");
    // Golub-Welsch on the Jacobi matrix of the generalized Laguerre weight.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(npoints, npoints);
    for (int i = 0; i < npoints; ++i) {
        jacobi(i, i) = 2.0 * i + alpha + 1.0;
        if (i + 1 < npoints) {
            const double b = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
            jacobi(i, i + 1) = b;
            jacobi(i + 1, i) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    const double mu0 = std::tgamma(alpha + 1.0);
    std::vector<QuadNode> nodes(npoints);
    for (int i = 0; i < npoints; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        nodes[i] = {solver.eigenvalues()(i), mu0 * v0 * v0};
    }
    return nodes;
}

}  // namespace besselmv::numeric
