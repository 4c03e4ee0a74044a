#ifndef BESSELMV_NUMERIC_WEIGHT_SERIES_HPP
#define BESSELMV_NUMERIC_WEIGHT_SERIES_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "besselmv/rational.hpp"

namespace besselmv::numeric {

struct QuadratureConfig {
    int points_per_circle = 128;
    int truncation_weight = 36;
    double tolerance = 1e-10;
    uint64_t seed = 12345;
    long mc_samples = 200000;
};

// Numeric table of the bare weight series sum_lambda c_lambda P_lambda(-2/x)
// (the contour prefactor is applied by the caller), organised by weight shell
// so the empirical tail rule can be monitored. Requires rational kappa so the
// Jack polynomials can be specialised exactly before substitution; kappa must
// be a positive integer for n >= 2 (single-valuedness of the full weight).
class WeightSeriesEvaluator {
public:
    WeightSeriesEvaluator(int n, std::complex<double> a_val, const Rational& kappa, int truncation_weight,
                          double tolerance);

    // Sums all shells; throws on non-convergence (the last three shells
    // non-decreasing, or the final shell contributing more than tolerance/10
    // of the total in magnitude).
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    // Same with the truncation lowered, for truncation-stability checks.
    std::complex<double> eval_up_to(const std::vector<std::complex<double>>& x, int max_weight) const;

    int truncation_weight() const { return static_cast<int>(shells_.size()) - 1; }
    double last_tail_estimate() const { return last_tail_; }
    int last_effective_weight() const { return last_weight_; }

private:
    struct Term {
        std::vector<int> exponents;  // already negated: P_lambda(-2/x) terms
        std::complex<double> coeff;
    };
    int n_;
    double tolerance_;
    std::vector<std::vector<Term>> shells_;  // index = |lambda|
    mutable double last_tail_ = 0.0;
    mutable int last_weight_ = 0;
};

}  // namespace besselmv::numeric

#endif
