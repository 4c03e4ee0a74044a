#include "besselmv/numeric/weight_series.hpp"

#include <stdexcept>

#include "besselmv/jack.hpp"
#include "besselmv/moments.hpp"
#include "besselmv/numeric/gamma.hpp"

namespace besselmv::numeric {

WeightSeriesEvaluator::WeightSeriesEvaluator(int n, std::complex<double> a_val, const Rational& kappa,
                                             int truncation_weight, double tolerance)
    : n_(n), tolerance_(tolerance) {
    if (n >= 2 && (!is_integer(kappa) || kappa < 1))
        throw std::invalid_argument("weight series for n >= 2 needs a positive integer kappa");
    const std::complex<double> k_val(to_double(kappa), 0.0);
    shells_.resize(truncation_weight + 1);
    for (int w = 0; w <= truncation_weight; ++w) {
        for (const auto& lambda : partitions_of_weight(w, n)) {
            const std::complex<double> c =
                substitute(weight_coefficient(lambda, n), a_val, k_val) *
                std::pow(std::complex<double>(-2.0, 0.0), lambda.weight());
            // P_lambda(-2/x) = (-2)^{|lambda|} P_lambda(1/x) by homogeneity.
            const ExponentPolynomial expanded = jack_polynomial_at(lambda, n, kappa).expand();
            for (const auto& [e, coeff] : expanded.terms()) {
                Term t;
                t.exponents.resize(n);
                for (int i = 0; i < n; ++i) t.exponents[i] = e[i];
                t.coeff = c * coeff.eval(a_val, k_val);
                shells_[w].push_back(std::move(t));
            }
        }
    }
}

std::complex<double> WeightSeriesEvaluator::eval(const std::vector<std::complex<double>>& x) const {
    return eval_up_to(x, static_cast<int>(shells_.size()) - 1);
}

std::complex<double> WeightSeriesEvaluator::eval_up_to(const std::vector<std::complex<double>>& x,
                                                       int max_weight) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point length mismatch");
    max_weight = std::min<int>(max_weight, static_cast<int>(shells_.size()) - 1);
    // Power tables of 1/x_i up to the largest shell weight.
    std::vector<std::vector<std::complex<double>>> inv_pow(n_);
    for (int i = 0; i < n_; ++i) {
        inv_pow[i].resize(max_weight + 1);
        inv_pow[i][0] = 1.0;
        const std::complex<double> inv = 1.0 / x[i];
        for (int p = 1; p <= max_weight; ++p) inv_pow[i][p] = inv_pow[i][p - 1] * inv;
    }
    std::complex<double> sum = 0.0;
    std::vector<double> shell_mag(max_weight + 1, 0.0);
    for (int w = 0; w <= max_weight; ++w) {
        std::complex<double> shell = 0.0;
        for (const auto& t : shells_[w]) {
            std::complex<double> v = t.coeff;
            for (int i = 0; i < n_; ++i) v *= inv_pow[i][t.exponents[i]];
            shell += v;
        }
        sum += shell;
        shell_mag[w] = std::abs(shell);
    }
    const double scale = std::abs(sum);
    last_tail_ = scale > 0.0 ? shell_mag[max_weight] / scale : 0.0;
    last_weight_ = max_weight;
    if (max_weight >= 3 && shell_mag[max_weight] >= shell_mag[max_weight - 1] &&
        shell_mag[max_weight - 1] >= shell_mag[max_weight - 2] && shell_mag[max_weight] > 0.0)
        throw std::runtime_error("weight series shells are not decreasing at the truncation point");
    if (last_tail_ >= tolerance_ / 10.0)
        throw std::runtime_error("weight series truncation exhausted before the tail rule was met");
    return sum;
}

}  // namespace besselmv::numeric
