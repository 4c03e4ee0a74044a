#include "besselmv/numeric/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace besselmv::numeric {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool near_nonpositive_integer(std::complex<double> z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

}  // namespace

std::complex<double> gamma_eval(std::complex<double> z) {
    using std::numbers::pi;
    if (near_nonpositive_integer(z)) throw std::domain_error("gamma_eval at a non-positive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return pi / (std::sin(pi * z) * gamma_eval(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> substitute(const ParamRational& value, std::complex<double> a_val,
                                std::complex<double> k_val) {
    return value.eval(a_val, k_val);
}

std::complex<double> substitute(const GammaProduct& value, std::complex<double> a_val,
                                std::complex<double> k_val) {
    GammaProduct g = value.normalized();
    std::complex<double> result = g.prefactor().eval(a_val, k_val);
    for (const auto& [form, cnt] : g.gammas()) {
        std::complex<double> gv = gamma_eval(form.eval(a_val, k_val));
        for (int i = 0; i < cnt; ++i) result *= gv;
        for (int i = 0; i > cnt; --i) result /= gv;
    }
    if (!g.two_exponent().is_zero())
        result *= std::exp(std::numbers::ln2 * g.two_exponent().eval(a_val, k_val));
    return result;
}

}  // namespace besselmv::numeric
