#ifndef BESSELMV_NUMERIC_GAMMA_HPP
#define BESSELMV_NUMERIC_GAMMA_HPP

#include <complex>

#include "besselmv/gamma_product.hpp"

namespace besselmv::numeric {

// Gamma function on the complex plane (Lanczos approximation, reflection for
// Re z < 1/2); 13+ significant digits away from the poles.
std::complex<double> gamma_eval(std::complex<double> z);

// Floating substitution of exact values at a parameter point.
std::complex<double> substitute(const ParamRational& value, std::complex<double> a_val,
                                std::complex<double> k_val);
std::complex<double> substitute(const GammaProduct& value, std::complex<double> a_val,
                                std::complex<double> k_val);

}  // namespace besselmv::numeric

#endif
