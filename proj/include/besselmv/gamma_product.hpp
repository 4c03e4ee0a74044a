#ifndef BESSELMV_GAMMA_PRODUCT_HPP
#define BESSELMV_GAMMA_PRODUCT_HPP

#include <map>
#include <optional>
#include <string>

#include "besselmv/linear_form.hpp"
#include "besselmv/param_rational.hpp"

namespace besselmv {

// A rational prefactor times a signed multiset of Gamma factors, with an
// optional exponential token 2^(linear form). Values of all closed moment
// formulas live here. Normal form: within each family of arguments that
// differ by integers, only the lowest argument survives (integer shifts are
// folded into the prefactor via Gamma(L+m) = [L]_m Gamma(L)), and the token
// exponent has constant part in [0,1).
class GammaProduct {
public:
    GammaProduct() : prefactor_(Rational(1)) {}
    explicit GammaProduct(const ParamRational& pref) : prefactor_(pref) {}
    explicit GammaProduct(const Rational& c) : GammaProduct(ParamRational(c)) {}

    static GammaProduct gamma(const LinearForm& arg, int power = 1) {
        GammaProduct g;
        if (power != 0) {
            g.gammas_[arg] = power;
            g.normalized_ = false;
        }
        return g;
    }
    static GammaProduct two_pow(const LinearForm& exponent) {
        GammaProduct g;
        g.two_exp_ = exponent;
        g.normalized_ = exponent.is_zero();
        return g;
    }

    const ParamRational& prefactor() const { return prefactor_; }
    const std::map<LinearForm, int>& gammas() const { return gammas_; }
    const LinearForm& two_exponent() const { return two_exp_; }

    bool is_zero() const { return prefactor_.is_zero(); }
    // True when all Gamma content has cancelled and no exponential token remains.
    bool is_rational() const;
    ParamRational rational_value() const;  // requires is_rational() after normalize

    GammaProduct& operator*=(const GammaProduct& o);
    GammaProduct& operator/=(const GammaProduct& o);
    friend GammaProduct operator*(GammaProduct x, const GammaProduct& y) { return x *= y; }
    friend GammaProduct operator/(GammaProduct x, const GammaProduct& y) { return x /= y; }
    GammaProduct& operator*=(const ParamRational& c);
    GammaProduct pow(int e) const;

    // Applies Gamma(L+m) = [L]_m Gamma(L) across the multiset until canonical.
    GammaProduct normalized() const;
    void normalize();

    friend bool gamma_equal(const GammaProduct& g1, const GammaProduct& g2);

    // Exact evaluation at rational parameter values. Every Gamma argument must
    // collapse to a positive integer and the token exponent to an integer;
    // anything else is a domain error.
    Rational exact_value_at(const std::optional<Rational>& a_val, const std::optional<Rational>& k_val) const;

    std::string str() const;

private:
    ParamRational prefactor_;
    std::map<LinearForm, int> gammas_;  // signed: positive = numerator
    LinearForm two_exp_;
    bool normalized_ = true;
};

bool gamma_equal(const GammaProduct& g1, const GammaProduct& g2);

}  // namespace besselmv

#endif
