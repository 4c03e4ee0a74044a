#include "besselmv/param_rational.hpp"

#include <sstream>

namespace besselmv {

ParamRational::ParamRational(const Rational& c)
    : num_(Rational(c.get_num())), den_(Rational(c.get_den())) {}

ParamRational::ParamRational(const ParamPolynomial& num, const ParamPolynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("ParamRational with zero denominator");
    normalize();
}

void ParamRational::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPolynomial(Rational(1));
        return;
    }
    ParamPolynomial g = ParamPolynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    auto [cn, pn] = num_.rational_content_split();
    auto [cd, pd] = den_.rational_content_split();
    Rational scale = cn / cd;  // canonical: fold p into numerator, q into denominator
    num_ = pn * Rational(scale.get_num());
    den_ = pd * Rational(scale.get_den());
}

Rational ParamRational::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value on non-constant ParamRational");
    return num_.constant_value() / den_.constant_value();
}

ParamRational ParamRational::operator-() const {
    ParamRational r(*this);
    r.num_ = -r.num_;
    return r;
}

ParamRational operator+(const ParamRational& x, const ParamRational& y) {
    return ParamRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ParamRational operator-(const ParamRational& x, const ParamRational& y) {
    return ParamRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

ParamRational operator*(const ParamRational& x, const ParamRational& y) {
    return ParamRational(x.num_ * y.num_, x.den_ * y.den_);
}

ParamRational operator/(const ParamRational& x, const ParamRational& y) {
    if (y.is_zero()) throw std::domain_error("division by zero ParamRational");
    return ParamRational(x.num_ * y.den_, x.den_ * y.num_);
}

ParamRational ParamRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero ParamRational");
    return ParamRational(den_, num_);
}

ParamRational ParamRational::pow(int e) const {
    if (e == 0) return ParamRational(Rational(1));
    ParamRational base = e < 0 ? inverse() : *this;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    ParamRational r(Rational(1));
    while (n > 0) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

ParamRational ParamRational::substitute_a(const Rational& a_val) const {
    ParamPolynomial d = den_.substitute_a(a_val);
    if (d.is_zero()) throw std::domain_error("parameter degeneracy: denominator vanishes at a = " + a_val.get_str() + " (factor " + den_.str() + ")");
    return ParamRational(num_.substitute_a(a_val), d);
}

ParamRational ParamRational::substitute_k(const Rational& k_val) const {
    ParamPolynomial d = den_.substitute_k(k_val);
    if (d.is_zero()) throw std::domain_error("parameter degeneracy: denominator vanishes at k = " + k_val.get_str() + " (factor " + den_.str() + ")");
    return ParamRational(num_.substitute_k(k_val), d);
}

std::complex<double> ParamRational::eval(std::complex<double> a_val, std::complex<double> k_val) const {
    std::complex<double> d = den_.eval(a_val, k_val);
    if (d == std::complex<double>(0.0, 0.0))
        throw std::domain_error("parameter degeneracy: denominator " + den_.str() + " vanishes at evaluation point");
    return num_.eval(a_val, k_val) / d;
}

std::string ParamRational::str() const {
    if (den_ == ParamPolynomial(Rational(1))) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

}  // namespace besselmv
