#ifndef BESSELMV_LINEAR_FORM_HPP
#define BESSELMV_LINEAR_FORM_HPP

#include <complex>
#include <string>

#include "besselmv/param_poly.hpp"

namespace besselmv {

// c0 + ca*a + ck*k; the argument type of every symbolic Gamma factor.
struct LinearForm {
    Rational c0{0}, ca{0}, ck{0};

    LinearForm() = default;
    LinearForm(Rational c0_, Rational ca_, Rational ck_)
        : c0(std::move(c0_)), ca(std::move(ca_)), ck(std::move(ck_)) {}

    static LinearForm constant(const Rational& c) { return LinearForm(c, Rational(0), Rational(0)); }
    // c0 + ca*a + ck*k with integer-friendly construction.
    static LinearForm make(long c0_, long ca_ = 0, long ck_ = 0) {
        return LinearForm(Rational(c0_), Rational(ca_), Rational(ck_));
    }

    bool is_zero() const { return c0 == 0 && ca == 0 && ck == 0; }
    bool is_constant() const { return ca == 0 && ck == 0; }

    LinearForm operator+(const LinearForm& o) const { return {c0 + o.c0, ca + o.ca, ck + o.ck}; }
    LinearForm operator-(const LinearForm& o) const { return {c0 - o.c0, ca - o.ca, ck - o.ck}; }
    LinearForm operator-() const { return {-c0, -ca, -ck}; }
    LinearForm operator*(const Rational& s) const { return {c0 * s, ca * s, ck * s}; }
    LinearForm shifted(const Rational& d) const { return {c0 + d, ca, ck}; }

    bool operator==(const LinearForm& o) const = default;
    bool operator<(const LinearForm& o) const {
        if (ca != o.ca) return ca < o.ca;
        if (ck != o.ck) return ck < o.ck;
        return c0 < o.c0;
    }

    ParamPolynomial to_poly() const {
        ParamPolynomial p;
        p.set_term(0, 0, c0);
        p.set_term(1, 0, ca);
        p.set_term(0, 1, ck);
        return p;
    }

    std::complex<double> eval(std::complex<double> a_val, std::complex<double> k_val) const {
        return to_double(c0) + to_double(ca) * a_val + to_double(ck) * k_val;
    }

    std::string str() const;
};

// Rising factorial [L]_m = L(L+1)...(L+m-1); [L]_0 = 1.
inline ParamPolynomial pochhammer(const LinearForm& form, int m) {
    return rising_factorial(form.to_poly(), m);
}

}  // namespace besselmv

#endif
