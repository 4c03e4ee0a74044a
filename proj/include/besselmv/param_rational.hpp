#ifndef BESSELMV_PARAM_RATIONAL_HPP
#define BESSELMV_PARAM_RATIONAL_HPP

#include <complex>
#include <string>

#include "besselmv/param_poly.hpp"

namespace besselmv {

// Element of Q(a,k) in canonical form: numerator and denominator are
// integer-coefficient polynomials with coprime contents, polynomial gcd one,
// and positive graded-lex leading coefficient in the denominator. Equality
// is structural.
class ParamRational {
public:
    ParamRational() : num_(), den_(Rational(1)) {}
    explicit ParamRational(const Rational& c);
    explicit ParamRational(long c) : ParamRational(Rational(c)) {}
    ParamRational(const ParamPolynomial& num, const ParamPolynomial& den);
    explicit ParamRational(const ParamPolynomial& p) : ParamRational(p, ParamPolynomial(Rational(1))) {}

    static ParamRational var_a() { return ParamRational(ParamPolynomial::var_a()); }
    static ParamRational var_k() { return ParamRational(ParamPolynomial::var_k()); }

    const ParamPolynomial& num() const { return num_; }
    const ParamPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_kappa_free() const { return num_.degree_k() <= 0 && den_.degree_k() <= 0; }
    bool is_a_free() const { return num_.degree_a() <= 0 && den_.degree_a() <= 0; }
    Rational constant_value() const;  // requires is_constant()

    ParamRational operator-() const;
    ParamRational& operator+=(const ParamRational& o) { return *this = *this + o; }
    ParamRational& operator-=(const ParamRational& o) { return *this = *this - o; }
    ParamRational& operator*=(const ParamRational& o) { return *this = *this * o; }
    ParamRational& operator/=(const ParamRational& o) { return *this = *this / o; }
    friend ParamRational operator+(const ParamRational& x, const ParamRational& y);
    friend ParamRational operator-(const ParamRational& x, const ParamRational& y);
    friend ParamRational operator*(const ParamRational& x, const ParamRational& y);
    friend ParamRational operator/(const ParamRational& x, const ParamRational& y);
    bool operator==(const ParamRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    ParamRational inverse() const;
    ParamRational pow(int e) const;

    // Substitution of one or both parameters; a vanishing denominator is a
    // parameter-degeneracy error.
    ParamRational substitute_a(const Rational& a_val) const;
    ParamRational substitute_k(const Rational& k_val) const;
    std::complex<double> eval(std::complex<double> a_val, std::complex<double> k_val) const;

    // Canonical string, e.g. "(2*a+1)/(a*k+3)"; denominator omitted when 1.
    std::string str() const;

private:
    ParamPolynomial num_, den_;
    void normalize();
};

}  // namespace besselmv

#endif
