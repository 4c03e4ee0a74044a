#ifndef BESSELMV_PARAM_POLY_HPP
#define BESSELMV_PARAM_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "besselmv/rational.hpp"

namespace besselmv {

// Monomial a^da * k^dk in the two parameters a and k (kappa).
struct ParamMonomial {
    int da = 0;
    int dk = 0;
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

// Graded lexicographic order with a > k.
struct ParamMonomialLess {
    bool operator()(const ParamMonomial& x, const ParamMonomial& y) const {
        const int gx = x.da + x.dk, gy = y.da + y.dk;
        if (gx != gy) return gx < gy;
        if (x.da != y.da) return x.da < y.da;
        return x.dk < y.dk;
    }
};

// Sparse polynomial in Q[a, k]. No zero coefficients are stored.
class ParamPolynomial {
public:
    using TermMap = std::map<ParamMonomial, Rational, ParamMonomialLess>;

    ParamPolynomial() = default;
    explicit ParamPolynomial(const Rational& c) { set_term(0, 0, c); }
    explicit ParamPolynomial(long c) : ParamPolynomial(Rational(c)) {}

    static ParamPolynomial var_a() {
        ParamPolynomial p;
        p.set_term(1, 0, Rational(1));
        return p;
    }
    static ParamPolynomial var_k() {
        ParamPolynomial p;
        p.set_term(0, 1, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMonomial{0, 0});
    }
    Rational constant_value() const;  // requires is_constant()

    int degree_a() const;
    int degree_k() const;
    int total_degree() const;  // -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    Rational coeff(int da, int dk) const;
    // Coefficient of the graded-lex leading monomial.
    Rational leading_coefficient() const;

    void set_term(int da, int dk, const Rational& c);

    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const Rational& c);
    friend ParamPolynomial operator+(ParamPolynomial x, const ParamPolynomial& y) { return x += y; }
    friend ParamPolynomial operator-(ParamPolynomial x, const ParamPolynomial& y) { return x -= y; }
    friend ParamPolynomial operator*(const ParamPolynomial& x, const ParamPolynomial& y);
    friend ParamPolynomial operator*(ParamPolynomial x, const Rational& c) { return x *= c; }
    ParamPolynomial operator-() const;
    bool operator==(const ParamPolynomial& o) const { return terms_ == o.terms_; }

    ParamPolynomial pow(unsigned e) const;

    ParamPolynomial substitute_a(const Rational& a_val) const;
    ParamPolynomial substitute_k(const Rational& k_val) const;
    std::complex<double> eval(std::complex<double> a_val, std::complex<double> k_val) const;

    // Splits f = c * P with P integer-coefficient, primitive, positive
    // graded-lex leading coefficient. Zero maps to (0, 0).
    std::pair<Rational, ParamPolynomial> rational_content_split() const;

    // Exact division over Q[a,k]; nullopt if not divisible.
    std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& d) const;
    bool divisible_by(const ParamPolynomial& d) const { return divide_exact(d).has_value(); }

    // Primitive gcd (integer coefficients, positive leading coefficient);
    // gcd(0,0) = 0, and any nonzero constant input gives 1 unless the other
    // argument shares polynomial content.
    static ParamPolynomial gcd(const ParamPolynomial& f, const ParamPolynomial& g);

    // Canonical form: terms in descending graded-lex order, e.g. "2*a^2*k+3*a-1".
    std::string str() const;

private:
    TermMap terms_;
};

// Rising factorial of a degree-1 polynomial: p(p+1)...(p+m-1); m=0 gives 1.
ParamPolynomial rising_factorial(const ParamPolynomial& base, int m);

}  // namespace besselmv

#endif
