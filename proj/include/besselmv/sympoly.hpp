#ifndef BESSELMV_SYMPOLY_HPP
#define BESSELMV_SYMPOLY_HPP

#include <complex>
#include <map>
#include <vector>

#include "besselmv/param_rational.hpp"
#include "besselmv/partition.hpp"

namespace besselmv {

// Sparse (Laurent) polynomial in n variables over Q(a,k). Negative exponents
// are allowed so the same machinery serves the torus constant-term pairing.
class ExponentPolynomial {
public:
    using Key = std::vector<int>;
    using TermMap = std::map<Key, ParamRational>;

    ExponentPolynomial() : n_(0) {}
    explicit ExponentPolynomial(int n) : n_(n) {}

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& e, const ParamRational& c);
    ParamRational coeff(const Key& e) const;

    ExponentPolynomial& operator+=(const ExponentPolynomial& o);
    ExponentPolynomial& operator-=(const ExponentPolynomial& o);
    friend ExponentPolynomial operator+(ExponentPolynomial x, const ExponentPolynomial& y) { return x += y; }
    friend ExponentPolynomial operator-(ExponentPolynomial x, const ExponentPolynomial& y) { return x -= y; }
    friend ExponentPolynomial operator*(const ExponentPolynomial& x, const ExponentPolynomial& y);
    ExponentPolynomial scaled(const ParamRational& c) const;
    bool operator==(const ExponentPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    ExponentPolynomial derivative(int var) const;
    ExponentPolynomial shifted(int var, int amount) const;  // multiply by x_var^amount

    // Exact division by (x_i - x_j); throws if not divisible (a symmetry
    // violation upstream, treated as a bug).
    ExponentPolynomial divide_by_difference(int i, int j) const;

    // Substitute x -> 1/x (negate all exponents).
    ExponentPolynomial inverted_variables() const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x, std::complex<double> a_val,
                              std::complex<double> k_val) const;

private:
    int n_;
    TermMap terms_;
};

// Symmetric polynomial in the monomial basis {m_lambda}.
class SymmetricPolynomial {
public:
    using CoeffMap = std::map<Partition, ParamRational>;

    SymmetricPolynomial() : n_(0) {}
    explicit SymmetricPolynomial(int n) : n_(n) {}

    static SymmetricPolynomial monomial(const Partition& lambda, int n);
    static SymmetricPolynomial one(int n);

    int nvars() const { return n_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    ParamRational coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const ParamRational& c);

    SymmetricPolynomial& operator+=(const SymmetricPolynomial& o);
    SymmetricPolynomial& operator-=(const SymmetricPolynomial& o);
    friend SymmetricPolynomial operator+(SymmetricPolynomial x, const SymmetricPolynomial& y) { return x += y; }
    friend SymmetricPolynomial operator-(SymmetricPolynomial x, const SymmetricPolynomial& y) { return x -= y; }
    SymmetricPolynomial scaled(const ParamRational& c) const;
    bool operator==(const SymmetricPolynomial& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    ExponentPolynomial expand() const;
    SymmetricPolynomial multiply(const SymmetricPolynomial& o) const;

    SymmetricPolynomial substitute_k(const Rational& k_val) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x, std::complex<double> a_val,
                              std::complex<double> k_val) const;

    std::string str() const;

private:
    int n_;
    CoeffMap coeffs_;
};

// Collects an expansion back into the monomial basis. With verify set, the
// result is re-expanded and compared against the input; a mismatch means the
// input was not symmetric.
SymmetricPolynomial collect_symmetric(const ExponentPolynomial& p, bool verify = false);

// Sutherland-type operator: sum x_i^2 d_i^2 + 2*kappa * sum_{i<j}
// (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j). The kappa parameter defaults to the
// symbol k but may be specialised.
SymmetricPolynomial apply_D(const SymmetricPolynomial& f,
                            const ParamRational& kappa = ParamRational::var_k());

// Bessel-type operator: sum x_i^2 d_i^2 + sum (a x_i + 2) d_i + the same
// pairwise kappa term. Degree never increases.
SymmetricPolynomial apply_DB(const SymmetricPolynomial& f,
                             const ParamRational& kappa = ParamRational::var_k());

}  // namespace besselmv

#endif
