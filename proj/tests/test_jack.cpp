#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "besselmv/jack.hpp"

using namespace besselmv;

namespace {

ParamRational pr(long v) { return ParamRational(Rational(v)); }
ParamRational K() { return ParamRational::var_k(); }

// Denominators of Jack coefficients may only carry factors q*k + p with
// positive integers p, q. Any linear factor has q dividing the leading and
// p dividing the trailing coefficient of the primitive integer form.
bool kappa_pole_family_only(const ParamPolynomial& den) {
    if (den.degree_a() > 0) return false;
    ParamPolynomial rest = den.rational_content_split().second;
    while (!rest.is_constant()) {
        const long lead = std::labs(rest.leading_coefficient().get_num().get_si());
        const Rational trail = rest.coeff(0, 0);
        if (trail == 0) return false;  // a factor k would mean a pole at kappa = 0
        const long tc = std::labs(trail.get_num().get_si());
        bool found = false;
        for (long q = 1; q <= lead && !found; ++q) {
            if (lead % q != 0) continue;
            for (long p = 1; p <= tc && !found; ++p) {
                if (tc % p != 0) continue;
                ParamPolynomial factor =
                    ParamPolynomial::var_k() * Rational(q) + ParamPolynomial(Rational(p));
                auto quo = rest.divide_exact(factor);
                if (quo) {
                    rest = quo->rational_content_split().second;
                    found = true;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("jack polynomials, small cases") {
    CHECK(jack_polynomial(Partition{1, 1}, 2) == SymmetricPolynomial::monomial(Partition{1, 1}, 2));

    auto p2 = jack_polynomial(Partition{2}, 2);
    CHECK(p2.coeff(Partition{2}) == pr(1));
    CHECK(p2.coeff(Partition{1, 1}) == K() * pr(2) / (K() + pr(1)));
    CHECK(p2.coeffs().size() == 2);

    for (int m = 0; m <= 6; ++m)
        CHECK(jack_polynomial(Partition(std::vector<int>{m}), 1) ==
              SymmetricPolynomial::monomial(Partition(std::vector<int>{m}), 1));
}

TEST_CASE("jack polynomials are D-eigenfunctions") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_partitions(4, n)) {
            auto p = jack_polynomial(lam, n);
            auto img = apply_D(p);
            ParamRational eig = img.coeff(lam);  // leading coefficient of P is 1
            CHECK((img - p.scaled(eig)).is_zero());
        }
}

TEST_CASE("homogeneity") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_partitions(5, n)) {
            auto p = jack_polynomial(lam, n);
            for (const auto& [mu, c] : p.coeffs()) CHECK(mu.weight() == lam.weight());
        }
}

TEST_CASE("jack basis conversion") {
    auto e1 = to_jack_basis(jack_polynomial(Partition{2}, 2));
    CHECK(e1.coeffs.size() == 1);
    CHECK(e1.coeffs.at(Partition{2}) == pr(1));

    auto e2 = to_jack_basis(SymmetricPolynomial::monomial(Partition{1, 1}, 2));
    CHECK(e2.coeffs.size() == 1);
    CHECK(e2.coeffs.at(Partition{1, 1}) == pr(1));

    auto e3 = to_jack_basis(SymmetricPolynomial::monomial(Partition{2}, 2));
    CHECK(e3.coeffs.at(Partition{2}) == pr(1));
    CHECK(e3.coeffs.at(Partition{1, 1}) == pr(-2) * K() / (K() + pr(1)));

    // round trip on a mixed-weight element
    SymmetricPolynomial f = SymmetricPolynomial::monomial(Partition{2, 1}, 3) +
                            SymmetricPolynomial::monomial(Partition{1}, 3).scaled(K()) +
                            SymmetricPolynomial::one(3).scaled(pr(5));
    CHECK(from_jack_basis(to_jack_basis(f)) == f);
}

TEST_CASE("closed norm formula") {
    CHECK(jack_norm_closed(Partition{3}, 1).is_rational());
    CHECK(jack_norm_closed(Partition{3}, 1).rational_value() == pr(1));

    // n=2, empty: Gamma(2k)Gamma(1)/(Gamma(k)Gamma(k+1))
    auto g = jack_norm_closed(Partition(), 2);
    GammaProduct expect = GammaProduct::gamma(LinearForm::make(0, 0, 2)) /
                          (GammaProduct::gamma(LinearForm::make(0, 0, 1)) *
                           GammaProduct::gamma(LinearForm::make(1, 0, 1)));
    CHECK(gamma_equal(g, expect));

    // n=2, lambda=(1): four factors at lambda_1 - lambda_2 = 1
    auto g1 = jack_norm_closed(Partition{1}, 2);
    GammaProduct expect1 = GammaProduct::gamma(LinearForm::make(1, 0, 2)) *
                           GammaProduct::gamma(LinearForm::make(2, 0, 0)) /
                           (GammaProduct::gamma(LinearForm::make(1, 0, 1)) *
                            GammaProduct::gamma(LinearForm::make(2, 0, 1)));
    CHECK(gamma_equal(g1, expect1));
}

TEST_CASE("torus pairing, basic values") {
    CHECK(torus_pairing_integer_kappa(SymmetricPolynomial::one(1), SymmetricPolynomial::one(1), 1) ==
          Rational(1));

    // <P_(1), P_(1)>'_2 at kappa=1 equals the substituted closed norm
    auto p1 = jack_polynomial_at(Partition{1}, 2, Rational(1));
    Rational pairing = torus_pairing_integer_kappa(p1, p1, 1);
    CHECK(pairing == jack_norm_closed(Partition{1}, 2).exact_value_at(std::nullopt, Rational(1)));

    auto p2 = jack_polynomial_at(Partition{2}, 2, Rational(1));
    auto p11 = jack_polynomial_at(Partition{1, 1}, 2, Rational(1));
    CHECK(torus_pairing_integer_kappa(p2, p11, 1) == Rational(0));

    // symbolic content surviving the kappa substitution is an error
    CHECK_THROWS(torus_pairing_integer_kappa(jack_polynomial(Partition{2}, 2).scaled(ParamRational::var_a()),
                                             SymmetricPolynomial::one(2), 1));
}

TEST_CASE("orthogonality and norms at integer kappa") {
    for (int kappa : {1, 2}) {
        for (int n = 1; n <= 2; ++n) {
            auto parts = enumerate_partitions(3, n);
            for (const auto& lam : parts) {
                auto pl = jack_polynomial_at(lam, n, Rational(kappa));
                for (const auto& mu : parts) {
                    auto pm = jack_polynomial_at(mu, n, Rational(kappa));
                    Rational v = torus_pairing_integer_kappa(pl, pm, kappa);
                    if (lam == mu)
                        CHECK(v == jack_norm_closed(lam, n).exact_value_at(std::nullopt, Rational(kappa)));
                    else
                        CHECK(v == Rational(0));
                }
            }
        }
    }
}

TEST_CASE("integral form") {
    auto [j1, h1] = jack_integral_form(Partition{1}, 2);
    CHECK(h1 == K());
    CHECK(j1 == SymmetricPolynomial::monomial(Partition{1}, 2));
    CHECK(jack_integral_one(Partition{1}, 2) == pr(2));
    CHECK(jack_integral_one(Partition{1}, 3) == pr(3));

    auto [j0, h0] = jack_integral_form(Partition(), 2);
    CHECK(h0 == pr(1));
    CHECK(j0 == SymmetricPolynomial::one(2));

    auto [j2, h2] = jack_integral_form(Partition{2}, 1);
    CHECK(h2 == (K() + pr(1)) * K());
    CHECK(j2 == SymmetricPolynomial::monomial(Partition{2}, 1).scaled((K() + pr(1)) / K()));
}

TEST_CASE("integral form coefficients are polynomials in 1/kappa with nonnegative integer coefficients") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_partitions(4, n)) {
            auto [j, h] = jack_integral_form(lam, n);
            for (const auto& [mu, c] : j.coeffs()) {
                // denominator must be const * k^t
                const ParamPolynomial& den = c.den();
                CHECK(den.degree_a() == 0);
                CHECK(den.terms().size() == 1);
                // numerator: nonnegative integer coefficients, a-free
                const ParamPolynomial& num = c.num();
                CHECK(num.degree_a() == 0);
                Rational dc = den.leading_coefficient();
                for (const auto& [mono, coef] : num.terms()) {
                    Rational v = coef / dc;
                    CHECK(is_integer(v));
                    CHECK(v > 0);
                    CHECK(mono.dk <= den.degree_k());  // genuinely a polynomial in 1/k
                }
            }
        }
}

TEST_CASE("principal specialisation matches the expanded polynomial") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_partitions(4, n)) {
            auto [j, h] = jack_integral_form(lam, n);
            ParamRational value;
            for (const auto& [mu, c] : j.coeffs()) {
                // m_mu(1^n) = number of distinct permutations
                auto expanded = SymmetricPolynomial::monomial(mu, n).expand();
                value += c * pr(static_cast<long>(expanded.terms().size()));
            }
            CHECK(value == jack_integral_one(lam, n));
        }
}

TEST_CASE("shift identity x_1...x_n P_nu = P_{nu+(1^n)}") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& nu : enumerate_partitions(4, n)) {
            auto lhs = jack_polynomial(nu, n).multiply(
                SymmetricPolynomial::monomial(Partition(std::vector<int>(n, 1)), n));
            CHECK(lhs == jack_polynomial(nu.plus_ones(n), n));
        }
}

TEST_CASE("reciprocal complement identity") {
    CHECK(reciprocal_complement_check(Partition(), 1, 2));
    CHECK(reciprocal_complement_check(Partition{1}, 1, 2));
    CHECK(reciprocal_complement_check(Partition{2}, 2, 2));
    for (const auto& nu : enumerate_partitions(4, 2))
        if (nu.part(0) <= 3) CHECK(reciprocal_complement_check(nu, 3, 2));
    for (const auto& nu : enumerate_partitions(3, 3))
        if (nu.part(0) <= 2) CHECK(reciprocal_complement_check(nu, 2, 3));
}

TEST_CASE("coefficient denominators stay in the kappa pole family") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : enumerate_partitions(4, n)) {
            auto p = jack_polynomial(lam, n);
            for (const auto& [mu, c] : p.coeffs()) CHECK(kappa_pole_family_only(c.den()));
        }
}
