#include "besselmv/bessel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace besselmv {

namespace {

std::map<std::pair<int, Partition>, BesselPolynomial>& bessel_cache() {
    static std::map<std::pair<int, Partition>, BesselPolynomial> cache;
    return cache;
}
std::shared_mutex& bessel_cache_mutex() {
    static std::shared_mutex m;
    return m;
}

BesselPolynomial solve_bessel(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("bessel_polynomial needs length(lambda) <= n");
    const auto downset = contained_partitions(lambda);  // weight-descending, lambda first

    // Operator matrix in the Jack basis, restricted to the containment down-set.
    std::map<Partition, JackExpansion> image;
    for (const auto& mu : downset) {
        JackExpansion img = to_jack_basis(apply_DB(jack_polynomial(mu, n)));
        for (const auto& [nu, c] : img.coeffs)
            if (!nu.contained_in(mu))
                throw std::logic_error("operator image of P_" + mu.str() +
                                       " leaves the containment span at P_" + nu.str());
        image.emplace(mu, std::move(img));
    }

    auto entry = [&](const Partition& col, const Partition& row) {
        const auto& m = image.at(col).coeffs;
        auto it = m.find(row);
        return it == m.end() ? ParamRational() : it->second;
    };

    const ParamRational eig = entry(lambda, lambda);
    std::map<Partition, ParamRational> u;
    u[lambda] = ParamRational(Rational(1));
    for (const auto& mu : downset) {
        if (mu == lambda) continue;
        ParamRational rhs;
        for (const auto& [nu, c] : u) {
            if (c.is_zero() || nu == mu) continue;
            ParamRational b = entry(nu, mu);
            if (!b.is_zero()) rhs += c * b;
        }
        ParamRational gap = eig - entry(mu, mu);
        if (gap.is_zero())
            throw std::domain_error("non-generic degeneracy: eigenvalue collision between " + lambda.str() +
                                    " and " + mu.str());
        u[mu] = rhs / gap;
    }

    BesselPolynomial y;
    y.lambda = lambda;
    y.n = n;
    y.jack_coeffs.n = n;
    SymmetricPolynomial mono(n);
    for (const auto& [mu, c] : u) {
        if (c.is_zero() && !(mu == lambda)) continue;
        y.jack_coeffs.coeffs.emplace(mu, c);
        mono += jack_polynomial(mu, n).scaled(c);
    }
    y.monomial_form = std::move(mono);
    y.eigenvalue = eig;

    SymmetricPolynomial residual = apply_DB(y.monomial_form) - y.monomial_form.scaled(eig);
    if (!residual.is_zero())
        throw std::logic_error("eigen residual of Y_" + lambda.str() + " does not vanish");
    return y;
}

}  // namespace

const BesselPolynomial& bessel_polynomial(const Partition& lambda, int n) {
    const std::pair<int, Partition> key{n, lambda};
    {
        std::shared_lock lock(bessel_cache_mutex());
        auto it = bessel_cache().find(key);
        if (it != bessel_cache().end()) return it->second;
    }
    BesselPolynomial y = solve_bessel(lambda, n);
    std::unique_lock lock(bessel_cache_mutex());
    return bessel_cache().emplace(key, std::move(y)).first->second;
}

GammaProduct bessel_at_zero(const Partition& lambda, int n) {
    ParamPolynomial num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i - 1) - lambda.part(j - 1);
            const int s = lambda.part(i - 1) + lambda.part(j - 1);
            num = num * pochhammer(LinearForm(Rational(0), Rational(0), Rational(j - i + 1)), d);
            num = num * pochhammer(LinearForm(Rational(0), Rational(0), Rational(2 * n - i - j + 1)), s);
            den = den * pochhammer(LinearForm(Rational(0), Rational(0), Rational(j - i)), d);
            den = den * pochhammer(LinearForm(Rational(0), Rational(0), Rational(2 * n - i - j)), s);
        }
    for (int i = 1; i <= n; ++i) {
        const int li = lambda.part(i - 1);
        num = num * pochhammer(LinearForm(Rational(-1), Rational(1), Rational(n - i)), li);
        den = den * pochhammer(LinearForm(Rational(-1), Rational(1), Rational(2 * (n - i))), 2 * li);
    }
    ParamRational value = ParamRational(num, den) * ParamRational(pow_rational(Rational(2), lambda.weight()));
    return GammaProduct(value);
}

ParamRational bessel_at_zero_box_form(const Partition& lambda, int n) {
    ParamPolynomial num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i - 1) - lambda.part(j - 1);
            num = num * pochhammer(LinearForm(Rational(0), Rational(0), Rational(j - i + 1)), d);
            den = den * pochhammer(LinearForm(Rational(0), Rational(0), Rational(j - i)), d);
        }
    const Partition conj = lambda.conjugate();
    for (const auto& [i, j] : lambda.boxes()) {
        LinearForm factor(Rational(lambda.part(i - 1) + j - 2), Rational(1),
                          Rational(2 * n - conj.part(j - 1) - i));
        den = den * factor.to_poly();
    }
    return ParamRational(num, den) * ParamRational(pow_rational(Rational(2), lambda.weight()));
}

bool constant_term_consistency(const Partition& lambda, int n) {
    const BesselPolynomial& y = bessel_polynomial(lambda, n);
    ParamRational constant = y.monomial_form.coeff(Partition());
    return constant == bessel_at_zero(lambda, n).rational_value();
}

ParamPolynomial interpolation_diagonal(const Partition& mu, int n) {
    if (mu.length() > n) throw std::invalid_argument("interpolation_diagonal needs length(mu) <= n");
    const Partition conj = mu.conjugate();
    ParamPolynomial prod(Rational(1));
    for (const auto& [i, j] : mu.boxes()) {
        LinearForm first(Rational(1 + mu.part(i - 1) - j), Rational(0), Rational(conj.part(j - 1) - i));
        LinearForm second(Rational(mu.part(i - 1) + j - 2), Rational(1),
                          Rational(2 * n - conj.part(j - 1) - i));
        prod = prod * first.to_poly() * second.to_poly();
    }
    return prod;
}

PoleCertificate pole_certificate(const BesselPolynomial& y) {
    PoleCertificate cert;
    cert.pass = true;
    cert.leftover = ParamPolynomial(Rational(1));
    const int imax = 2 * (y.n - 1);
    for (const auto& [mu, c] : y.jack_coeffs.coeffs) {
        ParamPolynomial rest = c.den().rational_content_split().second;
        const int mmax = std::max(0, rest.degree_a()) + 2 * y.lambda.weight();
        // family a - 1 + i*k + m
        for (int i = 0; i <= imax; ++i)
            for (int m = 0; m <= mmax; ++m) {
                LinearForm form(Rational(m - 1), Rational(1), Rational(i));
                ParamPolynomial factor = form.to_poly();
                while (true) {
                    auto quo = rest.divide_exact(factor);
                    if (!quo) break;
                    rest = quo->rational_content_split().second;
                    cert.factors.push_back(form);
                }
            }
        // family q*k + p; any linear factor has q dividing the leading and p
        // dividing the trailing coefficient of the primitive integer form
        while (!rest.is_constant() && rest.degree_a() == 0) {
            const Rational trail = rest.coeff(0, 0);
            if (trail == 0) break;
            const long lead = std::labs(rest.leading_coefficient().get_num().get_si());
            const long tc = std::labs(trail.get_num().get_si());
            bool found = false;
            for (long q = 1; q <= lead && !found; ++q) {
                if (lead % q != 0) continue;
                for (long p = 1; p <= tc && !found; ++p) {
                    if (tc % p != 0) continue;
                    LinearForm form(Rational(p), Rational(0), Rational(q));
                    auto quo = rest.divide_exact(form.to_poly());
                    if (quo) {
                        rest = quo->rational_content_split().second;
                        cert.factors.push_back(form);
                        found = true;
                    }
                }
            }
            if (!found) break;
        }
        if (!rest.is_constant()) {
            cert.pass = false;
            cert.leftover = cert.leftover * rest;
        }
    }
    if (cert.pass) cert.leftover = ParamPolynomial(Rational(1));
    std::sort(cert.factors.begin(), cert.factors.end());
    return cert;
}

std::vector<std::pair<Partition, ParamRational>> binomial_ratio_diagnostics(const BesselPolynomial& y) {
    std::vector<std::pair<Partition, ParamRational>> out;
    ParamRational y0 = bessel_at_zero_box_form(y.lambda, y.n);
    for (const auto& [mu, c] : y.jack_coeffs.coeffs) {
        if (mu == y.lambda) continue;
        out.emplace_back(mu, c * bessel_at_zero_box_form(mu, y.n) / y0);
    }
    return out;
}

}  // namespace besselmv
