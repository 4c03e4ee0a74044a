#include "besselmv/jack.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>

namespace besselmv {

namespace {

struct JackKey {
    int n;
    Partition lambda;
    bool symbolic;
    Rational kappa;
    bool operator<(const JackKey& o) const {
        if (n != o.n) return n < o.n;
        if (symbolic != o.symbolic) return symbolic < o.symbolic;
        if (kappa != o.kappa) return kappa < o.kappa;
        return lambda < o.lambda;
    }
};

std::map<JackKey, SymmetricPolynomial>& jack_cache() {
    static std::map<JackKey, SymmetricPolynomial> cache;
    return cache;
}
std::shared_mutex& jack_cache_mutex() {
    static std::shared_mutex m;
    return m;
}

SymmetricPolynomial solve_jack(const Partition& lambda, int n, const ParamRational& kappa) {
    if (lambda.length() > n) throw std::invalid_argument("jack_polynomial needs length(lambda) <= n");
    const int w = lambda.weight();
    // Descending lex is a linear extension of dominance on a fixed weight, so
    // the operator matrix is triangular when processed in this order.
    const auto basis = partitions_of_weight(w, n);
    std::map<Partition, SymmetricPolynomial> image;
    for (const auto& mu : basis)
        if (dominance_leq(mu, lambda)) image.emplace(mu, apply_D(SymmetricPolynomial::monomial(mu, n), kappa));
    const ParamRational eig = image.at(lambda).coeff(lambda);

    std::map<Partition, ParamRational> u;
    u[lambda] = ParamRational(Rational(1));
    for (const auto& mu : basis) {
        if (mu == lambda || !dominance_leq(mu, lambda)) continue;
        ParamRational rhs;
        for (const auto& [nu, c] : u) {
            if (c.is_zero()) continue;
            ParamRational an = image.at(nu).coeff(mu);
            if (!an.is_zero()) rhs += c * an;
        }
        ParamRational gap = eig - image.at(mu).coeff(mu);
        if (gap.is_zero())
            throw std::domain_error("non-generic degeneracy: eigenvalue collision between " + lambda.str() +
                                    " and " + mu.str());
        u[mu] = rhs / gap;
    }
    SymmetricPolynomial p(n);
    for (const auto& [mu, c] : u) p.set_coeff(mu, c);
    return p;
}

SymmetricPolynomial jack_cached(const Partition& lambda, int n, bool symbolic, const Rational& kappa_val) {
    JackKey key{n, lambda, symbolic, symbolic ? Rational(0) : kappa_val};
    {
        std::shared_lock lock(jack_cache_mutex());
        auto it = jack_cache().find(key);
        if (it != jack_cache().end()) return it->second;
    }
    SymmetricPolynomial p =
        solve_jack(lambda, n, symbolic ? ParamRational::var_k() : ParamRational(kappa_val));
    std::unique_lock lock(jack_cache_mutex());
    return jack_cache().emplace(key, std::move(p)).first->second;  // idempotent on races
}

// Picks the (weight, lex)-maximal monomial still present.
const Partition* leading_key(const SymmetricPolynomial& f) {
    const Partition* best = nullptr;
    for (const auto& [mu, c] : f.coeffs()) {
        if (best == nullptr || mu.weight() > best->weight() ||
            (mu.weight() == best->weight() && best->parts() < mu.parts()))
            best = &mu;
    }
    return best;
}

JackExpansion jack_reduce(const SymmetricPolynomial& f,
                          const std::function<SymmetricPolynomial(const Partition&, int)>& jack) {
    JackExpansion out;
    out.n = f.nvars();
    SymmetricPolynomial rest = f;
    while (!rest.is_zero()) {
        const Partition* mu = leading_key(rest);
        ParamRational c = rest.coeff(*mu);
        out.coeffs[*mu] = c;
        rest -= jack(*mu, rest.nvars()).scaled(c);
    }
    return out;
}

}  // namespace

SymmetricPolynomial jack_polynomial(const Partition& lambda, int n) {
    return jack_cached(lambda, n, true, Rational(0));
}

SymmetricPolynomial jack_polynomial_at(const Partition& lambda, int n, const Rational& kappa) {
    return jack_cached(lambda, n, false, kappa);
}

JackExpansion to_jack_basis(const SymmetricPolynomial& f) {
    return jack_reduce(f, [](const Partition& mu, int n) { return jack_polynomial(mu, n); });
}

JackExpansion to_jack_basis_at(const SymmetricPolynomial& f, const Rational& kappa) {
    return jack_reduce(f, [&](const Partition& mu, int n) { return jack_polynomial_at(mu, n, kappa); });
}

SymmetricPolynomial from_jack_basis(const JackExpansion& e) {
    SymmetricPolynomial f(e.n);
    for (const auto& [mu, c] : e.coeffs) f += jack_polynomial(mu, e.n).scaled(c);
    return f;
}

SymmetricPolynomial from_jack_basis_at(const JackExpansion& e, const Rational& kappa) {
    SymmetricPolynomial f(e.n);
    for (const auto& [mu, c] : e.coeffs) f += jack_polynomial_at(mu, e.n, kappa).scaled(c);
    return f;
}

GammaProduct jack_norm_closed(const Partition& lambda, int n) {
    GammaProduct g;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long d = lambda.part(i - 1) - lambda.part(j - 1);
            g *= GammaProduct::gamma(LinearForm(Rational(d), Rational(0), Rational(j - i + 1)));
            g *= GammaProduct::gamma(LinearForm(Rational(d + 1), Rational(0), Rational(j - i - 1)));
            g /= GammaProduct::gamma(LinearForm(Rational(d), Rational(0), Rational(j - i)));
            g /= GammaProduct::gamma(LinearForm(Rational(d + 1), Rational(0), Rational(j - i)));
        }
    return g.normalized();
}

Rational torus_pairing_integer_kappa(const SymmetricPolynomial& f, const SymmetricPolynomial& g,
                                     int kappa_int) {
    if (kappa_int < 1) throw std::invalid_argument("torus pairing needs a positive integer kappa");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
    const int n = f.nvars();
    const Rational kq(kappa_int);
    SymmetricPolynomial fs = f.substitute_k(kq), gs = g.substitute_k(kq);
    for (const auto& poly : {fs, gs})
        for (const auto& [mu, c] : poly.coeffs())
            if (!c.is_constant())
                throw std::invalid_argument("torus pairing inputs must be parameter-free after substituting kappa");

    ExponentPolynomial lhs = fs.expand() * gs.expand().inverted_variables();

    // prod_{i!=j} (1 - x_i/x_j)^kappa  =  sign * prod_{i<j} (x_i-x_j)^{2 kappa}
    // * prod_i x_i^{-kappa(n-1)}  with sign = (-1)^{kappa n(n-1)/2}.
    ExponentPolynomial weight(n);
    {
        std::vector<int> zero(n, 0);
        weight.add_term(zero, ParamRational(Rational(1)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExponentPolynomial diff(n);
            std::vector<int> ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            diff.add_term(ei, ParamRational(Rational(1)));
            diff.add_term(ej, ParamRational(Rational(-1)));
            for (int rep = 0; rep < 2 * kappa_int; ++rep) weight = weight * diff;
        }
    for (int i = 0; i < n; ++i) weight = weight.shifted(i, -kappa_int * (n - 1));
    const long sign_exp = static_cast<long>(kappa_int) * n * (n - 1) / 2;
    if (sign_exp % 2 != 0) weight = weight.scaled(ParamRational(Rational(-1)));

    ExponentPolynomial total = lhs * weight;
    ParamRational ct = total.coeff(std::vector<int>(n, 0));
    Rational value = ct.is_zero() ? Rational(0) : ct.constant_value();
    return value / Rational(factorial_int(n));
}

std::pair<SymmetricPolynomial, ParamRational> jack_integral_form(const Partition& lambda, int n) {
    const Partition conj = lambda.conjugate();
    ParamPolynomial h(Rational(1));
    for (const auto& [i, j] : lambda.boxes()) {
        LinearForm factor(Rational(lambda.part(i - 1) - j), Rational(0), Rational(conj.part(j - 1) - i + 1));
        h = h * factor.to_poly();
    }
    ParamRational hr(h);
    ParamRational scale = hr / ParamRational::var_k().pow(lambda.weight());
    return {jack_polynomial(lambda, n).scaled(scale), hr};
}

ParamRational jack_integral_one(const Partition& lambda, int n) {
    ParamPolynomial prod(Rational(1));
    for (const auto& [i, j] : lambda.boxes()) {
        LinearForm factor(Rational(j - 1), Rational(0), Rational(n - i + 1));
        prod = prod * factor.to_poly();
    }
    return ParamRational(prod) / ParamRational::var_k().pow(lambda.weight());
}

bool reciprocal_complement_check(const Partition& nu, int box_width, int n) {
    ExponentPolynomial lhs = jack_polynomial(nu, n).expand().inverted_variables();
    for (int i = 0; i < n; ++i) lhs = lhs.shifted(i, box_width);
    ExponentPolynomial rhs = jack_polynomial(nu.complement_in_box(box_width, n), n).expand();
    return lhs == rhs;
}

}  // namespace besselmv
