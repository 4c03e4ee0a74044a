#include "besselmv/moments.hpp"

namespace besselmv {

namespace {

LinearForm kform(long c0, long ck) { return LinearForm(Rational(c0), Rational(0), Rational(ck)); }
LinearForm aform(long c0, long ck) { return LinearForm(Rational(c0), Rational(1), Rational(ck)); }

GammaProduct pair_gamma_ratio(const Partition& nu, int n) {
    GammaProduct g;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long d = nu.part(i - 1) - nu.part(j - 1);
            g *= GammaProduct::gamma(kform(d, j - i + 1));
            g /= GammaProduct::gamma(kform(d, j - i));
        }
    return g;
}

}  // namespace

GammaProduct weight_coefficient(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("weight_coefficient needs length(lambda) <= n");
    GammaProduct g;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long d = lambda.part(i - 1) - lambda.part(j - 1);
            g *= GammaProduct::gamma(kform(d + 1, j - i));
            g /= GammaProduct::gamma(kform(d + 1, j - i - 1));
        }
    for (int i = 1; i <= n; ++i) {
        g *= GammaProduct::gamma(kform(0, i));
        g *= GammaProduct::gamma(aform(0, 2 * n - i - 1));
        g /= GammaProduct::gamma(kform(0, 1));
        g /= GammaProduct::gamma(aform(lambda.part(i - 1) - 1, 2 * n - i - 1));
    }
    return g.normalized();
}

GammaProduct torus_moment(const Partition& nu, int n) {
    if (nu.length() > n) throw std::invalid_argument("torus_moment needs length(nu) <= n");
    GammaProduct g = pair_gamma_ratio(nu, n);
    for (int i = 1; i <= n; ++i) {
        g *= GammaProduct::gamma(kform(0, i));
        g *= GammaProduct::gamma(aform(0, 2 * n - i - 1));
        g /= GammaProduct::gamma(kform(0, 1));
        g /= GammaProduct::gamma(aform(nu.part(i - 1), 2 * n - i - 1));
    }
    g *= ParamRational(pow_rational(Rational(-2), nu.weight() + n));
    return g.normalized();
}

GammaProduct torus_moment_base(int n) { return torus_moment(Partition(), n); }

ParamRational torus_moment_ratio(const Partition& nu, int n) {
    if (nu.length() > n) throw std::invalid_argument("torus_moment_ratio needs length(nu) <= n");
    ParamPolynomial num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int d = nu.part(i - 1) - nu.part(j - 1);
            num = num * pochhammer(kform(0, j - i + 1), d);
            den = den * pochhammer(kform(0, j - i), d);
        }
    for (int i = 1; i <= n; ++i) den = den * pochhammer(aform(0, 2 * n - i - 1), nu.part(i - 1));
    return ParamRational(num, den) * ParamRational(pow_rational(Rational(-2), nu.weight()));
}

std::vector<MomentEntry> moment_table(int n, int max_weight) {
    std::vector<MomentEntry> table;
    for (const auto& nu : enumerate_partitions(max_weight, n))
        table.push_back({nu, torus_moment(nu, n), torus_moment_ratio(nu, n)});
    return table;
}

WPairing w_pairing(const SymmetricPolynomial& f, const SymmetricPolynomial& g, int n) {
    if (f.nvars() != n || g.nvars() != n) throw std::invalid_argument("w_pairing variable count mismatch");
    JackExpansion expansion = to_jack_basis(f.multiply(g));
    ParamRational s;
    for (const auto& [nu, c] : expansion.coeffs) s += c * torus_moment_ratio(nu, n);
    WPairing result;
    result.rational_part = s;
    result.value = torus_moment_base(n);
    result.value *= s;
    result.value.normalize();
    return result;
}

ParamRational normfactor_rhs(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("normfactor_rhs needs length(lambda) <= n");
    ParamPolynomial num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int d = lambda.part(i - 1) - lambda.part(j - 1);
            const int s = lambda.part(i - 1) + lambda.part(j - 1);
            num = num * pochhammer(kform(0, j - i + 1), d);
            num = num * pochhammer(kform(1, j - i - 1), d);
            den = den * pochhammer(kform(0, j - i), d);
            den = den * pochhammer(kform(1, j - i), d);
            num = num * pochhammer(aform(-1, 2 * n - i - j + 1), s);
            num = num * pochhammer(aform(0, 2 * n - i - j - 1), s);
            den = den * pochhammer(aform(-1, 2 * n - i - j), s);
            den = den * pochhammer(aform(0, 2 * n - i - j), s);
        }
    for (int i = 1; i <= n; ++i) {
        const int li = lambda.part(i - 1);
        num = num * pochhammer(aform(-1, n - i), li);
        num = num * pochhammer(kform(1, n - i), li);
        den = den * pochhammer(aform(-1, 2 * (n - i)), 2 * li);
        den = den * pochhammer(aform(0, 2 * (n - i)), 2 * li);
    }
    Rational sign = (lambda.weight() + n) % 2 == 0 ? Rational(1) : Rational(-1);
    Rational two = pow_rational(Rational(2), 2 * lambda.weight() + n);
    return ParamRational(num, den) * ParamRational(sign * two);
}

GammaProduct f2_closed(const Partition& nu, int n) {
    if (nu.length() > n) throw std::invalid_argument("f2_closed needs length(nu) <= n");
    GammaProduct g = pair_gamma_ratio(nu, n);
    for (int i = 1; i <= n; ++i)
        g *= GammaProduct::gamma(LinearForm(Rational(1 - nu.part(i - 1)), Rational(-1), Rational(-(2 * n - i - 1))));
    g *= GammaProduct::two_pow(LinearForm(Rational(nu.weight() - n), Rational(n), Rational(n * (n - 1))));
    return g.normalized();
}

namespace {

GammaProduct bridge_constant(int n, bool corrected) {
    GammaProduct g;
    for (int i = 1; i <= n; ++i) {
        GammaProduct ratio = GammaProduct::gamma(kform(0, 1)) / GammaProduct::gamma(kform(0, i));
        if (corrected) g /= ratio;
        else g *= ratio;
        g /= GammaProduct::gamma(LinearForm(Rational(1), Rational(-1), Rational(-(2 * n - i - 1))));
    }
    g *= GammaProduct::two_pow(LinearForm(Rational(2 * n), Rational(-n), Rational(-n * (n - 1))));
    if (n % 2 != 0) g *= ParamRational(Rational(-1));
    return g.normalized();
}

}  // namespace

GammaProduct bridge_constant_displayed(int n) { return bridge_constant(n, false); }
GammaProduct bridge_constant_corrected(int n) { return bridge_constant(n, true); }

GammaProduct kadell_closed(const Partition& nu, int n, const LinearForm& alpha, const LinearForm& beta) {
    if (nu.length() > n) throw std::invalid_argument("kadell_closed needs length(nu) <= n");
    GammaProduct g = pair_gamma_ratio(nu, n);
    for (int i = 1; i <= n; ++i) {
        g *= GammaProduct::gamma(alpha + kform(nu.part(i - 1), n - i));
        g *= GammaProduct::gamma(beta + kform(0, i - 1));
        g /= GammaProduct::gamma(alpha + beta + kform(nu.part(i - 1), 2 * n - i - 1));
    }
    return g.normalized();
}

GammaProduct laguerre_closed(const Partition& nu, int n, const LinearForm& alpha) {
    if (nu.length() > n) throw std::invalid_argument("laguerre_closed needs length(nu) <= n");
    GammaProduct g = pair_gamma_ratio(nu, n);
    for (int i = 1; i <= n; ++i) g *= GammaProduct::gamma(alpha + kform(nu.part(i - 1), n - i));
    return g.normalized();
}

}  // namespace besselmv
