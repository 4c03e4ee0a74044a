#include "besselmv/numeric/checks.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "besselmv/moments.hpp"
#include "besselmv/numeric/gamma.hpp"
#include "besselmv/numeric/quadrature.hpp"
#include "besselmv/numeric/rng.hpp"

namespace besselmv::numeric {

namespace {

using Complex = std::complex<double>;

struct NumTable {
    int n = 0;
    std::vector<std::pair<std::vector<int>, Complex>> terms;
    int max_exp = 0;
};

NumTable table_of(const SymmetricPolynomial& f, Complex a_val, Complex k_val) {
    NumTable t;
    t.n = f.nvars();
    const ExponentPolynomial expanded = f.expand();
    for (const auto& [e, c] : expanded.terms()) {
        int me = 0;
        for (int v : e) me = std::max(me, v);
        t.max_exp = std::max(t.max_exp, me);
        t.terms.emplace_back(e, c.eval(a_val, k_val));
    }
    return t;
}

Complex eval_table(const NumTable& t, const std::vector<std::vector<Complex>>& pow) {
    Complex s = 0.0;
    for (const auto& [e, c] : t.terms) {
        Complex v = c;
        for (int i = 0; i < t.n; ++i) v *= pow[i][e[i]];
        s += v;
    }
    return s;
}

std::vector<std::vector<Complex>> power_table(const std::vector<Complex>& x, int max_exp) {
    std::vector<std::vector<Complex>> pow(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        pow[i].resize(max_exp + 1);
        pow[i][0] = 1.0;
        for (int p = 1; p <= max_exp; ++p) pow[i][p] = pow[i][p - 1] * x[i];
    }
    return pow;
}

void for_each_grid_point(int n, int points, const std::function<void(const std::vector<Complex>&)>& body) {
    std::vector<int> idx(n, 0);
    std::vector<Complex> x(n);
    for (;;) {
        for (int i = 0; i < n; ++i) x[i] = std::polar(1.0, 2.0 * std::numbers::pi * idx[i] / points);
        body(x);
        int i = 0;
        while (i < n && ++idx[i] == points) idx[i++] = 0;
        if (i == n) break;
    }
}

Complex torus_vandermonde_power(const std::vector<Complex>& x, int kappa_int) {
    Complex prod = 1.0;
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Complex base = 1.0 - x[i] / x[j];
            for (int r = 0; r < kappa_int; ++r) prod *= base;
        }
    return prod;
}

// (1/n!) integral over T^n of f(x) g(x) W(x) dx via the product trapezoid
// rule, with the bare series S: W dx = S(x) Delta^kappa prod(x_i) dtheta-mean.
Complex contour_integral(const NumTable& f, const NumTable& g, const WeightSeriesEvaluator& series, int n,
                         int kappa_int, int points, int series_weight) {
    Complex sum = 0.0;
    const int maxp = std::max(f.max_exp, g.max_exp);
    for_each_grid_point(n, points, [&](const std::vector<Complex>& x) {
        auto pow = power_table(x, maxp);
        Complex val = eval_table(f, pow) * eval_table(g, pow);
        val *= series.eval_up_to(x, series_weight);
        if (n >= 2) val *= torus_vandermonde_power(x, kappa_int);
        for (int i = 0; i < n; ++i) val *= x[i];
        sum += val;
    });
    double cells = std::pow(static_cast<double>(points), n);
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    return sum / cells / nfact;
}

double rel_error(Complex value, Complex reference) {
    const double scale = std::max(std::abs(reference), 1e-300);
    return std::abs(value - reference) / scale;
}

void finish(NumericReport& r, Complex value, Complex reference, double scale, double tolerance) {
    r.value = value;
    r.reference = reference;
    r.abs_err = std::abs(value - reference);
    r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
    r.tolerance = tolerance;
    r.pass = r.rel_err <= tolerance;
}

int kappa_as_int(const Rational& kappa, int n) {
    if (n == 1) return is_integer(kappa) && kappa >= 1 ? static_cast<int>(kappa.get_num().get_si()) : 0;
    if (!is_integer(kappa) || kappa < 1)
        throw std::invalid_argument("contour checks for n >= 2 need a positive integer kappa");
    return static_cast<int>(kappa.get_num().get_si());
}

}  // namespace

NumericReport contour_orthogonality_numeric(const Partition& lambda, const Partition& mu, int n,
                                            double a_val, const Rational& kappa,
                                            const QuadratureConfig& cfg, bool krall_frink) {
    const int kint = kappa_as_int(kappa, n);
    const Complex a(a_val, 0.0), k(to_double(kappa), 0.0);

    const auto& ylam = bessel_polynomial(lambda, n);
    const auto& ymu = bessel_polynomial(mu, n);
    NumTable tl = table_of(ylam.monomial_form, a, k);
    NumTable tm = table_of(ymu.monomial_form, a, k);
    Complex norm_scale = 1.0;
    if (krall_frink) {
        const Complex cl = substitute(bessel_at_zero_box_form(lambda, n), a, k);
        const Complex cm = substitute(bessel_at_zero_box_form(mu, n), a, k);
        for (auto& [e, c] : tl.terms) c /= cl;
        for (auto& [e, c] : tm.terms) c /= cm;
        norm_scale = cl * cm;
    }

    WeightSeriesEvaluator series(n, a, kappa, cfg.truncation_weight, cfg.tolerance);
    const int top = series.truncation_weight();
    Complex integral = contour_integral(tl, tm, series, n, kint, cfg.points_per_circle, top);

    // Self-consistency: doubling the node count or trimming the truncation
    // must not move the result.
    const Complex diag_l = substitute(w_pairing(ylam.monomial_form, ylam.monomial_form, n).value, a, k);
    const Complex diag_m = substitute(w_pairing(ymu.monomial_form, ymu.monomial_form, n).value, a, k);
    const double scale = std::sqrt(std::abs(diag_l) * std::abs(diag_m)) / std::abs(norm_scale);
    Complex more_points = contour_integral(tl, tm, series, n, kint, 2 * cfg.points_per_circle, top);
    Complex less_weight = contour_integral(tl, tm, series, n, kint, cfg.points_per_circle, top - 6);
    if (std::abs(more_points - integral) > cfg.tolerance * std::max(scale, std::abs(integral)) ||
        std::abs(less_weight - integral) > cfg.tolerance * std::max(scale, std::abs(integral)))
        throw std::runtime_error("inconclusive contour quadrature: result unstable under refinement");

    NumericReport r;
    std::ostringstream id;
    id << "contour-orthogonality/n=" << n << "/" << lambda.str() << "x" << mu.str();
    r.case_id = id.str();
    r.equation_tag = n == 1 ? "one-variable-orthogonality" : "torus-orthogonality";
    r.nodes = static_cast<long>(std::pow(cfg.points_per_circle, n));
    std::ostringstream det;
    det << "truncation=" << series.truncation_weight() << " tail=" << series.last_tail_estimate();
    r.detail = det.str();
    if (lambda == mu) {
        const Complex reference = diag_l / norm_scale;
        finish(r, integral, reference, std::abs(reference), cfg.tolerance);
    } else {
        finish(r, integral, 0.0, scale, cfg.tolerance);
    }
    return r;
}

NumericReport torus_moment_numeric(const Partition& nu, int n, double a_val, const Rational& kappa,
                                   const QuadratureConfig& cfg) {
    const int kint = kappa_as_int(kappa, n);
    const Complex a(a_val, 0.0), k(to_double(kappa), 0.0);
    NumTable tp = table_of(jack_polynomial_at(nu, n, kappa), a, k);
    NumTable one = table_of(SymmetricPolynomial::one(n), a, k);
    WeightSeriesEvaluator series(n, a, kappa, cfg.truncation_weight, cfg.tolerance);
    Complex integral = contour_integral(tp, one, series, n, kint, cfg.points_per_circle, series.truncation_weight());
    const Complex reference = substitute(torus_moment(nu, n), a, k);

    NumericReport r;
    std::ostringstream id;
    id << "torus-moment-numeric/n=" << n << "/" << nu.str();
    r.case_id = id.str();
    r.equation_tag = "weight-moment";
    r.nodes = static_cast<long>(std::pow(cfg.points_per_circle, n));
    finish(r, integral, reference, std::abs(reference), cfg.tolerance);
    return r;
}

NumericReport kadell_numeric(const Partition& nu, int n, const Rational& alpha, const Rational& beta,
                             const Rational& kappa, const QuadratureConfig& cfg, bool monte_carlo) {
    const double av = to_double(alpha), bv = to_double(beta), kv = to_double(kappa);
    if (av + nu.part(n - 1) <= 0 || bv <= 0 || kv < 0)
        throw std::invalid_argument("kadell_numeric parameter window violated");
    const Complex reference =
        substitute(kadell_closed(nu, n, LinearForm::constant(alpha), LinearForm::constant(beta)), 0.0, kv);

    NumericReport r;
    std::ostringstream id;
    id << "kadell-numeric/n=" << n << "/" << nu.str() << (monte_carlo ? "/mc" : "/quad");
    r.case_id = id.str();
    r.equation_tag = "kadell-integral";

    if (n == 1) {
        const int m = nu.part(0);
        auto f = [&](double y) { return std::pow(y, av + m - 1.0) * std::pow(1.0 - y, bv - 1.0); };
        double value = tanh_sinh_01(f, cfg.tolerance / 10.0, 12);
        r.nodes = static_cast<long>(tanh_sinh_points(12).size());
        finish(r, value, reference, std::abs(reference), cfg.tolerance);
        return r;
    }
    if (n != 2) throw std::invalid_argument("kadell_numeric supports n <= 2");

    NumTable tp = table_of(jack_polynomial_at(nu, n, kappa), 0.0, Complex(kv, 0.0));
    auto integrand = [&](double y1, double y2) {
        std::vector<Complex> x{Complex(y1, 0.0), Complex(y2, 0.0)};
        auto pow = power_table(x, tp.max_exp);
        double p = eval_table(tp, pow).real();
        double w = std::pow(y1, av - 1.0) * std::pow(y2, av - 1.0) * std::pow(1.0 - y1, bv - 1.0) *
                   std::pow(1.0 - y2, bv - 1.0) * std::pow(std::abs(y1 - y2), 2.0 * kv);
        return p * w / 2.0;
    };

    if (monte_carlo) {
        double sum = 0.0, sumsq = 0.0;
        for (long i = 0; i < cfg.mc_samples; ++i) {
            CounterStream stream(cfg.seed, 0, static_cast<uint64_t>(i));
            const double v = integrand(stream.uniform(), stream.uniform());
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / cfg.mc_samples;
        const double var = std::max(0.0, sumsq / cfg.mc_samples - mean * mean);
        r.std_err = std::sqrt(var / cfg.mc_samples);
        r.seed = cfg.seed;
        r.nodes = cfg.mc_samples;
        r.value = mean;
        r.reference = reference;
        r.abs_err = std::abs(mean - reference.real());
        r.rel_err = r.abs_err / std::abs(reference);
        r.tolerance = 2.0;  // two standard errors
        r.pass = r.abs_err <= 2.0 * r.std_err;
        std::ostringstream det;
        det << "std_err=" << r.std_err;
        r.detail = det.str();
        return r;
    }

    double prev = 0.0;
    bool have_prev = false;
    double value = 0.0;
    long nodes = 0;
    for (int level = 6; level <= 10; ++level) {
        auto pts = tanh_sinh_points(level);
        double sum = 0.0;
        for (const auto& p1 : pts)
            for (const auto& p2 : pts) sum += p1.w * p2.w * integrand(p1.x, p2.x);
        nodes = static_cast<long>(pts.size() * pts.size());
        value = sum;
        if (have_prev && std::abs(value - prev) <= 0.1 * cfg.tolerance * std::abs(value)) break;
        prev = value;
        have_prev = true;
    }
    r.nodes = nodes;
    finish(r, value, reference, std::abs(reference), cfg.tolerance);
    return r;
}

NumericReport laguerre_numeric(const Partition& nu, int n, const Rational& alpha, const Rational& kappa,
                               const QuadratureConfig& cfg) {
    const double av = to_double(alpha), kv = to_double(kappa);
    for (int i = 1; i <= n; ++i)
        if (av + kv * (n - i) + nu.part(i - 1) <= 0)
            throw std::invalid_argument("laguerre_numeric parameter window violated");
    const Complex reference = substitute(laguerre_closed(nu, n, LinearForm::constant(alpha)), 0.0, kv);

    NumericReport r;
    std::ostringstream id;
    id << "laguerre-numeric/n=" << n << "/" << nu.str();
    r.case_id = id.str();
    r.equation_tag = "laguerre-integral";

    if (n == 1) {
        const int m = nu.part(0);
        auto rule = gauss_laguerre(std::max(8, m + 2), av - 1.0);
        double value = 0.0;
        for (const auto& nd : rule) value += nd.w * std::pow(nd.x, m);
        r.nodes = static_cast<long>(rule.size());
        finish(r, value, reference, std::abs(reference), cfg.tolerance);
        return r;
    }
    if (n != 2) throw std::invalid_argument("laguerre_numeric supports n <= 2");
    const int kint = kappa_as_int(kappa, n);
    NumTable tp = table_of(jack_polynomial_at(nu, n, kappa), 0.0, Complex(kv, 0.0));
    auto rule = gauss_laguerre(std::max(24, nu.weight() + 2 * kint + 4), av - 1.0);
    double value = 0.0;
    for (const auto& n1 : rule)
        for (const auto& n2 : rule) {
            std::vector<Complex> x{Complex(n1.x, 0.0), Complex(n2.x, 0.0)};
            auto pow = power_table(x, tp.max_exp);
            double p = eval_table(tp, pow).real();
            double dv = std::pow(std::abs(n1.x - n2.x), 2.0 * kv);
            value += n1.w * n2.w * p * dv / 2.0;
        }
    r.nodes = static_cast<long>(rule.size() * rule.size());
    finish(r, value, reference, std::abs(reference), cfg.tolerance);
    return r;
}

NumericReport laguerre_limit_transition(const Partition& nu, int n, const Rational& alpha,
                                        const Rational& kappa) {
    const double av = to_double(alpha), kv = to_double(kappa);
    double log_rows_limit = 0.0;
    for (int i = 1; i <= n; ++i) log_rows_limit += std::lgamma(av + kv * (n - i) + nu.part(i - 1));
    auto log_rows_at = [&](double beta) {
        double s = (n * av + nu.weight() + kv * n * (n - 1)) * std::log(beta);
        for (int i = 1; i <= n; ++i) {
            s += std::lgamma(av + kv * (n - i) + nu.part(i - 1));
            s += std::lgamma(beta + kv * (i - 1));
            s -= std::lgamma(av + beta + kv * (2 * n - i - 1) + nu.part(i - 1));
        }
        return s;
    };
    const double betas[3] = {1e2, 1e3, 1e4};
    double errs[3];
    for (int i = 0; i < 3; ++i)
        errs[i] = std::abs(std::expm1(log_rows_at(betas[i]) - log_rows_limit));

    NumericReport r;
    std::ostringstream id;
    id << "laguerre-limit/n=" << n << "/" << nu.str();
    r.case_id = id.str();
    r.equation_tag = "laguerre-limit-transition";
    r.value = std::exp(log_rows_at(1e4) - log_rows_limit);
    r.reference = 1.0;
    r.abs_err = errs[2];
    r.rel_err = errs[2];
    r.tolerance = 1e-3;
    r.pass = errs[0] > errs[1] && errs[1] > errs[2] && errs[2] < 1e-3;
    std::ostringstream det;
    det << "rescaled relative gaps at beta=1e2,1e3,1e4: " << errs[0] << ", " << errs[1] << ", " << errs[2];
    r.detail = det.str();
    return r;
}

namespace {

// Laurent evaluation of f(2/y) with f given in monomial form: returns
// f(2/y1, ..., 2/yn) given precomputed powers of 1/y_i.
Complex eval_table_inverse(const NumTable& t, const std::vector<std::vector<Complex>>& invpow, double two_pow) {
    Complex s = 0.0;
    for (const auto& [e, c] : t.terms) {
        Complex v = c;
        int deg = 0;
        for (int i = 0; i < t.n; ++i) {
            v *= invpow[i][e[i]];
            deg += e[i];
        }
        s += v * std::pow(two_pow, deg);
    }
    return s;
}

}  // namespace

NumericReport l2_orthogonality_numeric(const Partition& lambda, const Partition& mu, int n, double a_val,
                                       const Rational& kappa, const QuadratureConfig& cfg,
                                       bool monte_carlo) {
    const double kv = to_double(kappa);
    const int maxw = std::max(lambda.weight(), mu.weight());
    if (!(kv >= 0.0) || !(a_val < -2.0 * (maxw + kv * (n - 1)) + 1.0))
        throw std::invalid_argument("l2_orthogonality_numeric admissibility window violated");
    const Complex a(a_val, 0.0), k(kv, 0.0);

    NumTable tl = table_of(bessel_polynomial(lambda, n).monomial_form, a, k);
    NumTable tm = table_of(bessel_polynomial(mu, n).monomial_form, a, k);
    const int dmax = lambda.part(0) + mu.part(0);
    const double gexp = -a_val - 2.0 * kv * (n - 1) - dmax;  // residual weight exponent after folding
    const double prefactor = std::exp(std::numbers::ln2 * ((a_val - 1.0) * n + kv * n * (n - 1)));
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;

    // integrand polynomial after y = 2/x: prod y^dmax * Y_l(2/y) Y_m(2/y) * |Dy|^{2k}
    auto poly_part = [&](const std::vector<Complex>& y) {
        std::vector<Complex> inv(y.size());
        for (size_t i = 0; i < y.size(); ++i) inv[i] = 1.0 / y[i];
        int me = std::max(tl.max_exp, tm.max_exp);
        auto invpow = power_table(inv, me);
        Complex v = eval_table_inverse(tl, invpow, 2.0) * eval_table_inverse(tm, invpow, 2.0);
        for (size_t i = 0; i < y.size(); ++i) v *= std::pow(y[i], static_cast<double>(dmax));
        double dv = 1.0;
        for (size_t i = 0; i < y.size(); ++i)
            for (size_t j = i + 1; j < y.size(); ++j)
                dv *= std::pow(std::abs((y[i] - y[j]).real()), 2.0 * kv);
        return (v * dv).real();
    };

    NumericReport r;
    std::ostringstream id;
    id << "l2-orthogonality/n=" << n << "/" << lambda.str() << "x" << mu.str()
       << (monte_carlo ? "/mc" : "/quad");
    r.case_id = id.str();
    r.equation_tag = "l2-orthogonality";

    auto quad_value = [&](const NumTable& t1, const NumTable& t2, int dm) {
        auto rule = gauss_laguerre(std::max(24, dm + 4), -a_val - 2.0 * kv * (n - 1) - dm);
        double sum = 0.0;
        std::vector<Complex> y(n);
        std::vector<int> idx(n, 0);
        for (;;) {
            double w = 1.0;
            for (int i = 0; i < n; ++i) {
                y[i] = rule[idx[i]].x;
                w *= rule[idx[i]].w;
            }
            std::vector<Complex> inv(n);
            for (int i = 0; i < n; ++i) inv[i] = 1.0 / y[i];
            auto invpow = power_table(inv, std::max(t1.max_exp, t2.max_exp));
            Complex v = eval_table_inverse(t1, invpow, 2.0) * eval_table_inverse(t2, invpow, 2.0);
            for (int i = 0; i < n; ++i) v *= std::pow(y[i].real(), static_cast<double>(dm));
            double dv = 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) dv *= std::pow(std::abs((y[i] - y[j]).real()), 2.0 * kv);
            sum += w * v.real() * dv;
            int i = 0;
            while (i < n && ++idx[i] == static_cast<int>(rule.size())) idx[i++] = 0;
            if (i == n) break;
        }
        return prefactor * sum / nfact;
    };

    const double diag_l = quad_value(tl, tl, 2 * lambda.part(0));
    const double diag_m = quad_value(tm, tm, 2 * mu.part(0));
    const double scale = std::sqrt(std::abs(diag_l) * std::abs(diag_m));

    if (!monte_carlo) {
        double value = quad_value(tl, tm, dmax);
        r.nodes = static_cast<long>(std::pow(std::max(24, dmax + 4), n));
        if (lambda == mu)
            finish(r, value, diag_l, std::abs(diag_l), cfg.tolerance);
        else
            finish(r, value, 0.0, scale, cfg.tolerance);
        return r;
    }

    // Importance sampling with Gamma(gexp + 1) per coordinate.
    const double shape = gexp + 1.0;
    if (shape < 1.0) throw std::invalid_argument("Monte Carlo importance shape must be >= 1");
    double lognorm = n * std::lgamma(shape);
    double sum = 0.0, sumsq = 0.0;
    for (long s = 0; s < cfg.mc_samples; ++s) {
        CounterStream stream(cfg.seed, 1, static_cast<uint64_t>(s));
        std::vector<Complex> y(n);
        for (int i = 0; i < n; ++i) y[i] = stream.gamma(shape);
        const double v = poly_part(y) * std::exp(lognorm) * prefactor / nfact;
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / cfg.mc_samples;
    const double var = std::max(0.0, sumsq / cfg.mc_samples - mean * mean);
    r.std_err = std::sqrt(var / cfg.mc_samples);
    r.seed = cfg.seed;
    r.nodes = cfg.mc_samples;
    if (lambda == mu)
        finish(r, mean, diag_l, std::abs(diag_l), std::max(cfg.tolerance, 3.0 * r.std_err / std::abs(diag_l)));
    else
        finish(r, mean, 0.0, scale, cfg.tolerance);
    std::ostringstream det;
    det << "std_err=" << r.std_err;
    r.detail = det.str();
    return r;
}

NumericReport halfline_moment_numeric(const Partition& nu, int n, const Rational& a_val,
                                      const Rational& kappa, const QuadratureConfig& cfg) {
    const double av = to_double(a_val), kv = to_double(kappa);
    if (!(av < -nu.part(0) - 2.0 * kv * (n - 1) + 1.0))
        throw std::invalid_argument("halfline_moment_numeric admissibility window violated");
    const Complex reference = substitute(f2_closed(nu, n), Complex(av, 0.0), Complex(kv, 0.0));
    NumTable tp = table_of(jack_polynomial_at(nu, n, kappa), Complex(av, 0.0), Complex(kv, 0.0));
    const int dmax = nu.part(0);
    const double prefactor =
        std::exp(std::numbers::ln2 * ((av - 1.0) * n + kv * n * (n - 1) + nu.weight()));
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;

    auto rule = gauss_laguerre(std::max(24, dmax + 2 * static_cast<int>(kv) * (n - 1) + 4),
                               -av - 2.0 * kv * (n - 1) - dmax);
    double sum = 0.0;
    std::vector<Complex> y(n);
    std::vector<int> idx(n, 0);
    for (;;) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            y[i] = rule[idx[i]].x;
            w *= rule[idx[i]].w;
        }
        std::vector<Complex> inv(n);
        for (int i = 0; i < n; ++i) inv[i] = 1.0 / y[i];
        auto invpow = power_table(inv, tp.max_exp);
        // P_nu(1/y), times y^dmax folded back out of the weight
        Complex v = 0.0;
        for (const auto& [e, c] : tp.terms) {
            Complex t = c;
            for (int i = 0; i < n; ++i) t *= invpow[i][e[i]];
            v += t;
        }
        for (int i = 0; i < n; ++i) v *= std::pow(y[i].real(), static_cast<double>(dmax));
        double dv = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) dv *= std::pow(std::abs((y[i] - y[j]).real()), 2.0 * kv);
        sum += w * v.real() * dv;
        int i = 0;
        while (i < n && ++idx[i] == static_cast<int>(rule.size())) idx[i++] = 0;
        if (i == n) break;
    }
    // The 2^{|nu|} from P_nu(2/y) = 2^{|nu|} P_nu(1/y) sits in the prefactor.
    const double value = prefactor * sum / nfact;

    NumericReport r;
    std::ostringstream id;
    id << "halfline-moment-numeric/n=" << n << "/" << nu.str();
    r.case_id = id.str();
    r.equation_tag = "halfline-moment";
    r.nodes = static_cast<long>(std::pow(rule.size(), n));
    finish(r, value, reference, std::abs(reference), cfg.tolerance);
    return r;
}

NumericReport bridge_numeric_spot(const Partition& nu, int n, const Rational& a_val, const Rational& kappa,
                                  const QuadratureConfig& cfg, bool corrected) {
    const double av = to_double(a_val), kv = to_double(kappa);
    const int kint = kappa_as_int(kappa, n);
    const Complex a(av, 0.0), k(kv, 0.0);
    NumTable tp = table_of(jack_polynomial_at(nu, n, kappa), a, k);
    NumTable one = table_of(SymmetricPolynomial::one(n), a, k);
    WeightSeriesEvaluator series(n, a, kappa, cfg.truncation_weight, cfg.tolerance);
    Complex lhs = contour_integral(tp, one, series, n, kint, cfg.points_per_circle, series.truncation_weight());
    GammaProduct constant = corrected ? bridge_constant_corrected(n) : bridge_constant_displayed(n);
    constant *= f2_closed(nu, n);
    const Complex rhs = substitute(constant, a, k);

    NumericReport r;
    std::ostringstream id;
    id << "bridge-numeric/" << (corrected ? "corrected" : "displayed") << "/n=" << n << "/" << nu.str();
    r.case_id = id.str();
    r.equation_tag = corrected ? "torus-halfline-bridge-corrected" : "torus-halfline-bridge";
    r.nodes = static_cast<long>(std::pow(cfg.points_per_circle, n));
    finish(r, lhs, rhs, std::abs(rhs), cfg.tolerance);
    return r;
}

}  // namespace besselmv::numeric
