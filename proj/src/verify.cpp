#include "besselmv/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace besselmv {

namespace {

VerificationReport run_case(const std::string& id, const std::string& tag,
                            const std::function<void(VerificationReport&)>& body) {
    VerificationReport r;
    r.case_id = id;
    r.equation_tag = tag;
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string pair_id(const char* family, int n, const Partition& x, const Partition& y) {
    std::ostringstream os;
    os << family << "/n=" << n << "/" << x.str() << "x" << y.str();
    return os.str();
}

std::string single_id(const char* family, int n, const Partition& x) {
    std::ostringstream os;
    os << family << "/n=" << n << "/" << x.str();
    return os.str();
}

// Trial division of a denominator by the allowed pole families.
bool denominator_in_allowed_family(const ParamPolynomial& den, int n, int weight) {
    ParamPolynomial rest = den.rational_content_split().second;
    const int imax = 2 * (n - 1);
    const int mmax = std::max(0, rest.degree_a()) + 2 * weight;
    for (int i = 0; i <= imax; ++i)
        for (int m = 0; m <= mmax; ++m) {
            ParamPolynomial factor = LinearForm(Rational(m - 1), Rational(1), Rational(i)).to_poly();
            while (true) {
                auto quo = rest.divide_exact(factor);
                if (!quo) break;
                rest = quo->rational_content_split().second;
            }
        }
    while (!rest.is_constant() && rest.degree_a() == 0) {
        const Rational trail = rest.coeff(0, 0);
        if (trail == 0) return false;
        const long lead = std::labs(rest.leading_coefficient().get_num().get_si());
        const long tc = std::labs(trail.get_num().get_si());
        bool found = false;
        for (long q = 1; q <= lead && !found; ++q) {
            if (lead % q != 0) continue;
            for (long p = 1; p <= tc && !found; ++p) {
                if (tc % p != 0) continue;
                auto quo = rest.divide_exact(LinearForm(Rational(p), Rational(0), Rational(q)).to_poly());
                if (quo) {
                    rest = quo->rational_content_split().second;
                    found = true;
                }
            }
        }
        if (!found) return false;
    }
    return rest.is_constant();
}

}  // namespace

std::vector<VerificationReport> verify_orthogonality(int n, int max_weight) {
    std::vector<VerificationReport> out;
    const auto parts = enumerate_partitions(max_weight, n);
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            const Partition &lam = parts[i], &mu = parts[j];
            out.push_back(run_case(pair_id("orthogonality", n, lam, mu), "torus-orthogonality",
                                   [&](VerificationReport& r) {
                                       WPairing p = w_pairing(bessel_polynomial(lam, n).monomial_form,
                                                              bessel_polynomial(mu, n).monomial_form, n);
                                       r.pass = p.rational_part.is_zero();
                                       r.lhs = p.value.str();
                                       r.rhs = "0";
                                   }));
        }
    return out;
}

std::vector<VerificationReport> verify_diagonal_norms(int n, int max_weight) {
    std::vector<VerificationReport> out;
    const GammaProduct base = torus_moment_base(n);
    // K(empty) = G0(n) / normfactor_rhs(empty)
    GammaProduct k_empty = base;
    k_empty *= normfactor_rhs(Partition(), n).inverse();
    k_empty.normalize();
    for (const auto& lam : enumerate_partitions(max_weight, n)) {
        if (n == 1) {
            out.push_back(run_case(single_id("normfactor", n, lam), "norm-factor",
                                   [&](VerificationReport& r) {
                                       WPairing p = w_pairing(bessel_polynomial(lam, n).monomial_form,
                                                              bessel_polynomial(lam, n).monomial_form, n);
                                       GammaProduct rhs(normfactor_rhs(lam, n));
                                       r.pass = gamma_equal(p.value, rhs);
                                       r.lhs = p.value.str();
                                       r.rhs = rhs.str();
                                   }));
        }
        out.push_back(run_case(single_id("diagonal-ratio", n, lam), "norm-factor-ratio",
                               [&](VerificationReport& r) {
                                   WPairing p = w_pairing(bessel_polynomial(lam, n).monomial_form,
                                                          bessel_polynomial(lam, n).monomial_form, n);
                                   GammaProduct k = p.value;
                                   k *= normfactor_rhs(lam, n).inverse();
                                   r.pass = gamma_equal(k, k_empty);
                                   if (n == 1) r.pass = r.pass && gamma_equal(k, GammaProduct(Rational(1)));
                                   r.lhs = k.str();
                                   r.rhs = k_empty.str();
                               }));
    }
    return out;
}

VerificationReport moment_consistency_check(const Partition& nu, int n) {
    return run_case(single_id("moment-consistency", n, nu), "weight-moment-consistency",
                    [&](VerificationReport& r) {
                        GammaProduct lhs = torus_moment(nu, n);
                        Partition shifted = nu.plus_ones(n);
                        GammaProduct rhs = weight_coefficient(shifted, n);
                        rhs *= jack_norm_closed(shifted, n);
                        rhs *= ParamRational(pow_rational(Rational(-2), nu.weight() + n));
                        r.pass = gamma_equal(lhs, rhs);
                        r.lhs = lhs.str();
                        r.rhs = rhs.str();
                    });
}

std::vector<VerificationReport> verify_moments(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& nu : enumerate_partitions(max_weight, n)) out.push_back(moment_consistency_check(nu, n));
    // MomentTable invariant: the ratio to the base moment is always rational.
    for (const auto& nu : enumerate_partitions(max_weight, n))
        out.push_back(run_case(single_id("moment-ratio-rational", n, nu), "weight-moment-consistency",
                               [&](VerificationReport& r) {
                                   GammaProduct q = torus_moment(nu, n);
                                   q /= torus_moment_base(n);
                                   r.pass = q.is_rational() &&
                                            q.rational_value() == torus_moment_ratio(nu, n);
                                   r.lhs = q.str();
                                   r.rhs = torus_moment_ratio(nu, n).str();
                               }));
    return out;
}

std::vector<VerificationReport> verify_jack_norms(int n, int max_weight, int kappa_int) {
    std::vector<VerificationReport> out;
    const auto parts = enumerate_partitions(max_weight, n);
    const Rational kq(kappa_int);
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto pi = jack_polynomial_at(parts[i], n, kq);
        for (size_t j = i; j < parts.size(); ++j) {
            const auto pj = jack_polynomial_at(parts[j], n, kq);
            std::ostringstream id;
            id << "jack-norm/kappa=" << kappa_int << "/n=" << n << "/" << parts[i].str() << "x"
               << parts[j].str();
            out.push_back(run_case(id.str(), "jack-torus-norm", [&](VerificationReport& r) {
                Rational v = torus_pairing_integer_kappa(pi, pj, kappa_int);
                Rational want = (i == j)
                                    ? jack_norm_closed(parts[i], n).exact_value_at(std::nullopt, kq)
                                    : Rational(0);
                r.pass = v == want;
                r.lhs = v.get_str();
                r.rhs = want.get_str();
            }));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_zero_specialisation(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& lam : enumerate_partitions(max_weight, n)) {
        out.push_back(run_case(single_id("zero-specialisation", n, lam), "bessel-at-zero",
                               [&](VerificationReport& r) {
                                   ParamRational got =
                                       bessel_polynomial(lam, n).monomial_form.coeff(Partition());
                                   ParamRational want = bessel_at_zero(lam, n).rational_value();
                                   r.pass = got == want;
                                   r.lhs = got.str();
                                   r.rhs = want.str();
                               }));
        out.push_back(run_case(single_id("zero-specialisation-box", n, lam), "bessel-at-zero-box",
                               [&](VerificationReport& r) {
                                   ParamRational got =
                                       bessel_polynomial(lam, n).monomial_form.coeff(Partition());
                                   ParamRational want = bessel_at_zero_box_form(lam, n);
                                   r.pass = got == want;
                                   r.lhs = got.str();
                                   r.rhs = want.str();
                               }));
    }
    return out;
}

std::vector<VerificationReport> verify_rationality(int n, int max_weight) {
    std::vector<VerificationReport> out;
    const auto parts = enumerate_partitions(max_weight, n);
    for (const auto& lam : parts)
        out.push_back(run_case(single_id("pole-certificate", n, lam), "pole-locus",
                               [&](VerificationReport& r) {
                                   auto cert = pole_certificate(bessel_polynomial(lam, n));
                                   r.pass = cert.pass;
                                   std::ostringstream os;
                                   for (const auto& f : cert.factors) os << "(" << f.str() << ")";
                                   r.lhs = os.str().empty() ? "1" : os.str();
                                   r.rhs = cert.pass ? r.lhs : cert.leftover.str();
                               }));
    // Rationality of pairings: the ratio to the base moment is rational with
    // poles confined to the allowed family.
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i; j < parts.size(); ++j)
            out.push_back(run_case(pair_id("pairing-rationality", n, parts[i], parts[j]),
                                   "pairing-rationality", [&](VerificationReport& r) {
                                       WPairing p = w_pairing(bessel_polynomial(parts[i], n).monomial_form,
                                                              bessel_polynomial(parts[j], n).monomial_form, n);
                                       const int budget = parts[i].weight() + parts[j].weight();
                                       r.pass = denominator_in_allowed_family(p.rational_part.den(), n, budget);
                                       r.lhs = p.rational_part.str();
                                       r.rhs = r.pass ? "poles in allowed family" : "unexpected pole factor";
                                   }));
    return out;
}

VerificationReport integral_equality_check(const Partition& nu, int n) {
    return run_case(single_id("integral-bridge", n, nu), "torus-halfline-bridge",
                    [&](VerificationReport& r) {
                        GammaProduct lhs = torus_moment(nu, n);
                        GammaProduct rhs = bridge_constant_displayed(n);
                        rhs *= f2_closed(nu, n);
                        r.pass = gamma_equal(lhs, rhs);
                        r.lhs = lhs.str();
                        r.rhs = rhs.str();
                    });
}

std::vector<VerificationReport> verify_integral_equality(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& nu : enumerate_partitions(max_weight, n)) {
        out.push_back(integral_equality_check(nu, n));
        out.push_back(run_case(single_id("integral-bridge-corrected", n, nu),
                               "torus-halfline-bridge-corrected", [&](VerificationReport& r) {
                                   GammaProduct lhs = torus_moment(nu, n);
                                   GammaProduct rhs = bridge_constant_corrected(n);
                                   rhs *= f2_closed(nu, n);
                                   r.pass = gamma_equal(lhs, rhs);
                                   r.lhs = lhs.str();
                                   r.rhs = rhs.str();
                               }));
        // The mismatch of the displayed constant is nu-independent; report it.
        out.push_back(run_case(single_id("integral-bridge-ratio", n, nu), "torus-halfline-bridge-ratio",
                               [&](VerificationReport& r) {
                                   GammaProduct ratio = torus_moment(nu, n);
                                   GammaProduct rhs = bridge_constant_displayed(n);
                                   rhs *= f2_closed(nu, n);
                                   ratio /= rhs;
                                   GammaProduct expect = bridge_constant_corrected(n);
                                   expect /= bridge_constant_displayed(n);
                                   r.pass = gamma_equal(ratio, expect);
                                   r.lhs = ratio.str();
                                   r.rhs = expect.str();
                               }));
    }
    return out;
}

std::vector<VerificationReport> verify_jack_integrality(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& lam : enumerate_partitions(max_weight, n))
        out.push_back(run_case(single_id("jack-integrality", n, lam), "jack-integral-form",
                               [&](VerificationReport& r) {
                                   auto [j, h] = jack_integral_form(lam, n);
                                   r.pass = true;
                                   for (const auto& [mu, c] : j.coeffs()) {
                                       const ParamPolynomial& den = c.den();
                                       bool ok = den.degree_a() == 0 && den.terms().size() == 1 &&
                                                 c.num().degree_a() == 0;
                                       if (ok) {
                                           Rational dc = den.leading_coefficient();
                                           for (const auto& [mono, coef] : c.num().terms()) {
                                               Rational v = coef / dc;
                                               ok = ok && is_integer(v) && v > 0 && mono.dk <= den.degree_k();
                                           }
                                       }
                                       r.pass = r.pass && ok;
                                   }
                                   r.lhs = r.pass ? "coefficients in N[1/k]" : "coefficient outside N[1/k]";
                                   r.rhs = "coefficients in N[1/k]";
                               }));
    return out;
}

std::vector<VerificationReport> verify_structural(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& lam : enumerate_partitions(max_weight, n)) {
        out.push_back(run_case(single_id("structural-D-triangular", n, lam), "operator-triangularity",
                               [&](VerificationReport& r) {
                                   auto img = apply_D(SymmetricPolynomial::monomial(lam, n));
                                   r.pass = true;
                                   for (const auto& [mu, c] : img.coeffs())
                                       r.pass = r.pass && mu.weight() == lam.weight() && dominance_leq(mu, lam);
                                   r.lhs = r.pass ? "image within dominance ideal" : "dominance violation";
                                   r.rhs = "image within dominance ideal";
                               }));
        out.push_back(run_case(single_id("structural-DB-containment", n, lam), "operator-containment",
                               [&](VerificationReport& r) {
                                   auto img = to_jack_basis(apply_DB(jack_polynomial(lam, n)));
                                   r.pass = true;
                                   for (const auto& [mu, c] : img.coeffs)
                                       r.pass = r.pass && mu.contained_in(lam);
                                   r.lhs = r.pass ? "image within containment ideal" : "containment violation";
                                   r.rhs = "image within containment ideal";
                               }));
        out.push_back(run_case(single_id("structural-shift-identity", n, lam), "jack-shift-identity",
                               [&](VerificationReport& r) {
                                   auto lhs = jack_polynomial(lam, n).multiply(
                                       SymmetricPolynomial::monomial(Partition(std::vector<int>(n, 1)), n));
                                   r.pass = lhs == jack_polynomial(lam.plus_ones(n), n);
                                   r.lhs = "x_1...x_n P_" + lam.str();
                                   r.rhs = "P_" + lam.plus_ones(n).str();
                               }));
        const int box = std::max(1, lam.part(0));
        out.push_back(run_case(single_id("structural-complement-reciprocal", n, lam), "jack-complement",
                               [&](VerificationReport& r) {
                                   r.pass = reciprocal_complement_check(lam, box, n);
                                   r.lhs = "(y_1...y_n)^N P_" + lam.str() + "(1/y)";
                                   r.rhs = "P_" + lam.complement_in_box(box, n).str();
                               }));
    }
    return out;
}

std::vector<VerificationReport> verify_halfline_complement_chain(int n, int max_weight) {
    std::vector<VerificationReport> out;
    for (const auto& nu : enumerate_partitions(max_weight, n))
        for (int box : {nu.part(0), nu.part(0) + 2}) {
            std::ostringstream id;
            id << "halfline-complement/n=" << n << "/" << nu.str() << "/N=" << box;
            out.push_back(run_case(id.str(), "halfline-complement-chain", [&](VerificationReport& r) {
                GammaProduct lhs = f2_closed(nu, n);
                LinearForm alpha_hat(Rational(1 - box), Rational(-1), Rational(-2 * (n - 1)));
                GammaProduct rhs = laguerre_closed(nu.complement_in_box(box, n), n, alpha_hat);
                rhs *= GammaProduct::two_pow(
                    LinearForm(Rational(nu.weight() - n), Rational(n), Rational(n * (n - 1))));
                r.pass = gamma_equal(lhs, rhs);
                r.lhs = lhs.str();
                r.rhs = rhs.str();
            }));
        }
    return out;
}

}  // namespace besselmv
