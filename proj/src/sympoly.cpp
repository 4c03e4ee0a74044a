#include "besselmv/sympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace besselmv {

void ExponentPolynomial::add_term(const Key& e, const ParamRational& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamRational ExponentPolynomial::coeff(const Key& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamRational() : it->second;
}

ExponentPolynomial& ExponentPolynomial::operator+=(const ExponentPolynomial& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ExponentPolynomial& ExponentPolynomial::operator-=(const ExponentPolynomial& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ExponentPolynomial operator*(const ExponentPolynomial& x, const ExponentPolynomial& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("variable count mismatch");
    ExponentPolynomial r(x.n_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            ExponentPolynomial::Key e(x.n_);
            for (int i = 0; i < x.n_; ++i) e[i] = ex[i] + ey[i];
            r.add_term(e, cx * cy);
        }
    return r;
}

ExponentPolynomial ExponentPolynomial::scaled(const ParamRational& c) const {
    ExponentPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

ExponentPolynomial ExponentPolynomial::derivative(int var) const {
    ExponentPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Key d(e);
        d[var] -= 1;
        r.add_term(d, c * ParamRational(Rational(e[var])));
    }
    return r;
}

ExponentPolynomial ExponentPolynomial::shifted(int var, int amount) const {
    ExponentPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        Key d(e);
        d[var] += amount;
        r.terms_.emplace(d, c);
    }
    return r;
}

ExponentPolynomial ExponentPolynomial::divide_by_difference(int i, int j) const {
    // Synthetic division by (x_i - x_j): group by the exponent of x_i and run
    // q_{d-1} = c_d + x_j q_d downward; the residue c_0 + x_j q_0 must vanish.
    std::map<int, ExponentPolynomial> slices;
    int max_deg = 0;
    for (const auto& [e, c] : terms_) {
        Key reduced(e);
        const int d = reduced[i];
        if (d < 0) throw std::logic_error("divide_by_difference on negative power of the pivot variable");
        reduced[i] = 0;
        auto [it, inserted] = slices.try_emplace(d, n_);
        it->second.add_term(reduced, c);
        max_deg = std::max(max_deg, d);
    }
    ExponentPolynomial quotient(n_);
    ExponentPolynomial carry(n_);  // q_d while descending
    for (int d = max_deg; d >= 1; --d) {
        ExponentPolynomial qd = carry.shifted(j, 1);
        auto it = slices.find(d);
        if (it != slices.end()) qd += it->second;
        quotient += qd.shifted(i, d - 1);
        carry = std::move(qd);
    }
    ExponentPolynomial residue = carry.shifted(j, 1);
    auto it0 = slices.find(0);
    if (it0 != slices.end()) residue += it0->second;
    if (!residue.is_zero())
        throw std::logic_error("polynomial not divisible by variable difference; input was not symmetric");
    return quotient;
}

ExponentPolynomial ExponentPolynomial::inverted_variables() const {
    ExponentPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        Key d(e);
        for (auto& v : d) v = -v;
        r.terms_.emplace(d, c);
    }
    return r;
}

std::complex<double> ExponentPolynomial::eval(const std::vector<std::complex<double>>& x,
                                              std::complex<double> a_val, std::complex<double> k_val) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point length mismatch");
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.eval(a_val, k_val);
        for (int i = 0; i < n_; ++i) {
            const int p = e[i];
            for (int r = 0; r < p; ++r) t *= x[i];
            for (int r = 0; r > p; --r) t /= x[i];
        }
        s += t;
    }
    return s;
}

SymmetricPolynomial SymmetricPolynomial::monomial(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("monomial basis element needs length(lambda) <= n");
    SymmetricPolynomial f(n);
    f.coeffs_.emplace(lambda, ParamRational(Rational(1)));
    return f;
}

SymmetricPolynomial SymmetricPolynomial::one(int n) { return monomial(Partition(), n); }

ParamRational SymmetricPolynomial::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? ParamRational() : it->second;
}

void SymmetricPolynomial::set_coeff(const Partition& mu, const ParamRational& c) {
    if (mu.length() > n_) throw std::invalid_argument("coefficient key longer than variable count");
    if (c.is_zero())
        coeffs_.erase(mu);
    else
        coeffs_[mu] = c;
}

SymmetricPolynomial& SymmetricPolynomial::operator+=(const SymmetricPolynomial& o) {
    if (n_ == 0 && coeffs_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [mu, c] : o.coeffs_) {
        auto it = coeffs_.find(mu);
        if (it == coeffs_.end()) {
            coeffs_.emplace(mu, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

SymmetricPolynomial& SymmetricPolynomial::operator-=(const SymmetricPolynomial& o) {
    return *this += o.scaled(ParamRational(Rational(-1)));
}

SymmetricPolynomial SymmetricPolynomial::scaled(const ParamRational& c) const {
    SymmetricPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : coeffs_) r.coeffs_.emplace(mu, v * c);
    return r;
}

ExponentPolynomial SymmetricPolynomial::expand() const {
    ExponentPolynomial r(n_);
    for (const auto& [mu, c] : coeffs_) {
        std::vector<int> exps(n_, 0);
        for (int i = 0; i < mu.length(); ++i) exps[i] = mu.parts()[i];
        std::sort(exps.begin(), exps.end());
        do {
            r.add_term(exps, c);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return r;
}

SymmetricPolynomial SymmetricPolynomial::multiply(const SymmetricPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    return collect_symmetric(expand() * o.expand());
}

SymmetricPolynomial SymmetricPolynomial::substitute_k(const Rational& k_val) const {
    SymmetricPolynomial r(n_);
    for (const auto& [mu, c] : coeffs_) r.set_coeff(mu, c.substitute_k(k_val));
    return r;
}

std::complex<double> SymmetricPolynomial::eval(const std::vector<std::complex<double>>& x,
                                               std::complex<double> a_val, std::complex<double> k_val) const {
    return expand().eval(x, a_val, k_val);
}

std::string SymmetricPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*m" << mu.str();
    }
    return os.str();
}

SymmetricPolynomial collect_symmetric(const ExponentPolynomial& p, bool verify) {
    SymmetricPolynomial f(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        bool decreasing = true;
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) {
                decreasing = false;
                break;
            }
        if (!decreasing) continue;
        if (!e.empty() && e.back() < 0) throw std::logic_error("cannot collect Laurent terms into the monomial basis");
        f.set_coeff(Partition(e), c);
    }
    if (verify && !(f.expand() == p))
        throw std::logic_error("expansion is not symmetric");
    return f;
}

namespace {

// x_i^2 d_i applied termwise: c x^e -> c e_i x^(e + delta_i).
ExponentPolynomial x2_derivative(const ExponentPolynomial& f, int i) {
    ExponentPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        auto d = e;
        d[i] += 1;
        r.add_term(d, c * ParamRational(Rational(e[i])));
    }
    return r;
}

ExponentPolynomial sutherland_term(const ExponentPolynomial& f) {
    const int n = f.nvars();
    ExponentPolynomial sum(n);
    std::vector<ExponentPolynomial> h;
    h.reserve(n);
    for (int i = 0; i < n; ++i) h.push_back(x2_derivative(f, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sum += (h[i] - h[j]).divide_by_difference(i, j);
    return sum;
}

}  // namespace

SymmetricPolynomial apply_D(const SymmetricPolynomial& f, const ParamRational& kappa) {
    const int n = f.nvars();
    ExponentPolynomial fx = f.expand();
    ExponentPolynomial out(n);
    for (const auto& [e, c] : fx.terms()) {
        long m = 0;
        for (int v : e) m += static_cast<long>(v) * (v - 1);
        if (m != 0) out.add_term(e, c * ParamRational(Rational(m)));
    }
    out += sutherland_term(fx).scaled(kappa * ParamRational(Rational(2)));
    return collect_symmetric(out, true);
}

SymmetricPolynomial apply_DB(const SymmetricPolynomial& f, const ParamRational& kappa) {
    const int n = f.nvars();
    ExponentPolynomial fx = f.expand();
    ExponentPolynomial out(n);
    const ParamRational a = ParamRational::var_a();
    for (const auto& [e, c] : fx.terms()) {
        long m2 = 0, deg = 0;
        for (int v : e) {
            m2 += static_cast<long>(v) * (v - 1);
            deg += v;
        }
        // x_i^2 d_i^2 and a x_i d_i keep the exponent; 2 d_i lowers it.
        ParamRational diag = ParamRational(Rational(m2)) + a * ParamRational(Rational(deg));
        if (!diag.is_zero()) out.add_term(e, c * diag);
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            auto d = e;
            d[i] -= 1;
            out.add_term(d, c * ParamRational(Rational(2L * e[i])));
        }
    }
    out += sutherland_term(fx).scaled(kappa * ParamRational(Rational(2)));
    return collect_symmetric(out, true);
}

}  // namespace besselmv
