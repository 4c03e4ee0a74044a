#include "besselmv/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace besselmv {

Rational ParamPolynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int ParamPolynomial::degree_a() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.da);
    return terms_.empty() ? -1 : d;
}

int ParamPolynomial::degree_k() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dk);
    return terms_.empty() ? -1 : d;
}

int ParamPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.da + terms_.rbegin()->first.dk;
}

Rational ParamPolynomial::coeff(int da, int dk) const {
    auto it = terms_.find(ParamMonomial{da, dk});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPolynomial::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void ParamPolynomial::set_term(int da, int dk, const Rational& c) {
    if (c == 0)
        terms_.erase(ParamMonomial{da, dk});
    else
        terms_[ParamMonomial{da, dk}] = c;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

ParamPolynomial operator*(const ParamPolynomial& x, const ParamPolynomial& y) {
    ParamPolynomial r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            ParamMonomial m{mx.da + my.da, mx.dk + my.dk};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, cx * cy);
            } else {
                it->second += cx * cy;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ParamPolynomial ParamPolynomial::pow(unsigned e) const {
    ParamPolynomial r(Rational(1));
    ParamPolynomial b(*this);
    while (e > 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

ParamPolynomial ParamPolynomial::substitute_a(const Rational& a_val) const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rational v = c * pow_rational(a_val, m.da);
        auto it = r.terms_.find(ParamMonomial{0, m.dk});
        if (it == r.terms_.end()) {
            if (v != 0) r.terms_.emplace(ParamMonomial{0, m.dk}, v);
        } else {
            it->second += v;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

ParamPolynomial ParamPolynomial::substitute_k(const Rational& k_val) const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rational v = c * pow_rational(k_val, m.dk);
        auto it = r.terms_.find(ParamMonomial{m.da, 0});
        if (it == r.terms_.end()) {
            if (v != 0) r.terms_.emplace(ParamMonomial{m.da, 0}, v);
        } else {
            it->second += v;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

std::complex<double> ParamPolynomial::eval(std::complex<double> a_val, std::complex<double> k_val) const {
    std::complex<double> s = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = to_double(c);
        for (int i = 0; i < m.da; ++i) t *= a_val;
        for (int i = 0; i < m.dk; ++i) t *= k_val;
        s += t;
    }
    return s;
}

std::pair<Rational, ParamPolynomial> ParamPolynomial::rational_content_split() const {
    if (terms_.empty()) return {Rational(0), ParamPolynomial()};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coefficient() < 0) content = -content;
    ParamPolynomial prim;
    for (const auto& [m, c] : terms_) prim.terms_.emplace(m, c / content);
    return {content, prim};
}

namespace {

// Dense recursive representation over the integers: index = degree in k,
// entries univariate integer polynomials in a (index = degree in a).
using UPoly = std::vector<Integer>;
using BPoly = std::vector<UPoly>;

void u_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
int u_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
bool u_is_zero(const UPoly& p) { return p.empty(); }

UPoly u_mul(const UPoly& x, const UPoly& y) {
    if (x.empty() || y.empty()) return {};
    UPoly r(x.size() + y.size() - 1, Integer(0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    u_trim(r);
    return r;
}

UPoly u_scale(const UPoly& x, const Integer& c) {
    if (c == 0) return {};
    UPoly r(x);
    for (auto& v : r) v *= c;
    return r;
}

UPoly u_sub(UPoly x, const UPoly& y) {
    if (x.size() < y.size()) x.resize(y.size(), Integer(0));
    for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    u_trim(x);
    return x;
}

Integer u_content(const UPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly u_divexact_int(const UPoly& p, const Integer& c) {
    UPoly r(p);
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return r;
}

UPoly u_primitive(const UPoly& p) {
    if (p.empty()) return p;
    Integer g = u_content(p);
    if (sgn(p.back()) < 0) g = -g;
    return u_divexact_int(p, g);
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
UPoly u_prem(UPoly f, const UPoly& g) {
    const int dg = u_deg(g);
    const Integer& lg = g.back();
    while (u_deg(f) >= dg) {
        const int shift = u_deg(f) - dg;
        Integer lf = f.back();
        for (auto& c : f) c *= lg;
        UPoly sub(shift + static_cast<size_t>(dg) + 1, Integer(0));
        for (int i = 0; i <= dg; ++i) sub[i + shift] = g[i] * lf;
        f = u_sub(std::move(f), sub);
        if (u_is_zero(f)) break;
    }
    return f;
}

UPoly u_gcd(UPoly f, UPoly g) {
    if (u_is_zero(f)) return u_primitive(g);
    if (u_is_zero(g)) return u_primitive(f);
    Integer cf = u_content(f), cg = u_content(g), cr;
    mpz_gcd(cr.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    f = u_divexact_int(f, cf);
    g = u_divexact_int(g, cg);
    if (u_deg(f) < u_deg(g)) std::swap(f, g);
    while (!u_is_zero(g)) {
        UPoly r = u_prem(f, g);
        f = std::move(g);
        g = u_primitive(r);
    }
    f = u_primitive(f);
    UPoly result = u_scale(f, cr);
    if (sgn(result.back()) < 0)
        for (auto& c : result) c = -c;
    return result;
}

// Exact univariate division over Z up to rational scaling is not needed;
// bivariate exact division is done over Q on the sparse form instead.

void b_trim(BPoly& p) {
    while (!p.empty() && u_is_zero(p.back())) p.pop_back();
}
int b_deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }
bool b_is_zero(const BPoly& p) { return p.empty(); }

BPoly b_mul_u(const BPoly& p, const UPoly& c) {
    BPoly r;
    r.reserve(p.size());
    for (const auto& q : p) r.push_back(u_mul(q, c));
    b_trim(r);
    return r;
}

BPoly b_sub(BPoly x, const BPoly& y) {
    if (x.size() < y.size()) x.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) x[i] = u_sub(std::move(x[i]), y[i]);
    b_trim(x);
    return x;
}

UPoly b_content(const BPoly& p) {
    UPoly g;
    for (const auto& q : p) g = u_gcd(g, q);
    return g;
}

// Divides every k-coefficient of p by the univariate polynomial d; division
// is exact by construction (d is the content).
BPoly b_divexact_u(const BPoly& p, const UPoly& d) {
    BPoly r;
    r.reserve(p.size());
    for (const auto& q : p) {
        // Exact univariate division over Z.
        UPoly rem(q), quot;
        if (u_is_zero(rem)) {
            r.push_back({});
            continue;
        }
        quot.assign(rem.size() - d.size() + 1, Integer(0));
        while (u_deg(rem) >= u_deg(d)) {
            const int shift = u_deg(rem) - u_deg(d);
            Integer q0;
            mpz_divexact(q0.get_mpz_t(), rem.back().get_mpz_t(), d.back().get_mpz_t());
            quot[shift] = q0;
            UPoly sub(shift + d.size(), Integer(0));
            for (size_t i = 0; i < d.size(); ++i) sub[i + shift] = d[i] * q0;
            rem = u_sub(std::move(rem), sub);
            if (u_is_zero(rem)) break;
        }
        if (!u_is_zero(rem)) throw std::logic_error("content division not exact");
        u_trim(quot);
        r.push_back(std::move(quot));
    }
    b_trim(r);
    return r;
}

BPoly b_prem(BPoly f, const BPoly& g) {
    const int dg = b_deg(g);
    const UPoly& lg = g.back();
    while (b_deg(f) >= dg) {
        const int shift = b_deg(f) - dg;
        UPoly lf = f.back();
        for (auto& c : f) c = u_mul(c, lg);
        BPoly sub(static_cast<size_t>(shift) + g.size());
        for (size_t i = 0; i < g.size(); ++i) sub[i + shift] = u_mul(g[i], lf);
        f = b_sub(std::move(f), sub);
        if (b_is_zero(f)) break;
    }
    return f;
}

BPoly to_bpoly(const ParamPolynomial& p) {
    BPoly r;
    auto [content, prim] = p.rational_content_split();
    if (content == 0) return r;
    for (const auto& [m, c] : prim.terms()) {
        if (static_cast<size_t>(m.dk) >= r.size()) r.resize(m.dk + 1);
        UPoly& u = r[m.dk];
        if (static_cast<size_t>(m.da) >= u.size()) u.resize(m.da + 1, Integer(0));
        u[m.da] = c.get_num();  // primitive form has integer coefficients
    }
    return r;
}

ParamPolynomial from_bpoly(const BPoly& p) {
    ParamPolynomial r;
    for (size_t dk = 0; dk < p.size(); ++dk)
        for (size_t da = 0; da < p[dk].size(); ++da)
            if (p[dk][da] != 0) r.set_term(static_cast<int>(da), static_cast<int>(dk), Rational(p[dk][da]));
    return r;
}

}  // namespace

std::optional<ParamPolynomial> ParamPolynomial::divide_exact(const ParamPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return ParamPolynomial();
    if (d.is_constant()) {
        ParamPolynomial q(*this);
        q *= Rational(1) / d.constant_value();
        return q;
    }
    // Long division in (Q[a])[k]; the k-leading coefficient division must be
    // exact at every step, as must the final remainder (zero).
    auto k_slices = [](const ParamPolynomial& p) {
        std::vector<ParamPolynomial> s;
        for (const auto& [m, c] : p.terms()) {
            if (static_cast<size_t>(m.dk) >= s.size()) s.resize(m.dk + 1);
            s[m.dk].set_term(m.da, 0, c);
        }
        while (!s.empty() && s.back().is_zero()) s.pop_back();
        return s;
    };
    auto u_div = [](const ParamPolynomial& f, const ParamPolynomial& g) -> std::optional<ParamPolynomial> {
        // division of univariate-in-a rational polynomials, exact or nullopt
        ParamPolynomial rem(f), quot;
        const int dg = g.degree_a();
        while (!rem.is_zero() && rem.degree_a() >= dg) {
            const int shift = rem.degree_a() - dg;
            Rational c = rem.coeff(rem.degree_a(), 0) / g.coeff(dg, 0);
            ParamPolynomial t;
            t.set_term(shift, 0, c);
            quot += t;
            rem -= t * g;
            if (!rem.is_zero() && rem.degree_a() == dg + shift) return std::nullopt;  // no progress
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot;
    };

    std::vector<ParamPolynomial> f = k_slices(*this), g = k_slices(d);
    if (f.size() < g.size()) return std::nullopt;
    std::vector<ParamPolynomial> quot(f.size() - g.size() + 1);
    while (!f.empty() && f.size() >= g.size()) {
        const size_t shift = f.size() - g.size();
        auto q = u_div(f.back(), g.back());
        if (!q) return std::nullopt;
        quot[shift] = *q;
        for (size_t i = 0; i < g.size(); ++i) {
            f[i + shift] -= *q * g[i];
        }
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        if (f.size() > shift + g.size() - 1) return std::nullopt;  // leading term survived
    }
    for (const auto& s : f)
        if (!s.is_zero()) return std::nullopt;
    ParamPolynomial result;
    for (size_t dk = 0; dk < quot.size(); ++dk)
        for (const auto& [m, c] : quot[dk].terms()) result.set_term(m.da, static_cast<int>(dk), c);
    return result;
}

ParamPolynomial ParamPolynomial::gcd(const ParamPolynomial& f, const ParamPolynomial& g) {
    if (f.is_zero() && g.is_zero()) return ParamPolynomial();
    if (f.is_zero()) return g.rational_content_split().second;
    if (g.is_zero()) return f.rational_content_split().second;
    if (f.is_constant() || g.is_constant()) return ParamPolynomial(Rational(1));

    BPoly bf = to_bpoly(f), bg = to_bpoly(g);
    UPoly cf = b_content(bf), cg = b_content(bg);
    UPoly cr = u_gcd(cf, cg);
    bf = b_divexact_u(bf, cf);
    bg = b_divexact_u(bg, cg);
    if (b_deg(bf) < b_deg(bg)) std::swap(bf, bg);
    // Primitive PRS in (Z[a])[k].
    while (!b_is_zero(bg)) {
        BPoly r = b_prem(bf, bg);
        if (!b_is_zero(r)) {
            UPoly c = b_content(r);
            r = b_divexact_u(r, c);
        }
        bf = std::move(bg);
        bg = std::move(r);
    }
    {
        UPoly c = b_content(bf);
        bf = b_divexact_u(bf, c);
    }
    BPoly result = b_mul_u(bf, cr);
    ParamPolynomial p = from_bpoly(result);
    auto [content, prim] = p.rational_content_split();
    (void)content;
    return prim;
}

std::string ParamPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational cc = c;
        if (first) {
            if (cc < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc < 0 ? "-" : "+");
            if (cc < 0) cc = -cc;
        }
        first = false;
        const bool has_vars = m.da > 0 || m.dk > 0;
        if (cc != 1 || !has_vars) {
            os << cc.get_str();
            if (has_vars) os << "*";
        }
        if (m.da > 0) {
            os << "a";
            if (m.da > 1) os << "^" << m.da;
            if (m.dk > 0) os << "*";
        }
        if (m.dk > 0) {
            os << "k";
            if (m.dk > 1) os << "^" << m.dk;
        }
    }
    return os.str();
}

ParamPolynomial rising_factorial(const ParamPolynomial& base, int m) {
    if (m < 0) throw std::invalid_argument("rising_factorial with negative length");
    ParamPolynomial r(Rational(1));
    ParamPolynomial shifted(base);
    for (int t = 0; t < m; ++t) {
        r = r * shifted;
        shifted += ParamPolynomial(Rational(1));
    }
    return r;
}

}  // namespace besselmv
