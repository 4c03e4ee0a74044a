#include "besselmv/gamma_product.hpp"

#include <sstream>
#include <vector>

namespace besselmv {

bool GammaProduct::is_rational() const {
    GammaProduct g = normalized();
    return g.gammas_.empty() && g.two_exp_.is_zero();
}

ParamRational GammaProduct::rational_value() const {
    GammaProduct g = normalized();
    if (!g.gammas_.empty() || !g.two_exp_.is_zero())
        throw std::logic_error("GammaProduct has irreducible Gamma or exponential content: " + g.str());
    return g.prefactor_;
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
    prefactor_ *= o.prefactor_;
    for (const auto& [form, cnt] : o.gammas_) {
        int& c = gammas_[form];
        c += cnt;
        if (c == 0) gammas_.erase(form);
    }
    two_exp_ = two_exp_ + o.two_exp_;
    normalized_ = false;
    return *this;
}

GammaProduct& GammaProduct::operator/=(const GammaProduct& o) {
    if (o.is_zero()) throw std::domain_error("division by zero GammaProduct");
    prefactor_ /= o.prefactor_;
    for (const auto& [form, cnt] : o.gammas_) {
        int& c = gammas_[form];
        c -= cnt;
        if (c == 0) gammas_.erase(form);
    }
    two_exp_ = two_exp_ - o.two_exp_;
    normalized_ = false;
    return *this;
}

GammaProduct& GammaProduct::operator*=(const ParamRational& c) {
    prefactor_ *= c;
    normalized_ = false;
    return *this;
}

GammaProduct GammaProduct::pow(int e) const {
    GammaProduct r;
    for (int i = 0; i < e; ++i) r *= *this;
    for (int i = 0; i > e; --i) r /= *this;
    return r;
}

void GammaProduct::normalize() {
    if (normalized_) return;
    if (prefactor_.is_zero()) {
        gammas_.clear();
        two_exp_ = LinearForm();
        normalized_ = true;
        return;
    }
    // Shift every argument to its base form with constant part in [0,1) via
    // Gamma(L+m) = [L]_m Gamma(L); arguments differing by integers thereby
    // land on the same key and merge.
    std::map<LinearForm, int> reduced;
    ParamRational pref = prefactor_;
    for (const auto& [form, cnt] : gammas_) {
        if (cnt == 0) continue;
        const Integer z = floor_to_integer(form.c0);
        const long zi = z.get_si();
        const LinearForm base = form.shifted(-Rational(z));
        if (base.is_constant() && base.c0 == 0) {
            // Integer argument: a pole unless positive, else an exact factorial.
            if (zi <= 0) throw std::domain_error("Gamma evaluated at non-positive integer: " + form.str());
            pref *= ParamRational(Rational(factorial_int(zi - 1))).pow(cnt);
            continue;
        }
        if (zi > 0)
            pref *= ParamRational(pochhammer(base, static_cast<int>(zi))).pow(cnt);
        else if (zi < 0)
            pref *= ParamRational(pochhammer(form, static_cast<int>(-zi))).pow(-cnt);
        int& c = reduced[base];
        c += cnt;
        if (c == 0) reduced.erase(base);
    }
    // Fold the integer part of the token exponent into the prefactor.
    LinearForm te = two_exp_;
    Integer ip = floor_to_integer(te.c0);
    if (ip != 0) {
        te.c0 -= Rational(ip);
        ParamRational two(Rational(2));
        pref *= two.pow(static_cast<int>(ip.get_si()));
    }
    if (te.ca == 0 && te.ck == 0 && te.c0 == 0) te = LinearForm();
    prefactor_ = pref;
    gammas_ = std::move(reduced);
    two_exp_ = te;
    normalized_ = true;
}

GammaProduct GammaProduct::normalized() const {
    GammaProduct g(*this);
    g.normalize();
    return g;
}

bool gamma_equal(const GammaProduct& g1, const GammaProduct& g2) {
    GammaProduct a = g1.normalized(), b = g2.normalized();
    return a.prefactor_ == b.prefactor_ && a.gammas_ == b.gammas_ && a.two_exp_ == b.two_exp_;
}

Rational GammaProduct::exact_value_at(const std::optional<Rational>& a_val,
                                      const std::optional<Rational>& k_val) const {
    GammaProduct g = normalized();
    ParamRational value = g.prefactor_;
    if (a_val) value = value.substitute_a(*a_val);
    if (k_val) value = value.substitute_k(*k_val);
    for (const auto& [form, cnt] : g.gammas_) {
        Rational arg = form.c0;
        if (form.ca != 0) {
            if (!a_val) throw std::domain_error("Gamma argument " + form.str() + " needs a value for a");
            arg += form.ca * *a_val;
        }
        if (form.ck != 0) {
            if (!k_val) throw std::domain_error("Gamma argument " + form.str() + " needs a value for k");
            arg += form.ck * *k_val;
        }
        if (!is_integer(arg) || arg <= 0)
            throw std::domain_error("Gamma argument " + form.str() + " does not evaluate to a positive integer");
        Rational fact(factorial_int(arg.get_num().get_ui() - 1));
        value *= ParamRational(fact).pow(cnt);
    }
    if (!g.two_exp_.is_zero()) {
        Rational e = g.two_exp_.c0;
        if (g.two_exp_.ca != 0) {
            if (!a_val) throw std::domain_error("exponential token needs a value for a");
            e += g.two_exp_.ca * *a_val;
        }
        if (g.two_exp_.ck != 0) {
            if (!k_val) throw std::domain_error("exponential token needs a value for k");
            e += g.two_exp_.ck * *k_val;
        }
        if (!is_integer(e)) throw std::domain_error("exponential token 2^(" + g.two_exp_.str() + ") is not rational at this point");
        value *= ParamRational(pow_rational(Rational(2), e.get_num().get_si()));
    }
    if (!value.is_constant()) throw std::domain_error("GammaProduct value is not constant at this point: " + value.str());
    return value.constant_value();
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const char* var) {
        if (c == 0) return;
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
        if (var == nullptr) {
            os << cc.get_str();
        } else {
            if (cc != 1) os << cc.get_str() << "*";
            os << var;
        }
    };
    emit(ca, "a");
    emit(ck, "k");
    emit(c0, nullptr);
    if (first) os << "0";
    return os.str();
}

std::string GammaProduct::str() const {
    GammaProduct g = normalized();
    std::ostringstream os;
    os << g.prefactor_.str();
    for (const auto& [form, cnt] : g.gammas_) {
        if (cnt > 0) {
            os << " * gamma(" << form.str() << ")";
            if (cnt > 1) os << "^" << cnt;
        }
    }
    for (const auto& [form, cnt] : g.gammas_) {
        if (cnt < 0) {
            os << " / gamma(" << form.str() << ")";
            if (cnt < -1) os << "^" << -cnt;
        }
    }
    if (!g.two_exp_.is_zero()) os << " * 2^(" << g.two_exp_.str() << ")";
    return os.str();
}

}  // namespace besselmv
