#include "lforge/ratfun.hpp"

namespace lforge {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    // normalize so lc(den) == 1
    GaussianRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussianRational inv = GaussianRational(1) / lc;
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

std::set<Symbol> RationalFunction::symbols() const {
    std::set<Symbol> s;
    num_.collect_symbols(s);
    den_.collect_symbols(s);
    return s;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // cross-reduce first to keep intermediates small
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly n1 = g1.is_constant() ? a.num_ : Poly::div_exact(a.num_, g1);
    Poly d2 = g1.is_constant() ? b.den_ : Poly::div_exact(b.den_, g1);
    Poly n2 = g2.is_constant() ? b.num_ : Poly::div_exact(b.num_, g2);
    Poly d1 = g2.is_constant() ? a.den_ : Poly::div_exact(a.den_, g2);
    return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDenominator();
    return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(Poly::constant(1));
    bool inv = e < 0;
    std::uint32_t n = static_cast<std::uint32_t>(inv ? -e : e);
    RationalFunction r(num_.pow(n), den_.pow(n));
    if (inv) return RationalFunction(Poly::constant(1)) / r;
    return r;
}

RationalFunction RationalFunction::derivative(Symbol v) const {
    // quotient rule, returned reduced
    Poly dn = num_.derivative(v);
    Poly dd = den_.derivative(v);
    if (dd.is_zero()) return RationalFunction(dn, den_);
    return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::unordered_map<Symbol, RationalFunction>& values) const {
    // split into polynomial substitutions and true rational ones
    std::unordered_map<Symbol, Poly> poly_part;
    std::unordered_map<Symbol, RationalFunction> rat_part;
    for (auto& [s, v] : values) {
        if (v.is_polynomial())
            poly_part.emplace(s, v.num().mul_scalar(GaussianRational(1) / v.den().constant_term()));
        else
            rat_part.emplace(s, v);
    }
    Poly n = poly_part.empty() ? num_ : num_.substitute(poly_part);
    Poly d = poly_part.empty() ? den_ : den_.substitute(poly_part);
    if (rat_part.empty()) return RationalFunction(std::move(n), std::move(d));

    auto subst_poly = [&](const Poly& p) {
        RationalFunction acc;
        for (auto& [m, c] : p.terms()) {
            RationalFunction term = RationalFunction::constant(c);
            Monomial untouched;
            for (auto& [s, e] : m.factors) {
                auto it = rat_part.find(s);
                if (it == rat_part.end())
                    untouched.factors.push_back({s, e});
                else
                    term *= it->second.pow(static_cast<long>(e));
            }
            term *= RationalFunction(Poly::term(untouched, GaussianRational(1)));
            acc += term;
        }
        return acc;
    };
    return subst_poly(n) / subst_poly(d);
}

std::complex<double> RationalFunction::eval(const std::unordered_map<Symbol, std::complex<double>>& point) const {
    std::complex<double> d = den_.eval(point);
    if (d == std::complex<double>(0.0, 0.0)) throw std::domain_error("rational function pole");
    return num_.eval(point) / d;
}

}  // namespace lforge
