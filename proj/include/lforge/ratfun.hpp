#pragma once

#include <stdexcept>

#include "lforge/poly.hpp"

namespace lforge {

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

/// Reduced quotient of two Polys: gcd(num, den) = 1 and the denominator's
/// leading coefficient is exactly 1. Constructed values are immutable in
/// spirit; every operation returns a reduced result.
class RationalFunction {
public:
    RationalFunction() : num_(Poly::zero()), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}
    static RationalFunction constant(GaussianRational c) { return RationalFunction(Poly::constant(std::move(c))); }
    static RationalFunction variable(Symbol s) { return RationalFunction(Poly::variable(s)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussianRational constant_value() const { return num_.constant_term() / den_.constant_term(); }

    bool depends_on(Symbol v) const { return num_.depends_on(v) || den_.depends_on(v); }
    std::set<Symbol> symbols() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative(Symbol v) const;
    RationalFunction substitute(const std::unordered_map<Symbol, RationalFunction>& values) const;

    std::complex<double> eval(const std::unordered_map<Symbol, std::complex<double>>& point) const;

private:
    Poly num_, den_;
};

/// rf_reduce of the module contract: gcd-reduced, denominator lc-normalized.
inline RationalFunction rf_reduce(Poly num, Poly den) { return RationalFunction(std::move(num), std::move(den)); }

}  // namespace lforge
