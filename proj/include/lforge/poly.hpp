#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "lforge/numeric.hpp"
#include "lforge/symbol.hpp"

namespace lforge {

/// A power product. Factors are sorted by symbol id and carry exponent > 0;
/// the empty vector is the monomial 1.
struct Monomial {
    std::vector<std::pair<Symbol, std::uint32_t>> factors;

    static Monomial one() { return {}; }
    static Monomial var(Symbol s, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors.push_back({s, e});
        return m;
    }

    bool is_one() const { return factors.empty(); }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (auto& [s, e] : factors) d += e;
        return d;
    }

    std::uint32_t degree_in(Symbol v) const {
        for (auto& [s, e] : factors)
            if (s == v) return e;
        return 0;
    }

    std::uint32_t degree_class(SymbolClass c) const {
        std::uint32_t d = 0;
        for (auto& [s, e] : factors)
            if (s.cls() == c) d += e;
        return d;
    }

    bool depends_on(Symbol v) const { return degree_in(v) > 0; }

    Monomial mul(const Monomial& o) const;
    /// Quotient this/o; requires divisibility (checked by divides()).
    Monomial div(const Monomial& o) const;
    bool divides_into(const Monomial& target) const;  // this | target
    Monomial gcd(const Monomial& o) const;

    /// Sub-monomial over symbols satisfying the predicate, and the rest.
    Monomial select(const std::function<bool(Symbol)>& pred) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Graded lexicographic term order (total degree over all symbols, ties by
/// lex with earlier-created symbols more significant). "Less" is ascending;
/// the leading term of a Poly is the map's last entry.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(i). Canonical form: no stored zero
/// coefficients, deterministic graded-lex term order. The zero polynomial is
/// the empty map.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialLess>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(GaussianRational c);
    static Poly constant(long n) { return constant(GaussianRational(n)); }
    static Poly variable(Symbol s);
    static Poly term(Monomial m, GaussianRational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    /// The coefficient of the monomial 1 (the value, if is_constant()).
    GaussianRational constant_term() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(Symbol v) const;
    /// Total degree counting only symbols of the given class. -1 when zero.
    int degree_class(SymbolClass c) const;
    int state_degree() const { return degree_class(SymbolClass::State); }

    bool depends_on(Symbol v) const;
    std::set<Symbol> symbols() const;
    void collect_symbols(std::set<Symbol>& out) const;

    const Monomial& leading_monomial() const;
    const GaussianRational& leading_coeff() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly mul_term(const Monomial& m, const GaussianRational& c) const;
    Poly mul_scalar(const GaussianRational& c) const;
    Poly pow(std::uint32_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Deterministic order for canonical sets of polynomials.
    static int compare(const Poly& a, const Poly& b);

    void add_term(const Monomial& m, const GaussianRational& c);

    Poly derivative(Symbol v) const;

    /// Groups terms by their sub-monomial in `vars`; the values sum back to
    /// *this exactly. Zero polynomial gives an empty map.
    std::map<Monomial, Poly, MonomialLess> collect(const std::set<Symbol>& vars) const;

    Poly substitute(Symbol v, const Poly& value) const;
    Poly substitute(const std::unordered_map<Symbol, Poly>& values) const;

    std::complex<double> eval(const std::unordered_map<Symbol, std::complex<double>>& point) const;

    /// Largest rational r > 0 with all coefficient components integer
    /// multiples of r; 1 for zero. Used for content normalization.
    Rational numeric_content() const;
    /// Componentwise gcd of all monomials (the common monomial factor).
    Monomial monomial_content() const;

    /// Divides by numeric content and the leading coefficient's sign-ish
    /// unit so equal-up-to-scalar equations get one representative:
    /// leading coefficient becomes 1.
    Poly monic() const;

    /// Exact division; throws std::domain_error if not divisible.
    static Poly div_exact(const Poly& a, const Poly& b);
    static bool try_div_exact(const Poly& a, const Poly& b, Poly& quot);

    /// GCD over Q(i)[...]; result has leading coefficient 1 (or is zero when
    /// both inputs are zero). Subresultant PRS, recursing on variables.
    static Poly gcd(const Poly& a, const Poly& b);

private:
    TermMap terms_;
};

/// View of p as a univariate polynomial in v with Poly coefficients.
std::map<std::uint32_t, Poly> as_univariate(const Poly& p, Symbol v);
Poly from_univariate(const std::map<std::uint32_t, Poly>& coeffs, Symbol v);

/// Pseudo-remainder of a by b in variable v: lc_b^(da-db+1) * a = q*b + r.
Poly pseudo_rem(const Poly& a, const Poly& b, Symbol v);

}  // namespace lforge
