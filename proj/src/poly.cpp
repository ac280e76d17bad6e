#include "lforge/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lforge {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first)
            r.factors.push_back(*a++);
        else if (b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

bool Monomial::divides_into(const Monomial& target) const {
    auto t = target.factors.begin();
    for (auto& [s, e] : factors) {
        while (t != target.factors.end() && t->first < s) ++t;
        if (t == target.factors.end() || t->first != s || t->second < e) return false;
    }
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end()) {
        if (b == o.factors.end() || a->first < b->first) {
            r.factors.push_back(*a++);
        } else if (a->first == b->first) {
            if (a->second < b->second) throw std::domain_error("monomial division not exact");
            if (a->second > b->second) r.factors.push_back({a->first, a->second - b->second});
            ++a, ++b;
        } else {
            throw std::domain_error("monomial division not exact");
        }
    }
    if (b != o.factors.end()) throw std::domain_error("monomial division not exact");
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            r.factors.push_back({a->first, std::min(a->second, b->second)});
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::select(const std::function<bool(Symbol)>& pred) const {
    Monomial r;
    for (auto& f : factors)
        if (pred(f.first)) r.factors.push_back(f);
    return r;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // lex: first symbol (ascending id) where exponents differ decides;
    // higher exponent on the earlier symbol sorts later (is "greater").
    auto i = a.factors.begin();
    auto j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first.id != j->first.id) {
            // the one that owns the earlier symbol has positive exponent there
            return !(i->first.id < j->first.id);
        }
        if (i->second != j->second) return i->second < j->second;
        ++i, ++j;
    }
    // one is a prefix of the other; equal only if both exhausted (same degree
    // forces that). A leftover factor means an earlier-symbol advantage is
    // impossible here since total degrees match and shared prefix is equal.
    return i != a.factors.end() ? false : j != b.factors.end();
}

// ------------------------------------------------------------------- Poly

Poly Poly::constant(GaussianRational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

Poly Poly::variable(Symbol s) {
    Poly p;
    p.terms_.emplace(Monomial::var(s), GaussianRational(1));
    return p;
}

Poly Poly::term(Monomial m, GaussianRational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

GaussianRational Poly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? GaussianRational() : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

int Poly::degree_in(Symbol v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(v)));
    return d;
}

int Poly::degree_class(SymbolClass c) const {
    int d = -1;
    for (auto& [m, coef] : terms_) d = std::max(d, static_cast<int>(m.degree_class(c)));
    return d;
}

bool Poly::depends_on(Symbol v) const {
    for (auto& [m, c] : terms_)
        if (m.depends_on(v)) return true;
    return false;
}

std::set<Symbol> Poly::symbols() const {
    std::set<Symbol> out;
    collect_symbols(out);
    return out;
}

void Poly::collect_symbols(std::set<Symbol>& out) const {
    for (auto& [m, c] : terms_)
        for (auto& [s, e] : m.factors) out.insert(s);
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const GaussianRational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    // iterate over the smaller operand outside
    const Poly& outer = a.term_count() <= b.term_count() ? a : b;
    const Poly& inner = a.term_count() <= b.term_count() ? b : a;
    for (auto& [ma, ca] : outer.terms_)
        for (auto& [mb, cb] : inner.terms_) r.add_term(ma.mul(mb), ca * cb);
    return r;
}

Poly Poly::mul_term(const Monomial& m, const GaussianRational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [mm, cc] : terms_) r.terms_.emplace(mm.mul(m), cc * c);
    return r;
}

Poly Poly::mul_scalar(const GaussianRational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc = Poly::constant(1);
    Poly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

int Poly::compare(const Poly& a, const Poly& b) {
    // compare term lists from the leading end
    auto i = a.terms_.rbegin();
    auto j = b.terms_.rbegin();
    MonomialLess less;
    for (; i != a.terms_.rend() && j != b.terms_.rend(); ++i, ++j) {
        if (less(i->first, j->first)) return -1;
        if (less(j->first, i->first)) return 1;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
    }
    if (i != a.terms_.rend()) return 1;
    if (j != b.terms_.rend()) return -1;
    return 0;
}

Poly Poly::derivative(Symbol v) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        std::uint32_t e = m.degree_in(v);
        if (e == 0) continue;
        Monomial dm;
        for (auto& [s, ee] : m.factors) {
            if (s == v) {
                if (ee > 1) dm.factors.push_back({s, ee - 1});
            } else {
                dm.factors.push_back({s, ee});
            }
        }
        r.add_term(dm, c * GaussianRational(static_cast<long>(e)));
    }
    return r;
}

std::map<Monomial, Poly, MonomialLess> Poly::collect(const std::set<Symbol>& vars) const {
    std::map<Monomial, Poly, MonomialLess> out;
    auto in_vars = [&](Symbol s) { return vars.count(s) > 0; };
    for (auto& [m, c] : terms_) {
        Monomial key = m.select(in_vars);
        Monomial rest = m.select([&](Symbol s) { return !in_vars(s); });
        out[key].add_term(rest, c);
    }
    return out;
}

Poly Poly::substitute(Symbol v, const Poly& value) const {
    std::unordered_map<Symbol, Poly> one{{v, value}};
    return substitute(one);
}

Poly Poly::substitute(const std::unordered_map<Symbol, Poly>& values) const {
    Poly r;
    // cache powers of each substituted value
    std::unordered_map<Symbol, std::vector<Poly>> powers;
    for (auto& [m, c] : terms_) {
        Poly term = Poly::constant(c);
        Monomial untouched;
        for (auto& [s, e] : m.factors) {
            auto it = values.find(s);
            if (it == values.end()) {
                untouched.factors.push_back({s, e});
                continue;
            }
            auto& cache = powers[s];
            if (cache.empty()) cache.push_back(Poly::constant(1));
            while (cache.size() <= e) cache.push_back(cache.back() * it->second);
            term *= cache[e];
        }
        r += term.mul_term(untouched, GaussianRational(1));
    }
    return r;
}

std::complex<double> Poly::eval(const std::unordered_map<Symbol, std::complex<double>>& point) const {
    std::complex<double> acc = 0.0;
    for (auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (auto& [s, e] : m.factors) {
            auto it = point.find(s);
            if (it == point.end()) throw std::domain_error("unbound symbol in polynomial evaluation");
            std::complex<double> base = it->second, p = 1.0;
            for (std::uint32_t k = 0; k < e; ++k) p *= base;
            t *= p;
        }
        acc += t;
    }
    return acc;
}

Rational Poly::numeric_content() const {
    Rational g(0);
    for (auto& [m, c] : terms_) {
        g = rational_gcd(g, c.re);
        g = rational_gcd(g, c.im);
    }
    if (g == 0) g = 1;
    return g;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial::one();
    Monomial g = terms_.begin()->first;
    for (auto& [m, c] : terms_) {
        g = g.gcd(m);
        if (g.is_one()) break;
    }
    return g;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    GaussianRational inv = GaussianRational(1) / leading_coeff();
    return mul_scalar(inv);
}

bool Poly::try_div_exact(const Poly& a, const Poly& b, Poly& quot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q, r = a;
    const Monomial& lmb = b.leading_monomial();
    const GaussianRational& lcb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!lmb.divides_into(lmr)) return false;
        Monomial qm = lmr.div(lmb);
        GaussianRational qc = r.leading_coeff() / lcb;
        q.add_term(qm, qc);
        r -= b.mul_term(qm, qc);
    }
    quot = std::move(q);
    return true;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    Poly q;
    if (!try_div_exact(a, b, q)) throw std::domain_error("polynomial division not exact");
    return q;
}

// ------------------------------------------------------------ univariate

std::map<std::uint32_t, Poly> as_univariate(const Poly& p, Symbol v) {
    std::map<std::uint32_t, Poly> out;
    for (auto& [m, c] : p.terms()) {
        std::uint32_t e = m.degree_in(v);
        Monomial rest = m.select([&](Symbol s) { return s != v; });
        out[e].add_term(rest, c);
    }
    return out;
}

Poly from_univariate(const std::map<std::uint32_t, Poly>& coeffs, Symbol v) {
    Poly r;
    for (auto& [e, c] : coeffs) r += c.mul_term(Monomial::var(v, e), GaussianRational(1));
    return r;
}

Poly pseudo_rem(const Poly& a, const Poly& b, Symbol v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
    if (da < db) return a;
    auto bu = as_univariate(b, v);
    Poly lcb = bu.rbegin()->second;
    Poly r = a;
    int dr = da;
    while (!r.is_zero() && (dr = r.degree_in(v)) >= db) {
        auto ru = as_univariate(r, v);
        Poly lcr = ru.rbegin()->second;
        if (static_cast<int>(ru.rbegin()->first) < db) break;
        // r := lcb * r - lcr * v^(dr-db) * b
        Poly shift = Poly::term(Monomial::var(v, static_cast<std::uint32_t>(dr - db)), GaussianRational(1));
        r = lcb * r - lcr * shift * b;
    }
    return r;
}

// -------------------------------------------------------------------- gcd

namespace {

// content of p as univariate in v: gcd of the Poly coefficients
Poly content_in(const Poly& p, Symbol v) {
    auto u = as_univariate(p, v);
    Poly g;
    for (auto& [e, c] : u) {
        g = Poly::gcd(g, c);
        if (!g.is_zero() && g.total_degree() == 0) break;
    }
    return g;
}

Symbol pick_main_var(const Poly& a, const Poly& b) {
    std::set<Symbol> sa = a.symbols();
    Symbol best{0};
    long best_score = -1;
    for (Symbol s : sa) {
        int db = b.degree_in(s);
        if (db == 0) continue;
        int da = a.degree_in(s);
        long score = static_cast<long>(da) + db;
        if (best_score < 0 || score < best_score) {
            best_score = score;
            best = s;
        }
    }
    if (best_score < 0) return Symbol{0xffffffffu};
    return best;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    // common monomial factor handled up front (cheap and frequent)
    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Monomial mg = ma.gcd(mb);
    Poly pa = a, pb = b;
    if (!ma.is_one()) {
        Poly q;
        try_div_exact(a, Poly::term(ma, GaussianRational(1)), q);
        pa = q;
    }
    if (!mb.is_one()) {
        Poly q;
        try_div_exact(b, Poly::term(mb, GaussianRational(1)), q);
        pb = q;
    }

    Poly core;
    if (pa.is_constant() || pb.is_constant()) {
        core = Poly::constant(1);
    } else {
        Symbol v = pick_main_var(pa, pb);
        if (v.id == 0xffffffffu) {
            core = Poly::constant(1);  // no common variable
        } else {
            // quick exits: one divides the other
            Poly q;
            if (try_div_exact(pa, pb, q)) {
                core = pb.monic();
            } else if (try_div_exact(pb, pa, q)) {
                core = pa.monic();
            } else {
                Poly ca = content_in(pa, v), cb = content_in(pb, v);
                Poly ppa = div_exact(pa, ca), ppb = div_exact(pb, cb);
                Poly cont_gcd = Poly::gcd(ca, cb);

                // subresultant PRS on the primitive parts
                Poly f = ppa, g = ppb;
                if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
                Poly h = Poly::constant(1);
                Poly s = Poly::constant(1);
                while (true) {
                    int df = f.degree_in(v), dg = g.degree_in(v);
                    int delta = df - dg;
                    Poly r = pseudo_rem(f, g, v);
                    if (r.is_zero()) break;
                    if (r.degree_in(v) == 0) {
                        g = Poly::constant(1);
                        break;
                    }
                    // divide by s * h^delta (subresultant factor)
                    Poly denom = s * h.pow(static_cast<std::uint32_t>(delta));
                    Poly rr;
                    if (!try_div_exact(r, denom, rr)) rr = r;  // fall back to euclidean growth
                    f = g;
                    g = rr;
                    auto gu = as_univariate(f, v);
                    s = gu.rbegin()->second;  // lc of new f
                    if (delta >= 1) {
                        Poly hp;
                        if (delta == 1)
                            hp = s;
                        else {
                            // h = lc^delta / h^(delta-1)
                            Poly num = s.pow(static_cast<std::uint32_t>(delta));
                            if (!try_div_exact(num, h.pow(static_cast<std::uint32_t>(delta - 1)), hp)) hp = num;
                        }
                        h = hp;
                    }
                }
                if (g.is_constant()) {
                    core = cont_gcd;
                } else {
                    Poly ppg = div_exact(g, content_in(g, v));
                    // primitive-part gcd must divide both; PRS can pick up
                    // extraneous factors only through the fallback path, so
                    // validate.
                    Poly check;
                    if (!try_div_exact(ppa, ppg, check) || !try_div_exact(ppb, ppg, check))
                        ppg = Poly::constant(1);
                    core = cont_gcd * ppg;
                }
            }
        }
    }

    Poly result = core.mul_term(mg, GaussianRational(1));
    return result.monic();
}

}  // namespace lforge
