#include "lforge/expr.hpp"

#include <algorithm>
#include <cmath>

namespace lforge {

namespace {

const ExprPtr& cached_zero() {
    static ExprPtr z = std::make_shared<Expr>(RationalFunction());
    return z;
}
const ExprPtr& cached_one() {
    static ExprPtr o = std::make_shared<Expr>(RationalFunction(Poly::constant(1)));
    return o;
}

bool is_integer_const(const ExprPtr& e, long& out) {
    const RationalFunction* r = as_rational(e);
    if (!r || !r->is_constant()) return false;
    GaussianRational v = r->constant_value();
    if (!v.is_real()) return false;
    if (v.re.get_den() != 1) return false;
    if (!v.re.get_num().fits_slong_p()) return false;
    out = v.re.get_num().get_si();
    return true;
}

}  // namespace

ExprPtr ex_rational(RationalFunction r) { return std::make_shared<Expr>(std::move(r)); }
ExprPtr ex_constant(GaussianRational c) { return ex_rational(RationalFunction::constant(std::move(c))); }
ExprPtr ex_integer(long n) {
    if (n == 0) return cached_zero();
    if (n == 1) return cached_one();
    return ex_constant(GaussianRational(n));
}
ExprPtr ex_symbol(Symbol s) { return ex_rational(RationalFunction::variable(s)); }

const RationalFunction* as_rational(const ExprPtr& e) {
    return e->kind == ExprKind::Rational ? &e->rat : nullptr;
}

// ------------------------------------------------------------- compare

int expr_compare(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == ExprKind::Rational) {
        int c = Poly::compare(a->rat.num(), b->rat.num());
        if (c != 0) return c;
        return Poly::compare(a->rat.den(), b->rat.den());
    }
    if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a->kids.size(); ++i) {
        int c = expr_compare(a->kids[i], b->kids[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) { return expr_compare(a, b) == 0; }

void collect_symbols(const ExprPtr& e, std::set<Symbol>& out) {
    if (e->kind == ExprKind::Rational) {
        e->rat.num().collect_symbols(out);
        e->rat.den().collect_symbols(out);
        return;
    }
    for (auto& k : e->kids) collect_symbols(k, out);
}

std::set<Symbol> expr_symbols(const ExprPtr& e) {
    std::set<Symbol> s;
    collect_symbols(e, s);
    return s;
}

bool depends_on(const ExprPtr& e, Symbol v) {
    if (e->kind == ExprKind::Rational) return e->rat.depends_on(v);
    for (auto& k : e->kids)
        if (depends_on(k, v)) return true;
    return false;
}

bool contains_state_symbol(const ExprPtr& e) {
    for (Symbol s : expr_symbols(e))
        if (s.cls() == SymbolClass::State) return true;
    return false;
}

// ----------------------------------------------------------------- sums

ExprPtr ex_sum(std::vector<ExprPtr> parts) {
    RationalFunction racc;
    // key: non-rational "shape", value: rational coefficient (like terms merge)
    std::vector<std::pair<ExprPtr, RationalFunction>> shaped;

    std::function<void(const ExprPtr&)> absorb = [&](const ExprPtr& e) {
        if (e->kind == ExprKind::Sum) {
            for (auto& k : e->kids) absorb(k);
            return;
        }
        if (e->kind == ExprKind::Rational) {
            racc += e->rat;
            return;
        }
        // split product into rational coefficient and the rest
        ExprPtr shape = e;
        RationalFunction coeff(Poly::constant(1));
        if (e->kind == ExprKind::Product) {
            std::vector<ExprPtr> rest;
            for (auto& k : e->kids) {
                if (k->kind == ExprKind::Rational)
                    coeff *= k->rat;
                else
                    rest.push_back(k);
            }
            if (rest.size() == static_cast<std::size_t>(e->kids.size())) {
                shape = e;  // no rational factor
            } else if (rest.size() == 1) {
                shape = rest[0];
            } else {
                shape = std::make_shared<Expr>(ExprKind::Product, std::move(rest));
            }
        }
        for (auto& [sh, co] : shaped) {
            if (structurally_equal(sh, shape)) {
                co += coeff;
                return;
            }
        }
        shaped.push_back({shape, coeff});
    };
    for (auto& p : parts) absorb(p);

    std::vector<ExprPtr> out;
    if (!racc.is_zero()) out.push_back(ex_rational(std::move(racc)));
    std::sort(shaped.begin(), shaped.end(),
              [](const auto& x, const auto& y) { return expr_compare(x.first, y.first) < 0; });
    for (auto& [sh, co] : shaped) {
        if (co.is_zero()) continue;
        if (co.is_constant() && co.constant_value().is_one())
            out.push_back(sh);
        else
            out.push_back(ex_mul(ex_rational(co), sh));
    }
    if (out.empty()) return cached_zero();
    if (out.size() == 1) return out[0];
    return std::make_shared<Expr>(ExprKind::Sum, std::move(out));
}

ExprPtr ex_add(const ExprPtr& a, const ExprPtr& b) { return ex_sum({a, b}); }
ExprPtr ex_sub(const ExprPtr& a, const ExprPtr& b) { return ex_sum({a, ex_neg(b)}); }
ExprPtr ex_neg(const ExprPtr& a) { return ex_mul(ex_integer(-1), a); }

// ------------------------------------------------------------- products

ExprPtr ex_product(std::vector<ExprPtr> parts) {
    RationalFunction racc(Poly::constant(1));
    std::vector<ExprPtr> exp_args;                          // collected Exp arguments
    std::vector<std::pair<ExprPtr, std::vector<ExprPtr>>> pows;  // base -> exponent parts

    std::function<bool(const ExprPtr&)> absorb = [&](const ExprPtr& e) -> bool {
        if (e->kind == ExprKind::Product) {
            for (auto& k : e->kids)
                if (!absorb(k)) return false;
            return true;
        }
        if (e->kind == ExprKind::Rational) {
            racc *= e->rat;
            return !racc.is_zero();
        }
        if (e->kind == ExprKind::Exp) {
            exp_args.push_back(e->kids[0]);
            return true;
        }
        ExprPtr base = e, expo = cached_one();
        if (e->kind == ExprKind::Power) {
            base = e->kids[0];
            expo = e->kids[1];
        }
        for (auto& [b, es] : pows) {
            if (structurally_equal(b, base)) {
                es.push_back(expo);
                return true;
            }
        }
        pows.push_back({base, {expo}});
        return true;
    };
    for (auto& p : parts)
        if (!absorb(p)) return cached_zero();
    if (racc.is_zero()) return cached_zero();

    std::vector<ExprPtr> out;
    for (auto& [b, es] : pows) {
        ExprPtr e_total = es.size() == 1 ? es[0] : ex_sum(es);
        ExprPtr f = ex_pow(b, e_total);
        if (f->kind == ExprKind::Rational)
            racc *= f->rat;
        else
            out.push_back(f);
    }
    if (!exp_args.empty()) {
        ExprPtr arg = exp_args.size() == 1 ? exp_args[0] : ex_sum(std::move(exp_args));
        ExprPtr f = ex_exp(arg);
        if (f->kind == ExprKind::Rational)
            racc *= f->rat;
        else
            out.push_back(f);
    }
    if (racc.is_zero()) return cached_zero();

    std::sort(out.begin(), out.end(), [](const ExprPtr& x, const ExprPtr& y) { return expr_compare(x, y) < 0; });
    bool coeff_is_one = racc.is_constant() && racc.constant_value().is_one();
    if (!coeff_is_one) out.insert(out.begin(), ex_rational(std::move(racc)));
    if (out.empty()) return cached_one();
    if (out.size() == 1) return out[0];
    return std::make_shared<Expr>(ExprKind::Product, std::move(out));
}

ExprPtr ex_mul(const ExprPtr& a, const ExprPtr& b) { return ex_product({a, b}); }

ExprPtr ex_div(const ExprPtr& a, const ExprPtr& b) {
    if (const RationalFunction* rb = as_rational(b)) {
        if (rb->is_zero()) throw ZeroDenominator();
        RationalFunction inv = RationalFunction(Poly::constant(1)) / *rb;
        return ex_mul(a, ex_rational(std::move(inv)));
    }
    return ex_mul(a, ex_pow(b, ex_integer(-1)));
}

// ---------------------------------------------------------------- power

ExprPtr ex_pow(const ExprPtr& base, const ExprPtr& exponent) {
    if (contains_state_symbol(exponent))
        throw std::domain_error("power exponent contains a state variable");
    long n = 0;
    if (is_integer_const(exponent, n)) {
        if (n == 0) return cached_one();
        if (n == 1) return base;
        if (const RationalFunction* rb = as_rational(base)) {
            if (rb->is_zero()) {
                if (n > 0) return cached_zero();
                throw ZeroDenominator();
            }
            return ex_rational(rb->pow(n));
        }
        if (base->kind == ExprKind::Product) {
            std::vector<ExprPtr> parts;
            for (auto& k : base->kids) parts.push_back(ex_pow(k, exponent));
            return ex_product(std::move(parts));
        }
    }
    if (base->kind == ExprKind::Exp) return ex_exp(ex_mul(base->kids[0], exponent));
    if (base->kind == ExprKind::Power) {
        // (b^e1)^n = b^(e1*n) for integer n only (principal branch otherwise)
        if (is_integer_const(exponent, n)) return ex_pow(base->kids[0], ex_mul(base->kids[1], exponent));
    }
    if (base->is_one()) return cached_one();
    return std::make_shared<Expr>(ExprKind::Power, std::vector<ExprPtr>{base, exponent});
}

// ------------------------------------------------------- transcendentals

ExprPtr ex_exp(const ExprPtr& a) {
    if (a->is_zero()) return cached_one();
    if (a->kind == ExprKind::Log) return a->kids[0];
    // exp(c*log(u) + rest) -> u^c * exp(rest) is NOT folded; structural only.
    return std::make_shared<Expr>(ExprKind::Exp, std::vector<ExprPtr>{a});
}

ExprPtr ex_log(const ExprPtr& a) {
    if (a->is_one()) return cached_zero();
    if (a->kind == ExprKind::Exp) return a->kids[0];
    return std::make_shared<Expr>(ExprKind::Log, std::vector<ExprPtr>{a});
}

ExprPtr ex_sin(const ExprPtr& a) {
    if (a->is_zero()) return cached_zero();
    return std::make_shared<Expr>(ExprKind::Sin, std::vector<ExprPtr>{a});
}

ExprPtr ex_cos(const ExprPtr& a) {
    if (a->is_zero()) return cached_one();
    return std::make_shared<Expr>(ExprKind::Cos, std::vector<ExprPtr>{a});
}

// -------------------------------------------------------- differentiate

ExprPtr differentiate(const ExprPtr& e, Symbol v) {
    switch (e->kind) {
        case ExprKind::Rational:
            return ex_rational(e->rat.derivative(v));
        case ExprKind::Sum: {
            std::vector<ExprPtr> parts;
            for (auto& k : e->kids) parts.push_back(differentiate(k, v));
            return ex_sum(std::move(parts));
        }
        case ExprKind::Product: {
            std::vector<ExprPtr> parts;
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                std::vector<ExprPtr> fs;
                for (std::size_t j = 0; j < e->kids.size(); ++j)
                    fs.push_back(i == j ? differentiate(e->kids[j], v) : e->kids[j]);
                parts.push_back(ex_product(std::move(fs)));
            }
            return ex_sum(std::move(parts));
        }
        case ExprKind::Power: {
            const ExprPtr& b = e->kids[0];
            const ExprPtr& p = e->kids[1];
            ExprPtr db = differentiate(b, v);
            ExprPtr dp = differentiate(p, v);
            // d(b^p) = b^p * (dp*log b + p*db/b)
            std::vector<ExprPtr> parts;
            if (!db->is_zero())
                parts.push_back(ex_product({p, ex_pow(b, ex_sub(p, cached_one())), db}));
            if (!dp->is_zero()) parts.push_back(ex_product({e, dp, ex_log(b)}));
            return ex_sum(std::move(parts));
        }
        case ExprKind::Exp:
            return ex_mul(differentiate(e->kids[0], v), e);
        case ExprKind::Log:
            return ex_div(differentiate(e->kids[0], v), e->kids[0]);
        case ExprKind::Sin:
            return ex_mul(differentiate(e->kids[0], v), ex_cos(e->kids[0]));
        case ExprKind::Cos:
            return ex_neg(ex_mul(differentiate(e->kids[0], v), ex_sin(e->kids[0])));
    }
    return cached_zero();
}

// ------------------------------------------------------------ substitute

namespace {

ExprPtr poly_to_expr_subst(const Poly& p, const std::unordered_map<Symbol, ExprPtr>& values) {
    std::vector<ExprPtr> terms;
    for (auto& [m, c] : p.terms()) {
        std::vector<ExprPtr> factors;
        factors.push_back(ex_constant(c));
        Monomial untouched;
        for (auto& [s, e] : m.factors) {
            auto it = values.find(s);
            if (it == values.end())
                untouched.factors.push_back({s, e});
            else
                factors.push_back(ex_pow(it->second, ex_integer(static_cast<long>(e))));
        }
        if (!untouched.is_one())
            factors.push_back(ex_rational(RationalFunction(Poly::term(untouched, GaussianRational(1)))));
        terms.push_back(ex_product(std::move(factors)));
    }
    return ex_sum(std::move(terms));
}

}  // namespace

ExprPtr substitute(const ExprPtr& e, const std::unordered_map<Symbol, ExprPtr>& values) {
    switch (e->kind) {
        case ExprKind::Rational: {
            bool touched = false;
            for (auto& [s, val] : values)
                if (e->rat.depends_on(s)) {
                    touched = true;
                    break;
                }
            if (!touched) return e;
            bool all_rational = true;
            std::unordered_map<Symbol, RationalFunction> rf_values;
            for (auto& [s, val] : values) {
                if (const RationalFunction* r = as_rational(val))
                    rf_values.emplace(s, *r);
                else {
                    all_rational = false;
                    break;
                }
            }
            if (all_rational) return ex_rational(e->rat.substitute(rf_values));
            ExprPtr num = poly_to_expr_subst(e->rat.num(), values);
            ExprPtr den = poly_to_expr_subst(e->rat.den(), values);
            return ex_div(num, den);
        }
        case ExprKind::Sum: {
            std::vector<ExprPtr> parts;
            for (auto& k : e->kids) parts.push_back(substitute(k, values));
            return ex_sum(std::move(parts));
        }
        case ExprKind::Product: {
            std::vector<ExprPtr> parts;
            for (auto& k : e->kids) parts.push_back(substitute(k, values));
            return ex_product(std::move(parts));
        }
        case ExprKind::Power:
            return ex_pow(substitute(e->kids[0], values), substitute(e->kids[1], values));
        case ExprKind::Exp:
            return ex_exp(substitute(e->kids[0], values));
        case ExprKind::Log:
            return ex_log(substitute(e->kids[0], values));
        case ExprKind::Sin:
            return ex_sin(substitute(e->kids[0], values));
        case ExprKind::Cos:
            return ex_cos(substitute(e->kids[0], values));
    }
    return e;
}

// ---------------------------------------------------------------- eval

std::complex<double> eval_numeric(const ExprPtr& e,
                                  const std::unordered_map<Symbol, std::complex<double>>& bindings) {
    switch (e->kind) {
        case ExprKind::Rational: {
            std::complex<double> d = e->rat.den().eval(bindings);
            if (d == std::complex<double>(0.0, 0.0)) throw EvalSingular("division by zero");
            return e->rat.num().eval(bindings) / d;
        }
        case ExprKind::Sum: {
            std::complex<double> acc = 0.0;
            for (auto& k : e->kids) acc += eval_numeric(k, bindings);
            return acc;
        }
        case ExprKind::Product: {
            std::complex<double> acc = 1.0;
            for (auto& k : e->kids) acc *= eval_numeric(k, bindings);
            return acc;
        }
        case ExprKind::Power: {
            std::complex<double> b = eval_numeric(e->kids[0], bindings);
            std::complex<double> p = eval_numeric(e->kids[1], bindings);
            if (b == std::complex<double>(0.0, 0.0)) {
                if (p.real() > 0) return 0.0;
                throw EvalSingular("zero base with nonpositive exponent");
            }
            return std::pow(b, p);  // principal branch
        }
        case ExprKind::Exp:
            return std::exp(eval_numeric(e->kids[0], bindings));
        case ExprKind::Log: {
            std::complex<double> a = eval_numeric(e->kids[0], bindings);
            if (a == std::complex<double>(0.0, 0.0)) throw EvalSingular("log of zero");
            return std::log(a);  // principal branch
        }
        case ExprKind::Sin:
            return std::sin(eval_numeric(e->kids[0], bindings));
        case ExprKind::Cos:
            return std::cos(eval_numeric(e->kids[0], bindings));
    }
    throw EvalSingular("unreachable");
}

}  // namespace lforge
