#pragma once

#include <memory>
#include <vector>

#include "lforge/ratfun.hpp"

namespace lforge {

struct EvalSingular : std::domain_error {
    explicit EvalSingular(const std::string& what) : std::domain_error(what) {}
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind : std::uint8_t { Rational, Sum, Product, Power, Exp, Log, Sin, Cos };

/// Immutable closed-form tree. Rational leaves carry exact RationalFunctions;
/// Sum/Product are flattened with numeric/rational subtrees folded; Power
/// exponents never contain state symbols (rejected at construction).
class Expr {
public:
    ExprKind kind;
    RationalFunction rat;       // Rational leaf payload
    std::vector<ExprPtr> kids;  // Sum/Product children; Power {base, exponent}; unary {arg}

    explicit Expr(RationalFunction r) : kind(ExprKind::Rational), rat(std::move(r)) {}
    Expr(ExprKind k, std::vector<ExprPtr> children) : kind(k), kids(std::move(children)) {}

    bool is_rational() const { return kind == ExprKind::Rational; }
    bool is_zero() const { return is_rational() && rat.is_zero(); }
    bool is_one() const { return is_rational() && rat.is_polynomial() && !rat.is_zero() && rat.is_constant() && rat.constant_value().is_one(); }
};

// --- constructors (canonicalizing) ---
ExprPtr ex_rational(RationalFunction r);
ExprPtr ex_constant(GaussianRational c);
ExprPtr ex_integer(long n);
ExprPtr ex_symbol(Symbol s);
ExprPtr ex_sum(std::vector<ExprPtr> parts);
ExprPtr ex_add(const ExprPtr& a, const ExprPtr& b);
ExprPtr ex_sub(const ExprPtr& a, const ExprPtr& b);
ExprPtr ex_neg(const ExprPtr& a);
ExprPtr ex_product(std::vector<ExprPtr> parts);
ExprPtr ex_mul(const ExprPtr& a, const ExprPtr& b);
ExprPtr ex_div(const ExprPtr& a, const ExprPtr& b);
/// Throws std::domain_error when the exponent contains a state symbol.
ExprPtr ex_pow(const ExprPtr& base, const ExprPtr& exponent);
ExprPtr ex_exp(const ExprPtr& a);
ExprPtr ex_log(const ExprPtr& a);
ExprPtr ex_sin(const ExprPtr& a);
ExprPtr ex_cos(const ExprPtr& a);

// --- queries ---
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
/// Deterministic total order (used to sort Sum/Product children).
int expr_compare(const ExprPtr& a, const ExprPtr& b);
void collect_symbols(const ExprPtr& e, std::set<Symbol>& out);
std::set<Symbol> expr_symbols(const ExprPtr& e);
bool depends_on(const ExprPtr& e, Symbol v);
bool contains_state_symbol(const ExprPtr& e);
/// Rational payload if the whole tree is one Rational leaf.
const RationalFunction* as_rational(const ExprPtr& e);

// --- operations ---
ExprPtr differentiate(const ExprPtr& e, Symbol v);
ExprPtr substitute(const ExprPtr& e, const std::unordered_map<Symbol, ExprPtr>& values);

std::complex<double> eval_numeric(const ExprPtr& e,
                                  const std::unordered_map<Symbol, std::complex<double>>& bindings);

}  // namespace lforge
