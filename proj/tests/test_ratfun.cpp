#include "doctest.h"
#include "lforge/ratfun.hpp"
#include "test_util.hpp"

#include <random>

using namespace lforge;

TEST_CASE("rf_reduce cancels common factors") {
    Session s;
    Symbol x = s.make_symbol("x", SymbolClass::State);
    Poly xv = Poly::variable(x);
    RationalFunction r = rf_reduce(xv * xv - Poly::constant(1), xv - Poly::constant(1));
    CHECK(r.num() == xv + Poly::constant(1));
    CHECK(r.den() == Poly::constant(1));
}

TEST_CASE("zero numerator normalizes to 0/1") {
    Session s;
    Symbol x = s.make_symbol("x", SymbolClass::State);
    RationalFunction r = rf_reduce(Poly::zero(), Poly::variable(x) + Poly::constant(3));
    CHECK(r.is_zero());
    CHECK(r.den() == Poly::constant(1));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(rf_reduce(Poly::constant(1), Poly::zero()), ZeroDenominator);
}

TEST_CASE("S-function of the transformed oscillator reduces as expected") {
    // ((-m x^2 + k) tau^2) / (omega^2 tau^3) -> (-m x^2 + k) / (omega^2 tau)
    Session s;
    Symbol tau = s.make_symbol("tau", SymbolClass::State);
    Symbol x = s.make_symbol("x", SymbolClass::State);
    Symbol m = s.make_symbol("m", SymbolClass::Parameter);
    Symbol k = s.make_symbol("k", SymbolClass::Parameter);
    Symbol omega = s.make_symbol("omega", SymbolClass::Parameter);

    Poly num = (Poly::term(Monomial::var(x, 2), GaussianRational(-1)) * Poly::variable(m) + Poly::variable(k)) *
               Poly::term(Monomial::var(tau, 2), GaussianRational(1));
    Poly den = Poly::term(Monomial::var(omega, 2).mul(Monomial::var(tau, 3)), GaussianRational(1));
    RationalFunction r = rf_reduce(num, den);

    Poly expect_num = Poly::term(Monomial::var(m).mul(Monomial::var(x, 2)), GaussianRational(-1)) + Poly::variable(k);
    Poly expect_den = Poly::term(Monomial::var(omega, 2).mul(Monomial::var(tau)), GaussianRational(1));
    CHECK(r.num() == expect_num);
    CHECK(r.den() == expect_den);
}

TEST_CASE("reduction is idempotent on random quotients") {
    Session s;
    Symbol x = s.make_symbol("x", SymbolClass::State);
    Symbol y = s.make_symbol("y", SymbolClass::State);
    std::mt19937 rng(555);
    for (int i = 0; i < 100; ++i) {
        Poly n = testutil::random_poly(rng, {x, y}, 3, 4, true);
        Poly d = testutil::random_poly(rng, {x, y}, 3, 4, true);
        if (d.is_zero()) continue;
        RationalFunction r = rf_reduce(n, d);
        RationalFunction again = rf_reduce(r.num(), r.den());
        CHECK(r == again);
        // denominator leading coefficient is exactly one
        if (!r.is_zero()) CHECK(r.den().leading_coeff().is_one());
    }
}

TEST_CASE("quotient rule keeps results reduced") {
    // d/dx of (k - m x^2)/(omega^2 tau) = (-2 m x)/(omega^2 tau)
    Session s;
    Symbol tau = s.make_symbol("tau", SymbolClass::State);
    Symbol x = s.make_symbol("x", SymbolClass::State);
    Symbol m = s.make_symbol("m", SymbolClass::Parameter);
    Symbol k = s.make_symbol("k", SymbolClass::Parameter);
    Symbol omega = s.make_symbol("omega", SymbolClass::Parameter);

    Poly num = Poly::variable(k) - Poly::variable(m) * Poly::term(Monomial::var(x, 2), GaussianRational(1));
    Poly den = Poly::term(Monomial::var(omega, 2).mul(Monomial::var(tau)), GaussianRational(1));
    RationalFunction r = rf_reduce(num, den);
    RationalFunction d = r.derivative(x);

    Poly expect_num = Poly::term(Monomial::var(m).mul(Monomial::var(x)), GaussianRational(-2));
    CHECK(d.num() == expect_num);
    CHECK(d.den() == den);
}

TEST_CASE("arithmetic identities on random rational functions") {
    Session s;
    Symbol x = s.make_symbol("x", SymbolClass::State);
    Symbol y = s.make_symbol("y", SymbolClass::State);
    std::mt19937 rng(777);
    for (int i = 0; i < 60; ++i) {
        Poly n1 = testutil::random_poly(rng, {x, y}, 2, 3, true);
        Poly d1 = testutil::random_poly(rng, {x, y}, 2, 2, true);
        Poly n2 = testutil::random_poly(rng, {x, y}, 2, 3, true);
        Poly d2 = testutil::random_poly(rng, {x, y}, 2, 2, true);
        if (d1.is_zero() || d2.is_zero()) continue;
        RationalFunction a = rf_reduce(n1, d1), b = rf_reduce(n2, d2);
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK((a + b) * (a - b) == a * a - b * b);
    }
}
