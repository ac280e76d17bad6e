#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace lforge {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "123", "-4/7" style strings (base 10).
inline Rational rational_from_string(const std::string& s) {
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// gcd of two rationals: gcd(n1/d1, n2/d2) = gcd(n1,n2)/lcm(d1,d2).
/// Result is nonnegative; gcd(0,q) = |q|.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class n = gcd(a.get_num(), b.get_num());
    mpz_class d = lcm(a.get_den(), b.get_den());
    Rational q(n, d);
    q.canonicalize();
    return abs(q);
}

/// An element of Q(i): re + im*i with exact rational parts.
/// All arithmetic is exact; mpq keeps each part in lowest terms with a
/// positive denominator.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    /// re^2 + im^2 (a nonnegative rational, zero only for zero).
    Rational norm() const { return re * re + im * im; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order used only for canonical/deterministic output.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational pow(long e) const;

    /// Exact square root in Q(i) if one exists.
    bool sqrt_exact(GaussianRational& out) const;

    /// Debug/plain rendering, e.g. "3/2", "i", "-2*i", "1+1/2*i".
    std::string str() const;
};

GaussianRational gaussian_from_string(const std::string& s);

}  // namespace lforge
