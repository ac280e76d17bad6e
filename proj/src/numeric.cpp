#include "lforge/numeric.hpp"

#include <stdexcept>

namespace lforge {

GaussianRational GaussianRational::pow(long e) const {
    if (e == 0) return GaussianRational(1);
    GaussianRational base = *this;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (invert) return GaussianRational(1) / acc;
    return acc;
}

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_class rn, rd;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

}  // namespace

bool GaussianRational::sqrt_exact(GaussianRational& out) const {
    // sqrt(a+bi) = x+yi with x^2-y^2 = a, 2xy = b, x^2+y^2 = sqrt(a^2+b^2).
    Rational n2;
    if (!rational_sqrt(norm(), n2)) return false;
    Rational x2 = (re + n2) / 2;
    Rational y2 = (n2 - re) / 2;
    Rational x, y;
    if (!rational_sqrt(x2, x) || !rational_sqrt(y2, y)) return false;
    // fix the relative sign from 2xy = b
    if (im < 0) y = -y;
    out = GaussianRational(x, y);
    if (out * out == *this) return true;
    return false;
}

std::string GaussianRational::str() const {
    auto part = [](const Rational& q) { return q.get_str(); };
    if (im == 0) return part(re);
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = part(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return part(re) + "+" + imag;
    return part(re) + imag;  // imag already carries the minus
}

GaussianRational gaussian_from_string(const std::string& s) {
    // forms: "q", "q*i", "i", "-i", "q1+q2*i", "q1-q2*i"
    auto parse_term = [](const std::string& t, GaussianRational& acc) {
        if (t.empty()) return;
        std::string body = t;
        bool neg = false;
        if (body[0] == '+') body = body.substr(1);
        else if (body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        bool imag = false;
        if (body == "i") {
            acc += GaussianRational(Rational(0), Rational(neg ? -1 : 1));
            return;
        }
        if (body.size() > 2 && body.substr(body.size() - 2) == "*i") {
            imag = true;
            body = body.substr(0, body.size() - 2);
        }
        Rational q = rational_from_string(body);
        if (neg) q = -q;
        if (imag)
            acc += GaussianRational(Rational(0), q);
        else
            acc += GaussianRational(q);
    };
    GaussianRational acc;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*')) {
            parse_term(s.substr(start, i - start), acc);
            start = i;
        }
    }
    return acc;
}

}  // namespace lforge
