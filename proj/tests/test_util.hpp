#pragma once

#include <random>

#include "lforge/poly.hpp"
#include "lforge/ratfun.hpp"

namespace lforge::testutil {

/// Random sparse polynomial: <= max_terms terms, total degree <= max_deg,
/// small integer coefficients (nonzero), over the given symbols.
inline Poly random_poly(std::mt19937& rng, const std::vector<Symbol>& vars, int max_deg, int max_terms,
                        bool gaussian_coeffs = false) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, max_deg);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        int budget = max_deg;
        for (Symbol v : vars) {
            int e = expo(rng) % (budget + 1);
            if (e > 0) {
                m.factors.push_back({v, static_cast<std::uint32_t>(e)});
                budget -= e;
            }
        }
        std::sort(m.factors.begin(), m.factors.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        long re = coeff(rng);
        long im = gaussian_coeffs ? coeff(rng) : 0;
        if (re == 0 && im == 0) re = 1;
        p.add_term(m, GaussianRational(Rational(re), Rational(im)));
    }
    return p;
}

}  // namespace lforge::testutil
