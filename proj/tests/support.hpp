#pragma once

#include <random>
#include <vector>

#include "kronmot/laurent.hpp"
#include "kronmot/ratfunc.hpp"
#include "kronmot/series.hpp"

namespace testing {

using namespace kronmot;

inline LaurentPoly L(int min_exp, std::vector<long> coeffs) {
    std::vector<BigRational> c;
    for (long x : coeffs) c.emplace_back(x);
    return LaurentPoly(min_exp, std::move(c));
}

inline LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }

/// Palindromic table entries placed on exponents 1-n, 3-n, ..., n-1.
inline LaurentPoly table(const std::vector<long>& list) {
    const int n = static_cast<int>(list.size());
    std::vector<long> c(static_cast<std::size_t>(2 * n - 1), 0);
    for (int i = 0; i < n; ++i) c[2 * static_cast<std::size_t>(i)] = list[static_cast<std::size_t>(i)];
    return L(1 - n, c);
}

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4, int span = 3, int max_coeff = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms), exp(-span, span), coeff(-max_coeff, max_coeff),
        den(1, 3);
    LaurentPoly p;
    for (int t = terms(rng); t > 0; --t)
        p += LaurentPoly::monomial(exp(rng), make_rational(BigInt(coeff(rng)), BigInt(den(rng))));
    return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937& rng) {
    for (;;)
        if (auto p = random_laurent(rng); !p.is_zero()) return p;
}

inline RatFunc random_ratfunc(std::mt19937& rng) { return RatFunc(random_laurent(rng), random_nonzero_laurent(rng)); }

inline Series random_series(std::mt19937& rng, int order) {
    Series s(order);
    for (int d = 0; d <= order; ++d) s[d] = random_ratfunc(rng);
    return s;
}

inline PolySeries random_poly_series(std::mt19937& rng, int order) {
    PolySeries s(order);
    for (int d = 0; d <= order; ++d) s[d] = random_laurent(rng);
    return s;
}

} // namespace testing
