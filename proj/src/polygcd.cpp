#include "kronmot/polygcd.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace kronmot::poly {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    IntPoly r = p;
    trim(r);
    if (r.empty()) return r;
    BigInt g = content(r);
    if (r.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
    quotient.clear();
    if (a.empty()) return true;
    if (b.empty() || a.size() < b.size()) return false;
    IntPoly r = a;
    const std::size_t qn = a.size() - b.size() + 1;
    quotient.assign(qn, BigInt(0));
    const BigInt& lead = b.back();
    for (std::size_t k = qn; k-- > 0;) {
        BigInt& top = r[k + b.size() - 1];
        if (top == 0) continue;
        if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) return false;
        mpz_divexact(quotient[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        const BigInt qk = quotient[k];
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= qk * b[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

namespace {

BigInt max_norm(const IntPoly& p) {
    BigInt m = 0;
    for (const auto& c : p) {
        BigInt a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

// Balanced xi-adic digits of value, i.e. the unique polynomial with
// coefficients in (-xi/2, xi/2] evaluating to value at xi.
IntPoly interpolate(BigInt value, const BigInt& xi) {
    IntPoly out;
    const BigInt half = xi / 2;
    BigInt digit;
    while (value != 0) {
        mpz_fdiv_r(digit.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
        if (digit > half) digit -= xi;
        out.push_back(digit);
        value -= digit;
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
    }
    return out;
}

// r <- pseudo-remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const BigInt la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

} // namespace

IntPoly gcd_prs(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = primitive_part(a0);
    IntPoly b = primitive_part(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = primitive_part(a0);
    IntPoly b = primitive_part(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() == 1 || b.size() == 1) return IntPoly{BigInt(1)};
    if (a == b) return a;

    // With xi > 2 min(|a|, |b|) + 1, a primitive interpolant dividing both
    // inputs is their gcd.
    BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    IntPoly scratch;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const BigInt ga = evaluate(a, xi);
        const BigInt gb = evaluate(b, xi);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
        IntPoly cand = primitive_part(interpolate(g, xi));
        if (!cand.empty() && divide_exact(a, cand, scratch) && divide_exact(b, cand, scratch))
            return cand;
        xi = xi * 73794 / 27011 + 1;
    }
    return gcd_prs(a, b);
}

} // namespace kronmot::poly
