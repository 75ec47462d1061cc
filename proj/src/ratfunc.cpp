#include "kronmot/ratfunc.hpp"

#include <utility>

#include "kronmot/polygcd.hpp"

namespace kronmot {

namespace {

// value = scale * v^shift * n(v) / d(v) with n(0), d(0) != 0 ordinary polynomials.
std::pair<LaurentPoly, LaurentPoly> normalize_integral(poly::IntPoly n, poly::IntPoly d, int shift,
                                                       BigRational scale) {
    if (d.size() > 1 && n.size() > 1) {
        poly::IntPoly g = poly::gcd(n, d);
        if (g.size() > 1) {
            poly::IntPoly q;
            poly::divide_exact(n, g, q);
            n = std::move(q);
            poly::divide_exact(d, g, q);
            d = std::move(q);
        }
    }
    scale /= BigRational(d.front());
    std::vector<BigRational> nc;
    nc.reserve(n.size());
    for (const auto& c : n) nc.emplace_back(BigRational(c) * scale);
    std::vector<BigRational> dc;
    dc.reserve(d.size());
    const BigRational d0(d.front());
    for (const auto& c : d) dc.emplace_back(BigRational(c) / d0);
    return {LaurentPoly(shift, std::move(nc)), LaurentPoly(0, std::move(dc))};
}

// Clears denominators: p = integral / multiplier.
poly::IntPoly integralize(const LaurentPoly& p, BigInt& multiplier) {
    multiplier = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(), c.get_den_mpz_t());
    poly::IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        BigInt x = c.get_num() * (multiplier / c.get_den());
        out.push_back(std::move(x));
    }
    return out;
}

poly::IntPoly to_intpoly(const IntLaurent& p) { return p.coeffs(); }

} // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "RatFunc with zero denominator");
    if (num.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    const int shift = num.min_exp() - den.min_exp();
    if (den.is_monomial()) {
        const BigRational inv = 1 / den.lowest();
        num_ = LaurentPoly(shift, num.coeffs()) * inv;
        den_ = LaurentPoly::one();
        return;
    }
    BigInt mn, md;
    poly::IntPoly n = integralize(num, mn);
    poly::IntPoly d = integralize(den, md);
    auto [a, b] = normalize_integral(std::move(n), std::move(d), shift, make_rational(md, mn));
    num_ = std::move(a);
    den_ = std::move(b);
}

RatFunc RatFunc::from_integer(const IntLaurent& num, const IntLaurent& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "RatFunc with zero denominator");
    if (num.is_zero()) return RatFunc();
    const int shift = num.min_exp() - den.min_exp();
    if (den.is_monomial()) {
        const BigRational inv = make_rational(BigInt(1), den.lowest());
        LaurentPoly n = LaurentPoly(shift, num.cast<BigRational>().coeffs()) * inv;
        return {std::move(n), LaurentPoly::one(), Normalized{}};
    }
    auto [a, b] = normalize_integral(to_intpoly(num), to_intpoly(den), shift, BigRational(1));
    return {std::move(a), std::move(b), Normalized{}};
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero RatFunc");
    return {den_, num_};
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return {a.num_ + b.num_, LaurentPoly::one(), RatFunc::Normalized{}};
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return {a.num_ * b.num_, LaurentPoly::one(), RatFunc::Normalized{}};
    if (b.den_.is_one() && b.num_.is_monomial())
        return {a.num_ * b.num_, a.den_, RatFunc::Normalized{}};
    if (a.den_.is_one() && a.num_.is_monomial())
        return {a.num_ * b.num_, b.den_, RatFunc::Normalized{}};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown arithmetic op");
}

LaurentPoly to_laurent(const RatFunc& r) {
    if (r.is_polynomial()) return r.num();
    // In normal form a nontrivial denominator never divides the numerator.
    throw Error(ErrorKind::NonPolynomial, "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")");
}

std::string to_string(const RatFunc& r) {
    if (r.is_polynomial()) return to_string(r.num());
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

} // namespace kronmot
