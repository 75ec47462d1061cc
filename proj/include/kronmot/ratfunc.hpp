#pragma once

#include <ostream>
#include <string>

#include "kronmot/laurent.hpp"

namespace kronmot {

/// Element of Q(v) held as num/den in lowest terms.
///
/// Normal form: den has min_exp 0 and constant coefficient 1, and num and den
/// share no nonconstant factor in Q[v]. Two RatFuncs are equal iff their
/// normal forms agree term by term.
class RatFunc {
public:
    RatFunc() : den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {} // NOLINT: Laurent embeds in Q(v)
    explicit RatFunc(int c) : RatFunc(LaurentPoly(BigRational(c))) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    /// From polynomials over Z. Skips the rational conversion on the caller side.
    static RatFunc from_integer(const IntLaurent& num, const IntLaurent& den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc inverse() const;

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Multiply by v^k.
    RatFunc shifted(int k) const {
        RatFunc r = *this;
        r.num_ = r.num_.shifted(k);
        return r;
    }

private:
    struct Normalized {};
    RatFunc(LaurentPoly num, LaurentPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the field operations.
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

/// Exact quotient num/den; throws NonPolynomial if den does not divide num.
LaurentPoly to_laurent(const RatFunc& r);

std::string to_string(const RatFunc& r);
inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << to_string(r); }

} // namespace kronmot
