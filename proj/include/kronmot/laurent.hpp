#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kronmot/bigrational.hpp"
#include "kronmot/error.hpp"

namespace kronmot {

/// Laurent polynomial in one variable v, stored densely from the lowest
/// nonzero exponent upward. Canonical form: no zero entries at either end;
/// the zero polynomial has no coefficients and min_exp() == 0.
///
/// Scalar is BigInt for the integer hot paths and BigRational for everything
/// that has to live in a field.
template <typename Scalar>
class Laurent {
public:
    using scalar_type = Scalar;

    Laurent() = default;
    explicit Laurent(Scalar constant) : c_{std::move(constant)} { canonicalize(); }
    Laurent(int min_exp, std::vector<Scalar> coeffs) : min_exp_(min_exp), c_(std::move(coeffs)) {
        canonicalize();
    }

    static Laurent monomial(int exp, Scalar c = Scalar(1)) { return Laurent(exp, {std::move(c)}); }
    static Laurent one() { return Laurent(Scalar(1)); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monomial() const noexcept { return c_.size() == 1; }
    bool is_one() const { return c_.size() == 1 && min_exp_ == 0 && c_[0] == 1; }

    int min_exp() const noexcept { return min_exp_; }
    int max_exp() const noexcept { return min_exp_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    const Scalar& lowest() const { return c_.front(); }
    const Scalar& highest() const { return c_.back(); }

    Scalar coeff(int exp) const {
        if (exp < min_exp_ || exp > max_exp()) return Scalar(0);
        return c_[static_cast<std::size_t>(exp - min_exp_)];
    }

    /// Multiply by v^k.
    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.min_exp_ += k;
        return r;
    }

    /// Substitute v -> v^(-1).
    Laurent reflected() const {
        if (is_zero()) return {};
        std::vector<Scalar> rc(c_.rbegin(), c_.rend());
        return Laurent(-max_exp(), std::move(rc));
    }

    template <typename Other>
    Laurent<Other> cast() const {
        std::vector<Other> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.emplace_back(x);
        return Laurent<Other>(min_exp_, std::move(out));
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return accumulate(o, false); }
    Laurent& operator-=(const Laurent& o) { return accumulate(o, true); }

    Laurent& operator*=(const Scalar& s) {
        if (s == 0) {
            *this = Laurent();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }

    Laurent& operator*=(const Laurent& o) {
        *this = *this * o;
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Scalar& s) { return a *= s; }
    friend Laurent operator*(const Scalar& s, Laurent a) { return a *= s; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return (a * b.c_[0]).shifted(b.min_exp_);
        if (a.is_monomial()) return (b * a.c_[0]).shifted(a.min_exp_);
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const Scalar& x = a.c_[i];
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += x * b.c_[j];
        }
        return Laurent(a.min_exp_ + b.min_exp_, std::move(out));
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
    }

    /// out += a * b without materializing the product.
    friend void add_product(Laurent& out, const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return;
        const int lo = a.min_exp_ + b.min_exp_;
        const int hi = a.max_exp() + b.max_exp();
        out.reserve_range(lo, hi);
        const std::size_t off = static_cast<std::size_t>(lo - out.min_exp_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const Scalar& x = a.c_[i];
            if (x == 0) continue;
            Scalar* dst = out.c_.data() + off + i;
            for (std::size_t j = 0; j < b.c_.size(); ++j) dst[j] += x * b.c_[j];
        }
        out.canonicalize();
    }

private:
    int min_exp_ = 0;
    std::vector<Scalar> c_;

    void canonicalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            min_exp_ = 0;
            return;
        }
        std::size_t tail = c_.size();
        while (c_[tail - 1] == 0) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(tail), c_.end());
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        }
        min_exp_ += static_cast<int>(lead);
    }

    // Grow storage (with zeros) so that [lo, hi] is addressable.
    void reserve_range(int lo, int hi) {
        if (c_.empty()) {
            min_exp_ = lo;
            c_.assign(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
            return;
        }
        if (lo < min_exp_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(min_exp_ - lo), Scalar(0));
            min_exp_ = lo;
        }
        if (hi > max_exp()) c_.resize(static_cast<std::size_t>(hi - min_exp_ + 1), Scalar(0));
    }

    Laurent& accumulate(const Laurent& o, bool subtract) {
        if (o.is_zero()) return *this;
        reserve_range(o.min_exp_, o.max_exp());
        const std::size_t off = static_cast<std::size_t>(o.min_exp_ - min_exp_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            if (subtract)
                c_[off + i] -= o.c_[i];
            else
                c_[off + i] += o.c_[i];
        }
        canonicalize();
        return *this;
    }
};

using LaurentPoly = Laurent<BigRational>;
using IntLaurent = Laurent<BigInt>;

/// [n]_v = v^(n-1) + v^(n-3) + ... + v^(1-n); [0]_v = 0.
template <typename Scalar = BigRational>
Laurent<Scalar> quantum_integer(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "quantum_integer: negative argument");
    if (n == 0) return {};
    std::vector<Scalar> c(static_cast<std::size_t>(2 * n - 1), Scalar(0));
    for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
    return Laurent<Scalar>(1 - n, std::move(c));
}

template <typename Scalar>
Scalar eval_at_one(const Laurent<Scalar>& p) {
    Scalar s(0);
    for (const auto& x : p.coeffs()) s += x;
    return s;
}

template <typename Scalar>
bool is_palindromic(const Laurent<Scalar>& p) {
    return p == p.reflected();
}

template <typename Scalar>
bool has_nonnegative_integer_coeffs(const Laurent<Scalar>& p) {
    for (const auto& x : p.coeffs()) {
        if (x < 0) return false;
        if constexpr (std::is_same_v<Scalar, BigRational>) {
            if (!is_integer(x)) return false;
        }
    }
    return true;
}

/// Exact quotient num / den in the Laurent polynomial ring, or nullopt when
/// den does not divide num (over BigInt this includes non-integral quotients).
template <typename Scalar>
std::optional<Laurent<Scalar>> divide_exact(const Laurent<Scalar>& num, const Laurent<Scalar>& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "divide_exact by zero");
    if (num.is_zero()) return Laurent<Scalar>();
    if (num.size() < den.size()) return std::nullopt;
    const auto& d = den.coeffs();
    std::vector<Scalar> r = num.coeffs();
    const std::size_t qn = r.size() - d.size() + 1;
    std::vector<Scalar> q(qn);
    const Scalar& lead = d.back();
    for (std::size_t k = qn; k-- > 0;) {
        Scalar& top = r[k + d.size() - 1];
        if (top == 0) continue;
        if constexpr (std::is_same_v<Scalar, BigInt>) {
            if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) return std::nullopt;
            mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        } else {
            q[k] = top / lead;
        }
        const Scalar qk = q[k];
        for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= qk * d[j];
    }
    for (const auto& x : r)
        if (x != 0) return std::nullopt;
    return Laurent<Scalar>(num.min_exp() - den.min_exp(), std::move(q));
}

/// Human-readable rendering, e.g. "v^-2 + 1 + v^2".
template <typename Scalar>
std::string to_string(const Laurent<Scalar>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
        Scalar c = p.coeff(e);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool unit = c == 1;
        if (!unit || e == 0) os << c.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Laurent<Scalar>& p) {
    return os << to_string(p);
}

} // namespace kronmot
