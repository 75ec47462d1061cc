#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronmot/laurent.hpp"
#include "kronmot/ratfunc.hpp"

namespace kronmot {

// Coefficient-ring hooks. TruncSeries<C> works for any C with + - * and the
// four functions below; RatFunc and LaurentPoly are the two rings in use.

inline RatFunc times(const RatFunc& c, const LaurentPoly& p) { return c * RatFunc(p); }
inline LaurentPoly times(const LaurentPoly& c, const LaurentPoly& p) { return c * p; }

inline RatFunc unit_inverse(const RatFunc& c) {
    if (c.is_zero()) throw Error(ErrorKind::NotInvertible, "series constant term is zero");
    return c.inverse();
}
inline LaurentPoly unit_inverse(const LaurentPoly& c) {
    if (!c.is_monomial()) throw Error(ErrorKind::NotInvertible, "series constant term " + to_string(c) + " is not a unit");
    return LaurentPoly::monomial(-c.min_exp(), 1 / c.lowest());
}

inline RatFunc exact_quotient(const RatFunc& c, const LaurentPoly& p) { return c / RatFunc(p); }
inline LaurentPoly exact_quotient(const LaurentPoly& c, const LaurentPoly& p) {
    auto q = divide_exact(c, p);
    if (!q) throw Error(ErrorKind::ExactDivisionFailure, to_string(c) + " / " + to_string(p));
    return *std::move(q);
}

inline bool is_zero(const RatFunc& c) { return c.is_zero(); }
inline bool is_zero(const LaurentPoly& c) { return c.is_zero(); }

/// Power series in t over the coefficient ring C, known modulo t^(order+1).
template <typename C>
class TruncSeries {
public:
    using coeff_type = C;

    TruncSeries() : TruncSeries(0) {}
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(checked(order)) + 1) {}
    TruncSeries(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(checked(order)) + 1);
    }

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.c_[0] = C(LaurentPoly::one());
        return s;
    }
    /// The series t (zero when order is 0).
    static TruncSeries variable(int order) {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = C(LaurentPoly::one());
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const noexcept { return c_; }
    const C& operator[](int d) const { return c_.at(static_cast<std::size_t>(d)); }
    C& operator[](int d) { return c_.at(static_cast<std::size_t>(d)); }

    TruncSeries truncated(int order) const {
        if (order > this->order()) throw Error(ErrorKind::InvalidArgument, "cannot truncate a series to a higher order");
        return TruncSeries(order, std::vector<C>(c_.begin(), c_.begin() + order + 1));
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int d = 0; d <= n; ++d) r[d] = a[d] + b[d];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int d = 0; d <= n; ++d) r[d] = a[d] - b[d];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    static int checked(int order) {
        if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
        return order;
    }
    std::vector<C> c_;
};

using Series = TruncSeries<RatFunc>;
using PolySeries = TruncSeries<LaurentPoly>;

/// Cauchy product, truncated to the smaller order.
template <typename C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries<C> r(n);
    for (int i = 0; i <= n; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <typename C>
TruncSeries<C> operator*(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return series_mul(a, b);
}

/// Multiplicative inverse; throws NotInvertible when a(0) is not a unit of C.
template <typename C>
TruncSeries<C> series_inv(const TruncSeries<C>& a) {
    const int n = a.order();
    TruncSeries<C> r(n);
    const C inv0 = unit_inverse(a[0]);
    r[0] = inv0;
    for (int d = 1; d <= n; ++d) {
        C acc{};
        for (int j = 1; j <= d; ++j) {
            if (is_zero(a[j]) || is_zero(r[d - j])) continue;
            acc += a[j] * r[d - j];
        }
        r[d] = -(acc * inv0);
    }
    return r;
}

/// t -> v^p t: the t^d coefficient picks up v^(p d).
template <typename C>
TruncSeries<C> scale_arg(const TruncSeries<C>& a, int p) {
    TruncSeries<C> r = a;
    for (int d = 1; d <= a.order(); ++d) r[d] = r[d].shifted(p * d);
    return r;
}

/// Multiply every t^d coefficient by f(d).
template <typename C, typename F>
TruncSeries<C> coefficientwise(const TruncSeries<C>& a, F&& f) {
    TruncSeries<C> r(a.order());
    for (int d = 0; d <= a.order(); ++d)
        if (!is_zero(a[d])) r[d] = times(a[d], f(d));
    return r;
}

/// Delta: t^d -> [d]_v t^d.
template <typename C>
TruncSeries<C> delta_op(const TruncSeries<C>& a) {
    return coefficientwise(a, [](int d) { return quantum_integer(d); });
}

/// Nabla^(k): t^d -> [k d + 1]_v t^d.
template <typename C>
TruncSeries<C> nabla_op(const TruncSeries<C>& a, int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "nabla_op: negative k");
    return coefficientwise(a, [k](int d) { return quantum_integer(k * d + 1); });
}

/// The unique G with G(0) = 1 and Delta G = b.
template <typename C>
TruncSeries<C> delta_invert(const TruncSeries<C>& b) {
    if (!is_zero(b[0])) throw Error(ErrorKind::NonZeroConstant, "delta_invert needs b(0) = 0");
    TruncSeries<C> g(b.order());
    g[0] = C(LaurentPoly::one());
    for (int d = 1; d <= b.order(); ++d)
        if (!is_zero(b[d])) g[d] = exact_quotient(b[d], quantum_integer(d));
    return g;
}

/// Multiply by t; the order grows by one.
template <typename C>
TruncSeries<C> multiply_by_t(const TruncSeries<C>& a) {
    std::vector<C> c;
    c.reserve(a.coeffs().size() + 1);
    c.emplace_back();
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncSeries<C>(a.order() + 1, std::move(c));
}

/// (a - a(0)) / t; the order drops by one (order 0 gives the zero series of order 0).
template <typename C>
TruncSeries<C> divide_by_t(const TruncSeries<C>& a) {
    if (a.order() == 0) return TruncSeries<C>(0);
    return TruncSeries<C>(a.order() - 1, std::vector<C>(a.coeffs().begin() + 1, a.coeffs().end()));
}

/// Lowest degree where the two series differ (compared up to the smaller order).
template <typename C>
std::optional<int> first_mismatch(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    const int n = std::min(a.order(), b.order());
    for (int d = 0; d <= n; ++d)
        if (!(a[d] == b[d])) return d;
    return std::nullopt;
}

inline PolySeries to_poly_series(const Series& s) {
    PolySeries r(s.order());
    for (int d = 0; d <= s.order(); ++d) r[d] = to_laurent(s[d]);
    return r;
}

inline Series to_ratfunc_series(const PolySeries& s) {
    Series r(s.order());
    for (int d = 0; d <= s.order(); ++d) r[d] = RatFunc(s[d]);
    return r;
}

} // namespace kronmot
