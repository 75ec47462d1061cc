#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "kronmot/error.hpp"

namespace kronmot {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical text form: "p/q" with q > 1, or "p" when the value is an integer.
inline std::string to_string(const BigRational& x) { return x.get_str(10); }
inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// Accepts "p", "-p", "p/q" (q > 0). The result is canonicalized.
BigRational parse_rational(std::string_view text);

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

/// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n.
BigInt binomial(long n, long k);

} // namespace kronmot
