#pragma once

#include <vector>

#include "kronmot/bigrational.hpp"
#include "kronmot/laurent.hpp"

namespace kronmot {

/// Euler characteristics of K_{d,d}^(m),fr and K_{d,d-1}^(m).
struct ChiRecord {
    int m = 0;
    int d = 0;
    BigInt chi_framed;
    BigInt chi_moduli;
};

/// chi(K_{d,d-1}^(m)) = (m-1)/(d((m-2)d+1)) C((m-1)^2 d + m-2, d-1).
/// The equivalent form m/(d((m-1)d+1)) C((m-1)^2 d + m-1, d-1) is evaluated
/// too; disagreement or a non-integral value throws NonInteger.
BigInt chi_moduli_closed(int m, int d);

/// [t^d] Fbar(t)^(m-1) = m(m-1)/(m(m-1)+(m-1)^2 d) C((m-1)^2 d + m(m-1), d).
BigInt chi_framed_pow_closed(int m, int d);

/// chi(K_{d,d}^(m),fr) = [t^d] Fbar(t) = m/(m+(m-1)^2 d) C((m-1)^2 d + m, d).
BigInt chi_framed_closed(int m, int d);

/// Value at v = 1; throws NonInteger unless all coefficients are integers.
BigInt chi_from_motive(const LaurentPoly& p);

ChiRecord make_chi_record(int m, int d);

/// Truncated power series over Q, index = degree.
using RationalSeries = std::vector<BigRational>;

/// Fbar = Fbar_0 + ... + Fbar_N t^N, checked against Fbar = (1 - t Fbar^(m-2))^(-m).
bool specialized_funceq_holds(int m, const RationalSeries& fbar);

RationalSeries rational_series_mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries rational_series_pow(const RationalSeries& a, int k);
RationalSeries rational_series_inv(const RationalSeries& a);

} // namespace kronmot
