#include "kronmot/eulerchar.hpp"

#include <algorithm>
#include <string>

#include "kronmot/error.hpp"

namespace kronmot {

namespace {

void require(int m, int d, int dmin) {
    if (m < 3) throw Error(ErrorKind::InvalidArgument, "Euler characteristic formulas need m >= 3");
    if (d < dmin) throw Error(ErrorKind::InvalidArgument, "d out of range: " + std::to_string(d));
}

BigInt integral(const BigRational& x, const char* what) {
    if (!is_integer(x)) throw Error(ErrorKind::NonInteger, std::string(what) + " evaluated to " + to_string(x));
    return x.get_num();
}

} // namespace

BigInt chi_moduli_closed(int m, int d) {
    require(m, d, 1);
    const long M = m, D = d;
    const BigRational first =
        make_rational(BigInt(M - 1), BigInt(D * ((M - 2) * D + 1))) * BigRational(binomial((M - 1) * (M - 1) * D + M - 2, D - 1));
    const BigRational second =
        make_rational(BigInt(M), BigInt(D * ((M - 1) * D + 1))) * BigRational(binomial((M - 1) * (M - 1) * D + M - 1, D - 1));
    if (first != second)
        throw Error(ErrorKind::NonInteger, "the two closed forms disagree: " + to_string(first) + " vs " + to_string(second));
    return integral(first, "chi_moduli_closed");
}

BigInt chi_framed_pow_closed(int m, int d) {
    require(m, d, 0);
    const long M = m, D = d;
    const long k = M * (M - 1);
    const BigRational x = make_rational(BigInt(k), BigInt(k + (M - 1) * (M - 1) * D)) *
                          BigRational(binomial((M - 1) * (M - 1) * D + k, D));
    return integral(x, "chi_framed_pow_closed");
}

BigInt chi_framed_closed(int m, int d) {
    require(m, d, 0);
    const long M = m, D = d;
    const BigRational x = make_rational(BigInt(M), BigInt(M + (M - 1) * (M - 1) * D)) *
                          BigRational(binomial((M - 1) * (M - 1) * D + M, D));
    return integral(x, "chi_framed_closed");
}

BigInt chi_from_motive(const LaurentPoly& p) {
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) throw Error(ErrorKind::NonInteger, "motive has non-integral coefficient " + to_string(c));
    return eval_at_one(p).get_num();
}

ChiRecord make_chi_record(int m, int d) {
    require(m, d, 1);
    return {m, d, chi_framed_closed(m, d), chi_moduli_closed(m, d)};
}

RationalSeries rational_series_mul(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    RationalSeries r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

RationalSeries rational_series_pow(const RationalSeries& a, int k) {
    RationalSeries r(a.size());
    if (!r.empty()) r[0] = 1;
    for (int i = 0; i < k; ++i) r = rational_series_mul(r, a);
    return r;
}

RationalSeries rational_series_inv(const RationalSeries& a) {
    if (a.empty() || a[0] == 0) throw Error(ErrorKind::NotInvertible, "series constant term is zero");
    RationalSeries r(a.size());
    r[0] = 1 / a[0];
    for (std::size_t d = 1; d < a.size(); ++d) {
        BigRational acc = 0;
        for (std::size_t j = 1; j <= d; ++j) acc += a[j] * r[d - j];
        r[d] = -acc * r[0];
    }
    return r;
}

bool specialized_funceq_holds(int m, const RationalSeries& fbar) {
    if (fbar.empty()) return true;
    RationalSeries inner = rational_series_pow(fbar, m - 2);
    RationalSeries base(fbar.size());
    base[0] = 1;
    for (std::size_t d = 1; d < fbar.size(); ++d) base[d] = -inner[d - 1];
    return rational_series_pow(rational_series_inv(base), m) == fbar;
}

} // namespace kronmot
