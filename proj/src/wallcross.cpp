#include "kronmot/wallcross.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace kronmot {

namespace {

std::string show(DimVector D) { return "(" + std::to_string(D.d) + "," + std::to_string(D.e) + ")"; }

// Gaussian binomials in q = v^(-2), i.e. phi-ratios
// prod_{i<=n}(1-q^i) / (prod_{i<=k}(1-q^i) prod_{i<=n-k}(1-q^i)).
class GaussianBinomials {
public:
    explicit GaussianBinomials(int nmax) : rows_(static_cast<std::size_t>(nmax) + 1) {
        for (int n = 0; n <= nmax; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            row[0] = IntLaurent::one();
            row[static_cast<std::size_t>(n)] = IntLaurent::one();
            for (int k = 1; k < n; ++k) {
                // [n,k] = [n-1,k-1] + q^k [n-1,k]
                const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
                row[static_cast<std::size_t>(k)] =
                    prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)].shifted(-2 * k);
            }
        }
    }
    const IntLaurent& operator()(int n, int k) const {
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<IntLaurent>> rows_;
};

// Primitive directions present in the region, ascending in slope.
std::vector<DimVector> rays_ascending(const Region& region) {
    std::vector<DimVector> rays;
    for (const auto& D : region.points())
        if (!D.is_zero() && is_coprime(D)) rays.push_back(D);
    std::sort(rays.begin(), rays.end(), [](DimVector a, DimVector b) { return slope_less(a, b); });
    return rays;
}

} // namespace

int gcd(DimVector D) { return std::gcd(D.d, D.e); }

KroneckerForm::KroneckerForm(int m) : m_(m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "Kronecker quiver needs m >= 1 arrows");
}

std::weak_ordering slope_compare(DimVector a, DimVector b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::InvalidArgument, "slope of the zero dimension vector");
    // e/d vs e'/d' with d = 0 read as +infinity.
    if (a.d == 0 && b.d == 0) return std::weak_ordering::equivalent;
    if (a.d == 0) return std::weak_ordering::greater;
    if (b.d == 0) return std::weak_ordering::less;
    const long lhs = long(a.e) * b.d;
    const long rhs = long(b.e) * a.d;
    return lhs <=> rhs;
}

IntLaurent normalizer(DimVector D) {
    IntLaurent r = IntLaurent::one();
    for (int n : {D.d, D.e})
        for (int i = 1; i <= n; ++i) r *= IntLaurent(-2 * i, {BigInt(-1)}) + IntLaurent::one();
    return r;
}

RatFunc a_coeff(int m, DimVector D) {
    const KroneckerForm form(m);
    return RatFunc::from_integer(IntLaurent::monomial(static_cast<int>(-form.euler(D, D))), normalizer(D));
}

// ---------------------------------------------------------------------------
// Region

Region Region::triangle(int bound) {
    if (bound < 0) throw Error(ErrorKind::InvalidArgument, "negative bound");
    Region r = box(bound, bound);
    r.bound_ = bound;
    std::vector<DimVector> kept;
    for (const auto& D : r.points_)
        if (D.d + D.e <= bound) kept.push_back(D);
    std::fill(r.slot_.begin(), r.slot_.end(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        r.slot_[static_cast<std::size_t>(kept[i].d * (r.emax_ + 1) + kept[i].e)] = static_cast<long>(i);
    r.points_ = std::move(kept);
    return r;
}

Region Region::box(int dmax, int emax) {
    if (dmax < 0 || emax < 0) throw Error(ErrorKind::InvalidArgument, "negative box extent");
    Region r;
    r.dmax_ = dmax;
    r.emax_ = emax;
    r.slot_.assign(static_cast<std::size_t>((dmax + 1) * (emax + 1)), -1);
    // Ordered by total dimension so every point follows all points below it.
    for (int n = 0; n <= dmax + emax; ++n)
        for (int d = std::max(0, n - emax); d <= std::min(n, dmax); ++d) {
            r.slot_[static_cast<std::size_t>(d * (emax + 1) + (n - d))] = static_cast<long>(r.points_.size());
            r.points_.push_back({d, n - d});
        }
    return r;
}

bool Region::contains(DimVector D) const {
    if (D.d < 0 || D.e < 0 || D.d > dmax_ || D.e > emax_) return false;
    return slot_[static_cast<std::size_t>(D.d * (emax_ + 1) + D.e)] >= 0;
}

std::size_t Region::index(DimVector D) const {
    return static_cast<std::size_t>(slot_[static_cast<std::size_t>(D.d * (emax_ + 1) + D.e)]);
}

// ---------------------------------------------------------------------------
// MotiveTable

MotiveTable::MotiveTable(int m, Region region, std::vector<IntLaurent> normalized)
    : m_(m), region_(std::move(region)), normalized_(std::move(normalized)) {}

const IntLaurent& MotiveTable::normalized(DimVector D) const {
    if (!contains(D)) throw Error(ErrorKind::InsufficientBound, show(D) + " is outside the computed table");
    return normalized_[region_.index(D)];
}

RatFunc MotiveTable::a(DimVector D) const { return RatFunc::from_integer(normalized(D), normalizer(D)); }

std::optional<LaurentPoly> MotiveTable::motive(DimVector D) const {
    if (!is_coprime(D)) return std::nullopt;
    const IntLaurent num = normalized(D) * IntLaurent(-1, {BigInt(-1), BigInt(0), BigInt(1)});
    auto q = divide_exact(num, normalizer(D));
    if (!q) throw Error(ErrorKind::NonPolynomial, "moduli motive of " + show(D) + " is not a Laurent polynomial");
    return q->cast<BigRational>();
}

// ---------------------------------------------------------------------------
// hn_extract
//
// A(x) = A_{s1}(x) A_{s2}(x) ... with s1 < s2 < ... . Keep L = (A_{s1} ... A_{s_{j-1}})^(-1) A.
// Then L = A_{sj} (A_{s_{j+1}} ...), so on the ray of slope sj the coefficients
// of L are exactly a_D; peel A_{sj} off the left and continue. All coefficients
// are stored multiplied by phi(D), which turns the quantum-torus product into
//   (X Y)~(D) = sum_{D1 + D2 = D} v^{D1,D2} qbinom(D; D1) X~(D1) Y~(D2)
// with Gaussian-binomial weights, so no rational function arithmetic is needed.

MotiveTable hn_extract(int m, const Region& region) {
    const KroneckerForm form(m);
    const auto& pts = region.points();
    const GaussianBinomials qbin(std::max(region.dmax(), region.emax()));
    auto weight = [&](DimVector D, DimVector part) {
        return qbin(D.d, part.d) * qbin(D.e, part.e);
    };

    std::vector<IntLaurent> L(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        L[i] = IntLaurent::monomial(static_cast<int>(-form.euler(pts[i], pts[i])));
    std::vector<IntLaurent> a(pts.size());
    a[region.index({0, 0})] = IntLaurent::one();

    for (const DimVector ray : rays_ascending(region)) {
        // Semistable coefficients along the ray.
        std::vector<IntLaurent> on_ray{IntLaurent::one()};
        for (int n = 1; region.contains(n * ray); ++n) {
            const std::size_t i = region.index(n * ray);
            a[i] = L[i];
            on_ray.push_back(a[i]);
        }
        const int len = static_cast<int>(on_ray.size()) - 1;

        // A_s^(-1) on the ray; the ray is commutative so no twist appears.
        std::vector<IntLaurent> inv(static_cast<std::size_t>(len) + 1);
        inv[0] = IntLaurent::one();
        for (int n = 1; n <= len; ++n) {
            IntLaurent acc;
            for (int j = 0; j < n; ++j)
                add_product(acc, inv[static_cast<std::size_t>(j)] * on_ray[static_cast<std::size_t>(n - j)],
                            weight(n * ray, j * ray));
            inv[static_cast<std::size_t>(n)] = -acc;
        }

        // L <- A_s^(-1) L. Only points above the ray survive; iterate downward
        // so that L[D - n ray] is still the old value when D is updated.
        for (std::size_t idx = pts.size(); idx-- > 0;) {
            const DimVector D = pts[idx];
            if (D.is_zero()) continue;
            if (slope_compare(D, ray) <= 0) {
                L[idx] = IntLaurent();
                continue;
            }
            IntLaurent acc = L[idx];
            for (int n = 1; n <= len && leq(n * ray, D); ++n) {
                const DimVector N = n * ray;
                const DimVector R = D - N;
                const IntLaurent& lr = L[region.index(R)];
                const IntLaurent& iv = inv[static_cast<std::size_t>(n)];
                if (lr.is_zero() || iv.is_zero()) continue;
                add_product(acc, (iv * lr).shifted(static_cast<int>(form.antisym(N, R))), weight(D, N));
            }
            L[idx] = std::move(acc);
        }
    }
    return MotiveTable(m, region, std::move(a));
}

LaurentPoly moduli_motive(const MotiveTable& table, DimVector D) {
    auto mot = table.motive(D);
    if (!mot) throw Error(ErrorKind::NonCoprime, show(D) + " is not coprime; use the raw a_D table instead");
    return *std::move(mot);
}

LaurentPoly moduli_motive(int m, DimVector D) {
    if (D.d < 0 || D.e < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension vector");
    if (!is_coprime(D)) throw Error(ErrorKind::NonCoprime, show(D) + " is not coprime; use the raw a_D table instead");
    return moduli_motive(hn_extract(m, Region::box(D.d, D.e)), D);
}

// ---------------------------------------------------------------------------
// Series along a ray

namespace {

void require_primitive(DimVector D0) {
    if (D0.d < 0 || D0.e < 0 || !is_coprime(D0))
        throw Error(ErrorKind::InvalidArgument, "ray direction " + show(D0) + " must be primitive");
}

void require_covered(const MotiveTable& table, DimVector D) {
    if (!table.contains(D))
        throw Error(ErrorKind::InsufficientBound, "table does not reach " + show(D));
}

} // namespace

Series ray_series(const MotiveTable& table, DimVector D0, int order) {
    require_primitive(D0);
    require_covered(table, order * D0);
    Series s = Series::one(order);
    for (int n = 1; n <= order; ++n) s[n] = table.a(n * D0);
    return s;
}

Series ray_series(int m, DimVector D0, int order) {
    require_primitive(D0);
    return ray_series(hn_extract(m, Region::box(order * D0.d, order * D0.e)), D0, order);
}

Series framed_via_quotient(const MotiveTable& table, DimVector D0, int order) {
    const Series A = ray_series(table, D0, order);
    return scale_arg(A, D0.e) * series_inv(scale_arg(A, -D0.e));
}

Series framed_via_quotient(int m, DimVector D0, int order) {
    require_primitive(D0);
    return framed_via_quotient(hn_extract(m, Region::box(order * D0.d, order * D0.e)), D0, order);
}

Region moduli_series_region(int k, int sign, int order) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    if (k < 0 || order < 0) throw Error(ErrorKind::InvalidArgument, "negative k or order");
    return Region::box(order, std::max(0, k * order + sign));
}

PolySeries moduli_series(const MotiveTable& table, int k, int sign, int order) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    PolySeries s = PolySeries::one(order);
    for (int d = 1; d <= order; ++d) {
        const DimVector D{d, k * d + sign};
        if (D.e < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension in G series");
        s[d] = moduli_motive(table, D);
    }
    return s;
}

// ---------------------------------------------------------------------------

Report verify_dualities(int m, int bound) {
    if (bound < 0) throw Error(ErrorKind::InvalidArgument, "negative bound");
    std::vector<DimVector> pairs;
    int dmax = bound;
    for (int d = 0; d <= bound; ++d)
        for (int e = 0; d + e <= bound; ++e) {
            const DimVector D{d, e};
            if (!is_coprime(D)) continue;
            pairs.push_back(D);
            if (e <= m * d) dmax = std::max(dmax, m * d - e);
        }
    const MotiveTable table = hn_extract(m, Region::box(dmax, bound));
    Report report;
    for (const DimVector D : pairs) {
        const LaurentPoly lhs = moduli_motive(table, D);
        report.push_back({"swap" + show(D), m, std::nullopt, bound,
                          lhs == moduli_motive(table, {D.e, D.d}), std::nullopt});
        if (D.e <= m * D.d) {
            const DimVector R{m * D.d - D.e, D.d};
            report.push_back({"reflect" + show(D), m, std::nullopt, bound,
                              lhs == moduli_motive(table, R), std::nullopt});
        }
    }
    return report;
}

} // namespace kronmot
