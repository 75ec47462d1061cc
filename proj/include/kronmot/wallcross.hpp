#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "kronmot/laurent.hpp"
#include "kronmot/ratfunc.hpp"
#include "kronmot/report.hpp"
#include "kronmot/series.hpp"

namespace kronmot {

/// Dimension vector d*i + e*j of the m-Kronecker quiver i => j.
struct DimVector {
    int d = 0;
    int e = 0;

    bool is_zero() const noexcept { return d == 0 && e == 0; }
    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend DimVector operator+(DimVector a, DimVector b) { return {a.d + b.d, a.e + b.e}; }
    friend DimVector operator-(DimVector a, DimVector b) { return {a.d - b.d, a.e - b.e}; }
    friend DimVector operator*(int n, DimVector a) { return {n * a.d, n * a.e}; }
};

/// Componentwise a <= b.
inline bool leq(DimVector a, DimVector b) { return a.d <= b.d && a.e <= b.e; }
int gcd(DimVector D);
inline bool is_coprime(DimVector D) { return gcd(D) == 1; }

/// Euler form of the m-Kronecker quiver and its antisymmetrization.
class KroneckerForm {
public:
    explicit KroneckerForm(int m);

    int m() const noexcept { return m_; }
    long euler(DimVector a, DimVector b) const {
        return long(a.d) * b.d + long(a.e) * b.e - long(m_) * a.d * b.e;
    }
    /// {a, b} = <a, b> - <b, a> = m (b.d a.e - a.d b.e).
    long antisym(DimVector a, DimVector b) const { return euler(a, b) - euler(b, a); }
    /// 1 - <D, D>: dimension of the stable moduli space when nonempty.
    long moduli_dim(DimVector D) const { return 1 - euler(D, D); }
    /// 1 - <D^, D^> for D^ = (d, e, 1) on the quiver framed by one arrow into j.
    long framed_dim(DimVector D) const { return 1 - euler(D, D) - 1 + D.e; }

private:
    int m_;
};

inline long euler_form(int m, DimVector a, DimVector b) { return KroneckerForm(m).euler(a, b); }

/// Coefficient of x^D in A(x): v^(-<D,D>) / (prod_{i<=d} (1 - v^(-2i)) prod_{i<=e} (1 - v^(-2i))).
RatFunc a_coeff(int m, DimVector D);

/// Slope order by e/d, with (0, e) maximal. Both arguments must be nonzero.
std::weak_ordering slope_compare(DimVector a, DimVector b);
inline bool slope_less(DimVector a, DimVector b) { return slope_compare(a, b) < 0; }

/// Downward-closed set of dimension vectors, addressed through its bounding box.
class Region {
public:
    static Region triangle(int bound);          // d + e <= bound
    static Region box(int dmax, int emax);      // d <= dmax, e <= emax

    bool contains(DimVector D) const;
    std::size_t index(DimVector D) const;      // precondition: contains(D)
    const std::vector<DimVector>& points() const noexcept { return points_; }
    /// Triangle bound, or nullopt for boxes.
    std::optional<int> bound() const noexcept { return bound_; }
    int dmax() const noexcept { return dmax_; }
    int emax() const noexcept { return emax_; }

private:
    std::vector<DimVector> points_;
    std::vector<long> slot_;  // (dmax+1) x (emax+1), -1 when absent
    int dmax_ = 0;
    int emax_ = 0;
    std::optional<int> bound_;
};

/// Coefficients a_D of the semistable series A_s for every D in a region.
///
/// Entries are held as phi(D) * a_D, a Laurent polynomial over Z, where
/// phi(D) = prod_{i<=d} (1 - v^(-2i)) prod_{i<=e} (1 - v^(-2i)).
class MotiveTable {
public:
    MotiveTable(int m, Region region, std::vector<IntLaurent> normalized);

    int m() const noexcept { return m_; }
    const Region& region() const noexcept { return region_; }
    bool contains(DimVector D) const { return region_.contains(D); }

    const IntLaurent& normalized(DimVector D) const;
    /// a_D in lowest terms.
    RatFunc a(DimVector D) const;
    /// [K_D]_vir = (v - v^(-1)) a_D for coprime D, nullopt otherwise.
    std::optional<LaurentPoly> motive(DimVector D) const;

private:
    int m_;
    Region region_;
    std::vector<IntLaurent> normalized_;
};

/// phi(D) as above.
IntLaurent normalizer(DimVector D);

/// Solve the slope-ascending factorization of A(x) on a region.
MotiveTable hn_extract(int m, const Region& region);
inline MotiveTable hn_extract(int m, int bound) { return hn_extract(m, Region::triangle(bound)); }

/// [K_{d,e}^(m)]_vir for coprime (d, e). Throws NonCoprime otherwise.
LaurentPoly moduli_motive(const MotiveTable& table, DimVector D);
LaurentPoly moduli_motive(int m, DimVector D);

/// sum_n a_{n D0} t^n. Throws InsufficientBound if the table misses N D0.
Series ray_series(const MotiveTable& table, DimVector D0, int order);
Series ray_series(int m, DimVector D0, int order);

/// A(v^e0 t) / A(v^-e0 t) for the ray through D0 = (d0, e0): framed motives
/// of n D0 with one framing arrow into j.
Series framed_via_quotient(const MotiveTable& table, DimVector D0, int order);
Series framed_via_quotient(int m, DimVector D0, int order);

/// G^(k),+- : 1 + sum_{d>=1} [K_{d, kd +- 1}]_vir t^d.
PolySeries moduli_series(const MotiveTable& table, int k, int sign, int order);
/// Smallest box covering moduli_series(k, sign, order).
Region moduli_series_region(int k, int sign, int order);

/// [K_{d,e}] = [K_{e,d}] and, for e <= m d, [K_{d,e}] = [K_{md-e,d}] for
/// every coprime (d, e) with d + e <= bound.
Report verify_dualities(int m, int bound);

} // namespace kronmot
