#pragma once

#include "kronmot/report.hpp"
#include "kronmot/series.hpp"

namespace kronmot {

/// F(t) = 1 + sum [K_{d,d}^(m),fr]_vir t^d and G(t) = 1 + sum [K_{d,d-1}^(m)]_vir t^d.
/// F is known to `order`, G to `order + 1` (G's t^d coefficient only needs F
/// up to t^(d-1)).
struct CentralSeriesPair {
    int m = 0;
    int order = 0;
    PolySeries F;
    PolySeries G;
};

/// m_0 = 1, m_d = [(m-1)d+1]_v / [d]_v * [t^(d-1)] prod_{i=1}^{m-1} F(v^(m-2i) t).
PolySeries framed_recursion(int m, int order);

/// Fixed point of F = prod_{i=1}^m (1 - v^(2i-m-1) t prod_{j=1}^{m-2} F(v^(2i-2j-2) t))^(-1).
PolySeries solve_functional_eq(int m, int order);

/// Right-hand side of the functional equation evaluated at F.
PolySeries functional_eq_rhs(int m, const PolySeries& F);

/// prod_{i=1}^{m-1} F(v^(m-2i) t).
PolySeries shifted_product(int m, const PolySeries& F);

/// G with Delta G = t prod_{i=1}^{m-1} F(v^(m-2i) t), G(0) = 1. Result has order F.order() + 1.
PolySeries extract_G(int m, const PolySeries& F);

CentralSeriesPair compute_central(int m, int order);

/// F = Nabla^(m-1) G and Delta G = t prod F(v^(m-2i) t), with F from the
/// recursion and G from the wall-crossing table.
Report verify_main_theorem(int m, int order);
/// Delta F = Nabla^(m-1)(t prod F(v^(m-2i) t)).
Report verify_vdifference(int m, int order);
/// F from the recursion is a fixed point of the functional equation.
Report verify_funceq(int m, int order);
/// G^(1),+ = (G^(1),- - 1) / t.
Report verify_eqnew(int m, int order);
/// The four series identities relating A^(k), F^(k) and G^(k),+-.
Report verify_corident(int m, int k, int order);
/// prod_{i=1}^{m-k} Nabla^(m-k) G^(k),-(v^((m+1-k-2i)k) t) = prod_{i=1}^{k} Nabla^(k) G^(k),+(v^((m-k)(k+1-2i)) t).
Report verify_newduality(int m, int k, int order);

} // namespace kronmot
