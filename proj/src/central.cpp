#include "kronmot/central.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "kronmot/wallcross.hpp"

namespace kronmot {

namespace {

void require_central_m(int m) {
    if (m < 3) throw Error(ErrorKind::InvalidArgument, "central-slope formulas need m >= 3, got " + std::to_string(m));
}

void require_order(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
}

void require_k(int m, int k) {
    if (k < 1 || k > m - 1)
        throw Error(ErrorKind::InvalidArgument, "k must satisfy 1 <= k <= m-1 (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
}

IdentityCheck check(std::string name, int m, std::optional<int> k, int order, const PolySeries& lhs,
                    const PolySeries& rhs) {
    const auto bad = first_mismatch(lhs.truncated(order), rhs.truncated(order));
    return {std::move(name), m, k, order, !bad.has_value(), bad};
}

PolySeries product_of(std::vector<PolySeries> factors, int order) {
    PolySeries acc = PolySeries::one(order);
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

std::optional<PolySeries> try_poly(const Series& s, int& failed_at) {
    PolySeries out(s.order());
    for (int d = 0; d <= s.order(); ++d) {
        if (!s[d].is_polynomial()) {
            failed_at = d;
            return std::nullopt;
        }
        out[d] = s[d].num();
    }
    return out;
}

} // namespace

PolySeries shifted_product(int m, const PolySeries& F) {
    PolySeries acc = PolySeries::one(F.order());
    for (int i = 1; i <= m - 1; ++i) acc = acc * scale_arg(F, m - 2 * i);
    return acc;
}

PolySeries framed_recursion(int m, int order) {
    require_central_m(m);
    require_order(order);
    PolySeries F = PolySeries::one(order);
    for (int d = 1; d <= order; ++d) {
        // Only coefficients below d enter [t^(d-1)] of the product.
        const PolySeries known = F.truncated(d - 1);
        const LaurentPoly inner = shifted_product(m, known)[d - 1];
        const LaurentPoly scaled = quantum_integer((m - 1) * d + 1) * inner;
        auto q = divide_exact(scaled, quantum_integer(d));
        if (!q)
            throw Error(ErrorKind::ExactDivisionFailure,
                        "recursion prefactor does not divide at d=" + std::to_string(d) + ", m=" + std::to_string(m));
        F[d] = *std::move(q);
    }
    return F;
}

PolySeries functional_eq_rhs(int m, const PolySeries& F) {
    const int order = F.order();
    const PolySeries t = PolySeries::variable(order);
    PolySeries acc = PolySeries::one(order);
    for (int i = 1; i <= m; ++i) {
        PolySeries inner = PolySeries::one(order);
        for (int j = 1; j <= m - 2; ++j) inner = inner * scale_arg(F, 2 * i - 2 * j - 2);
        PolySeries term = t * inner;
        for (int d = 0; d <= order; ++d) term[d] = term[d].shifted(2 * i - m - 1);
        acc = acc * series_inv(PolySeries::one(order) - term);
    }
    return acc;
}

PolySeries solve_functional_eq(int m, int order) {
    require_central_m(m);
    require_order(order);
    PolySeries F = PolySeries::one(order);
    // Each pass fixes at least one more coefficient (every F on the right
    // carries an extra factor t), so order + 1 passes reach the fixed point.
    for (int pass = 0; pass <= order; ++pass) F = functional_eq_rhs(m, F);
    if (!(functional_eq_rhs(m, F) == F))
        throw Error(ErrorKind::NoConvergence, "functional equation iteration did not stabilize");
    return F;
}

PolySeries extract_G(int m, const PolySeries& F) {
    require_central_m(m);
    if (!(F[0] == LaurentPoly::one())) throw Error(ErrorKind::InvalidArgument, "extract_G needs F(0) = 1");
    return delta_invert(multiply_by_t(shifted_product(m, F)));
}

CentralSeriesPair compute_central(int m, int order) {
    PolySeries F = framed_recursion(m, order);
    PolySeries G = extract_G(m, F);
    return {m, order, std::move(F), std::move(G)};
}

Report verify_main_theorem(int m, int order) {
    require_central_m(m);
    require_order(order);
    const PolySeries F = framed_recursion(m, order);
    const MotiveTable table = hn_extract(m, moduli_series_region(1, -1, order));
    const PolySeries G = moduli_series(table, 1, -1, order);
    Report r;
    r.push_back(check("maintheorem.nabla", m, std::nullopt, order, F, nabla_op(G, m - 1)));
    r.push_back(check("maintheorem.delta", m, std::nullopt, order, delta_op(G), multiply_by_t(shifted_product(m, F))));
    return r;
}

Report verify_vdifference(int m, int order) {
    require_central_m(m);
    require_order(order);
    const PolySeries F = framed_recursion(m, order);
    const PolySeries rhs = nabla_op(multiply_by_t(shifted_product(m, F)), m - 1);
    return {check("vdifference", m, std::nullopt, order, delta_op(F), rhs)};
}

Report verify_funceq(int m, int order) {
    require_central_m(m);
    require_order(order);
    const PolySeries F = framed_recursion(m, order);
    return {check("funceq", m, std::nullopt, order, F, functional_eq_rhs(m, F))};
}

Report verify_eqnew(int m, int order) {
    require_order(order);
    const MotiveTable table = hn_extract(m, Region::box(order + 1, order + 1));
    const PolySeries plus = moduli_series(table, 1, +1, order);
    const PolySeries minus = moduli_series(table, 1, -1, order + 1);
    return {check("eqnew", m, std::nullopt, order, plus, divide_by_t(minus))};
}

Report verify_corident(int m, int k, int order) {
    require_k(m, k);
    require_order(order);
    const int reach = std::max(k, m - k) * order + 1;
    const MotiveTable table = hn_extract(m, Region::box(order, reach));

    Report r;
    const Series Ak = ray_series(table, {1, k}, order);
    const Series Amk = ray_series(table, {1, m - k}, order);
    const auto bad1 = first_mismatch(Ak, Amk);
    r.push_back({"corident.1", m, k, order, !bad1, bad1});

    const PolySeries G_minus = moduli_series(table, k, -1, order);
    const PolySeries G_plus_dual = moduli_series(table, m - k, +1, order);
    const PolySeries via_nabla = nabla_op(G_plus_dual, m - k);

    int failed_at = -1;
    const auto quotient = try_poly(framed_via_quotient(table, {1, k}, order), failed_at);

    // Reference for F^(k) that avoids the quotient formula: the recursion for
    // k = 1, the shifted product of F for k = m-1, else the projective-bundle
    // route through G^(m-k),+.
    PolySeries reference = via_nabla;
    if (m >= 3 && k == 1) reference = framed_recursion(m, order);
    else if (m >= 3 && k == m - 1) reference = shifted_product(m, framed_recursion(m, order));

    if (quotient) {
        r.push_back(check("corident.2", m, k, order, *quotient, reference));
    } else {
        r.push_back({"corident.2", m, k, order, false, failed_at});
    }
    r.push_back(check("corident.3", m, k, order, G_minus, G_plus_dual));
    if (quotient) {
        r.push_back(check("corident.4", m, k, order, *quotient, via_nabla));
    } else {
        r.push_back({"corident.4", m, k, order, false, failed_at});
    }
    return r;
}

Report verify_newduality(int m, int k, int order) {
    require_k(m, k);
    require_order(order);
    const MotiveTable table = hn_extract(m, Region::box(order, k * order + 1));
    const PolySeries G_minus = moduli_series(table, k, -1, order);
    const PolySeries G_plus = moduli_series(table, k, +1, order);

    std::vector<PolySeries> left, right;
    for (int i = 1; i <= m - k; ++i) left.push_back(nabla_op(scale_arg(G_minus, (m + 1 - k - 2 * i) * k), m - k));
    for (int i = 1; i <= k; ++i) right.push_back(nabla_op(scale_arg(G_plus, (m - k) * (k + 1 - 2 * i)), k));
    return {check("newduality", m, k, order, product_of(left, order), product_of(right, order))};
}

} // namespace kronmot
