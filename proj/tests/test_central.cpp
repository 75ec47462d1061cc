#include <doctest.h>

#include "kronmot/central.hpp"
#include "kronmot/wallcross.hpp"
#include "support.hpp"

using namespace kronmot;
using testing::table;

namespace {

const std::vector<std::vector<long>> framed_tables = {
    {1},
    {1, 1, 1},
    {1, 2, 3, 3, 3, 2, 1},
    {1, 2, 5, 8, 11, 12, 13, 12, 11, 8, 5, 2, 1},
    {1, 2, 5, 10, 18, 28, 40, 50, 58, 62, 64, 62, 58, 50, 40, 28, 18, 10, 5, 2, 1},
};

// m_d straight from the composition sum, with the prefactor divided last.
PolySeries recursion_oracle(int m, int order) {
    PolySeries F(order);
    F[0] = LaurentPoly::one();
    for (int d = 1; d <= order; ++d) {
        LaurentPoly sum;
        std::vector<int> parts(static_cast<std::size_t>(m - 1), 0);
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i + 1 == parts.size()) {
                parts[i] = left;
                long exp = 0;
                LaurentPoly term = LaurentPoly::one();
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    exp += long(m - 2 * static_cast<int>(j + 1)) * parts[j];
                    term *= F[parts[j]];
                }
                sum += term.shifted(static_cast<int>(exp));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                parts[i] = x;
                self(self, i + 1, left - x);
            }
        };
        rec(rec, 0, d - 1);
        auto q = divide_exact(quantum_integer((m - 1) * d + 1) * sum, quantum_integer(d));
        REQUIRE(q);
        F[d] = *q;
    }
    return F;
}

void check_shape(const LaurentPoly& p, long dim) {
    CHECK(is_palindromic(p));
    CHECK(has_nonnegative_integer_coeffs(p));
    CHECK(p.min_exp() == -dim);
    CHECK(p.max_exp() == dim);
}

} // namespace

TEST_CASE("framed_recursion examples") {
    const PolySeries F = framed_recursion(3, 4);
    for (int d = 0; d <= 4; ++d) CHECK(F[d] == table(framed_tables[static_cast<std::size_t>(d)]));
    CHECK_THROWS_AS(framed_recursion(2, 3), Error);
    CHECK_THROWS_AS(framed_recursion(3, -1), Error);
}

TEST_CASE("framed_recursion matches the direct composition sum") {
    for (int m = 3; m <= 6; ++m) CHECK(framed_recursion(m, 5) == recursion_oracle(m, 5));
}

TEST_CASE("solve_functional_eq examples") {
    CHECK(solve_functional_eq(3, 0) == PolySeries::one(0));
    const PolySeries one = solve_functional_eq(3, 1);
    CHECK(one[1] == quantum_integer(3));
    const PolySeries F = solve_functional_eq(3, 4);
    for (int d = 0; d <= 4; ++d) CHECK(F[d] == table(framed_tables[static_cast<std::size_t>(d)]));
    const PolySeries G = solve_functional_eq(4, 5);
    CHECK(functional_eq_rhs(4, G) == G);
}

TEST_CASE("extract_G examples") {
    const PolySeries G = extract_G(3, framed_recursion(3, 5));
    CHECK(G.order() == 6);
    CHECK(G[0] == LaurentPoly::one());
    CHECK(G[1] == LaurentPoly::one());
    CHECK(G[2] == table({1, 1, 1}));
    CHECK(G[5] == table({1, 1, 3, 5, 10, 14, 23, 30, 41, 46, 51, 46, 41, 30, 23, 14, 10, 5, 3, 1, 1}));
    PolySeries bad = PolySeries::one(2);
    bad[0] = LaurentPoly(BigRational(2));
    CHECK_THROWS_AS(extract_G(3, bad), Error);
}

TEST_CASE("G coefficients are the moduli motives at slope (d-1)/d") {
    for (int m = 3; m <= 5; ++m) {
        const PolySeries G = extract_G(m, framed_recursion(m, 5));
        const MotiveTable t = hn_extract(m, Region::box(6, 5));
        for (int d = 1; d <= 6; ++d) CHECK(G[d] == moduli_motive(t, {d, d - 1}));
    }
}

TEST_CASE("compute_central invariants") {
    for (int m = 3; m <= 5; ++m) {
        const CentralSeriesPair c = compute_central(m, 6);
        const KroneckerForm f(m);
        CHECK(c.F[0] == LaurentPoly::one());
        CHECK(c.G[0] == LaurentPoly::one());
        for (int d = 1; d <= 6; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            CHECK(c.F[d] == quantum_integer((m - 1) * d + 1) * c.G[d]);
            check_shape(c.F[d], long(m) * d * d + d - 2L * d * d);
            check_shape(c.G[d], f.moduli_dim({d, d - 1}));
        }
    }
    CHECK(compute_central(3, 2).F[2] == table(framed_tables[2]));
}

TEST_CASE("verify_main_theorem") {
    CHECK(all_pass(verify_main_theorem(3, 4)));
    CHECK(all_pass(verify_main_theorem(4, 3)));
    CHECK(all_pass(verify_main_theorem(3, 0)));
    const Report r = verify_main_theorem(3, 2);
    REQUIRE(r.size() == 2);
    CHECK(r[0].m == 3);
    CHECK(r[0].order == 2);
    CHECK_FALSE(r[0].k);
}

TEST_CASE("verify_vdifference") {
    CHECK(all_pass(verify_vdifference(3, 6)));
    CHECK(all_pass(verify_vdifference(5, 4)));
    for (int m = 3; m <= 6; ++m) CHECK(all_pass(verify_vdifference(m, 0)));
}

TEST_CASE("verify_funceq and verify_eqnew") {
    CHECK(all_pass(verify_funceq(3, 0)));
    CHECK(all_pass(verify_funceq(5, 5)));
    CHECK(all_pass(verify_eqnew(3, 5)));
    CHECK(all_pass(verify_eqnew(5, 4)));
}

TEST_CASE("verify_corident") {
    const Report r = verify_corident(3, 1, 4);
    CHECK(r.size() == 4);
    CHECK(all_pass(r));
    CHECK(all_pass(verify_corident(4, 2, 3)));
    CHECK(all_pass(verify_corident(3, 2, 0)));
    CHECK(all_pass(verify_corident(5, 2, 3)));
    for (const auto& c : r) CHECK(c.k == 1);
    CHECK_THROWS_AS(verify_corident(3, 3, 2), Error);
    CHECK_THROWS_AS(verify_corident(3, 0, 2), Error);
}

TEST_CASE("verify_newduality") {
    CHECK(all_pass(verify_newduality(3, 1, 4)));
    CHECK(all_pass(verify_newduality(4, 1, 3)));
    CHECK(all_pass(verify_newduality(2, 1, 2)));
    CHECK(all_pass(verify_newduality(5, 3, 3)));
    CHECK_THROWS_AS(verify_newduality(4, 4, 2), Error);
}

TEST_CASE("central module rejects m < 3") {
    for (int m = 1; m <= 2; ++m) {
        CHECK_THROWS_AS(solve_functional_eq(m, 2), Error);
        CHECK_THROWS_AS(verify_main_theorem(m, 2), Error);
    }
}
