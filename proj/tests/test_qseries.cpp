#include <doctest.h>

#include "kronmot/json_io.hpp"
#include "support.hpp"

using namespace kronmot;
using testing::L;
using testing::v;

namespace {

Series poly(int order, std::vector<LaurentPoly> c) {
    Series s(order);
    for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s[static_cast<int>(i)] = RatFunc(c[i]);
    return s;
}

const LaurentPoly one = LaurentPoly::one();

} // namespace

TEST_CASE("series_mul examples") {
    const Series a = poly(2, {one, one});
    const Series b = poly(2, {one, -one});
    CHECK(a * b == poly(2, {one, LaurentPoly(), -one}));
    std::mt19937 rng(3);
    const Series r = testing::random_series(rng, 4);
    CHECK(r * Series::one(4) == r);
    const LaurentPoly q3 = quantum_integer(3);
    const Series c = poly(2, {one, q3});
    CHECK(c * c == poly(2, {one, q3 * LaurentPoly(BigRational(2)), q3 * q3}));
}

TEST_CASE("binary operations truncate to the smaller order") {
    const Series a = poly(5, {one, one, one});
    const Series b = poly(2, {one, one});
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK((a - b).order() == 2);
    CHECK(a.truncated(2).order() == 2);
    CHECK_THROWS_AS(b.truncated(3), Error);
}

TEST_CASE("series_inv examples") {
    const int N = 6;
    Series geometric(N);
    for (int d = 0; d <= N; ++d) geometric[d] = RatFunc(1);
    CHECK(series_inv(poly(N, {one, -one})) == geometric);
    CHECK(series_inv(Series::one(3)) == Series::one(3));
    // (1 - v^-2 t)(1 - t)(1 - v^2 t) at order 1.
    const Series f = poly(1, {one, -v(-2)}) * poly(1, {one, -one}) * poly(1, {one, -v(2)});
    CHECK(series_inv(f) == poly(1, {one, quantum_integer(3)}));
    CHECK_THROWS_AS(series_inv(poly(2, {LaurentPoly(), one})), Error);
    std::mt19937 rng(17);
    for (int i = 0; i < 5; ++i) {
        Series r = testing::random_series(rng, 4);
        if (r[0].is_zero()) r[0] = RatFunc(1);
        CHECK(r * series_inv(r) == Series::one(4));
    }
}

TEST_CASE("scale_arg examples") {
    CHECK(scale_arg(poly(1, {one, one}), 2) == poly(1, {one, v(2)}));
    std::mt19937 rng(8);
    const Series a = testing::random_series(rng, 5);
    CHECK(scale_arg(a, 0) == a);
    for (int p = -3; p <= 3; ++p) CHECK(scale_arg(scale_arg(a, p), -p) == a);
}

TEST_CASE("delta_op and nabla_op examples") {
    CHECK(delta_op(Series::one(3)) == Series(3));
    CHECK(delta_op(Series::variable(3)) == Series::variable(3));
    CHECK(delta_op(poly(2, {LaurentPoly(), LaurentPoly(), one})) ==
          poly(2, {LaurentPoly(), LaurentPoly(), v(1) + v(-1)}));
    for (int k = 0; k <= 4; ++k) CHECK(nabla_op(Series::one(3), k) == Series::one(3));
    const Series t = Series::variable(2);
    CHECK(nabla_op(t, 2) == poly(2, {LaurentPoly(), quantum_integer(3)}));
    std::mt19937 rng(13);
    const Series a = testing::random_series(rng, 5);
    CHECK(nabla_op(a, 0) == a);
}

TEST_CASE("delta_invert examples") {
    CHECK(delta_invert(Series(4)) == Series::one(4));
    CHECK(delta_invert(Series::variable(4)) == poly(4, {one, one}));
    std::mt19937 rng(21);
    Series g = testing::random_series(rng, 5);
    g[0] = RatFunc(1);
    CHECK(delta_invert(delta_op(g)) == g);
    CHECK_THROWS_AS(delta_invert(Series::one(2)), Error);
    try {
        (void)delta_invert(Series::one(2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonZeroConstant);
    }
}

TEST_CASE("delta and nabla commute to order 12") {
    std::mt19937 rng(31);
    for (int k = 0; k <= 4; ++k) {
        const Series a = testing::random_series(rng, 12);
        CHECK(delta_op(nabla_op(a, k)) == nabla_op(delta_op(a), k));
    }
}

TEST_CASE("delta and nabla are linear") {
    std::mt19937 rng(41);
    for (int i = 0; i < 5; ++i) {
        const Series a = testing::random_series(rng, 6);
        const Series b = testing::random_series(rng, 6);
        CHECK(delta_op(a + b) == delta_op(a) + delta_op(b));
        CHECK(nabla_op(a + b, i) == nabla_op(a, i) + nabla_op(b, i));
    }
}

TEST_CASE("delta_op equals the difference quotient of two substitutions") {
    std::mt19937 rng(51);
    const RatFunc inv = RatFunc(LaurentPoly::one(), v(1) - v(-1));
    for (int i = 0; i < 5; ++i) {
        const Series a = testing::random_series(rng, 7);
        const Series diff = scale_arg(a, 1) - scale_arg(a, -1);
        Series quotient(diff.order());
        for (int d = 0; d <= diff.order(); ++d) quotient[d] = diff[d] * inv;
        CHECK(delta_op(a) == quotient);
    }
}

TEST_CASE("delta specializes to the derivative at v = 1") {
    std::mt19937 rng(61);
    for (int i = 0; i < 10; ++i) {
        const PolySeries a = testing::random_poly_series(rng, 8);
        const PolySeries da = delta_op(a);
        // (1/t) delta(a) at v = 1 versus d/dt of a at v = 1.
        for (int d = 0; d < 8; ++d) CHECK(eval_at_one(da[d + 1]) == BigRational(d + 1) * eval_at_one(a[d + 1]));
        CHECK(divide_by_t(da).order() == 7);
        CHECK(multiply_by_t(divide_by_t(da)) == da);
    }
}

TEST_CASE("Series JSON round trip") {
    std::mt19937 rng(71);
    const Series s = testing::random_series(rng, 4);
    const Json j = to_json(s);
    CHECK(series_from_json(j) == s);
    CHECK(to_json(series_from_json(j)).dump() == j.dump());
    CHECK(j.at("order") == 4);
    CHECK(j.at("coeffs").size() == 5);
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":2,"coeffs":[]})")), Error);
}

TEST_CASE("first_mismatch reports the lowest differing degree") {
    Series a = Series::one(4);
    Series b = Series::one(4);
    CHECK_FALSE(first_mismatch(a, b));
    b[3] = RatFunc(2);
    b[4] = RatFunc(2);
    REQUIRE(first_mismatch(a, b));
    CHECK(*first_mismatch(a, b) == 3);
}
