#include <doctest.h>

#include "kronmot/json_io.hpp"
#include "kronmot/polygcd.hpp"
#include "support.hpp"

using namespace kronmot;
using testing::L;
using testing::v;

namespace {
const LaurentPoly v_minus_vinv = v(1) - v(-1);
}

TEST_CASE("parse_rational canonicalizes and rejects junk") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("+3"), Error);
    CHECK_THROWS_AS(parse_rational("3/-4"), Error);
}

TEST_CASE("binomial") {
    CHECK(binomial(14, 2) == 91);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("Laurent canonical form") {
    const LaurentPoly p = L(-3, {0, 0, 1, 2, 0});
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 0);
    CHECK(p.size() == 2);
    const LaurentPoly z = L(5, {0, 0});
    CHECK(z.is_zero());
    CHECK(z.min_exp() == 0);
    CHECK(p - p == LaurentPoly());
}

TEST_CASE("quantum_integer examples") {
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == LaurentPoly::one());
    CHECK(quantum_integer(2) == v(1) + v(-1));
    CHECK(quantum_integer(3) == v(2) + LaurentPoly::one() + v(-2));
    CHECK_THROWS_AS(quantum_integer(-1), Error);
}

TEST_CASE("quantum_integer properties up to 50") {
    for (int n = 0; n <= 50; ++n) {
        CHECK(quantum_integer(n) * v_minus_vinv == v(n) - v(-n));
        CHECK(eval_at_one(quantum_integer(n)) == n);
        CHECK(is_palindromic(quantum_integer(n)));
    }
}

TEST_CASE("ratfunc_arith examples") {
    const RatFunc x(v_minus_vinv);
    CHECK(ratfunc_arith(RatFunc(LaurentPoly::one(), v_minus_vinv), x, ArithOp::mul) == RatFunc(1));
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const RatFunc r = testing::random_ratfunc(rng);
        CHECK(ratfunc_arith(r, -r, ArithOp::add).is_zero());
    }
    const RatFunc a(v(2) - LaurentPoly::one(), v(1));
    CHECK(ratfunc_arith(a, x, ArithOp::div) == RatFunc(1));
    CHECK_THROWS_AS(ratfunc_arith(a, RatFunc(), ArithOp::div), Error);
}

TEST_CASE("RatFunc normal form") {
    // (v^2 - 1)/(2v^3 - 2v) = 1/(2v).
    const RatFunc r(v(2) - LaurentPoly::one(), L(1, {-2, 0, 2}));
    CHECK(r.den().is_one());
    CHECK(r.num() == LaurentPoly::monomial(-1, make_rational(1, 2)));
    // Denominator starts at v^0 with coefficient 1.
    const RatFunc s(LaurentPoly::one(), L(2, {3, 0, 6}));
    CHECK(s.den().min_exp() == 0);
    CHECK(s.den().lowest() == 1);
    CHECK(s.num() == LaurentPoly::monomial(-2, make_rational(1, 3)));
    CHECK(s * RatFunc(L(2, {3, 0, 6})) == RatFunc(1));
    CHECK_THROWS_AS(RatFunc(LaurentPoly::one(), LaurentPoly()), Error);
}

TEST_CASE("RatFunc field axioms on random inputs") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const RatFunc a = testing::random_ratfunc(rng);
        const RatFunc b = testing::random_ratfunc(rng);
        const RatFunc c = testing::random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    }
}

TEST_CASE("to_laurent examples") {
    CHECK(to_laurent(RatFunc(v(2) - v(-2), v_minus_vinv)) == v(1) + v(-1));
    CHECK(to_laurent(RatFunc(1)) == LaurentPoly::one());
    CHECK(to_laurent(RatFunc(v(3) - v(-3), v_minus_vinv)) == quantum_integer(3));
    try {
        (void)to_laurent(RatFunc(LaurentPoly::one(), v_minus_vinv));
        FAIL("expected NonPolynomial");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPolynomial);
    }
}

TEST_CASE("to_laurent round trip") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly p = testing::random_laurent(rng);
        CHECK(to_laurent(RatFunc(p)) == p);
    }
}

TEST_CASE("eval_at_one and is_palindromic examples") {
    CHECK(eval_at_one(quantum_integer(3)) == 3);
    CHECK(eval_at_one(LaurentPoly()) == 0);
    CHECK(eval_at_one(testing::table({1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1})) == 68);
    CHECK(is_palindromic(quantum_integer(3)));
    CHECK_FALSE(is_palindromic(v(1)));
    CHECK(is_palindromic(LaurentPoly()));
}

TEST_CASE("divide_exact") {
    const LaurentPoly q = quantum_integer(5);
    auto r = divide_exact(q * quantum_integer(3), quantum_integer(3));
    REQUIRE(r);
    CHECK(*r == q);
    CHECK_FALSE(divide_exact(q, quantum_integer(2)));
    const IntLaurent a = (q * quantum_integer(4)).cast<BigInt>();
    auto ri = divide_exact(a, quantum_integer<BigInt>(4));
    REQUIRE(ri);
    CHECK(*ri == q.cast<BigInt>());
    // 2 does not divide 1 over the integers.
    CHECK_FALSE(divide_exact(IntLaurent::one(), IntLaurent(BigInt(2))));
}

TEST_CASE("heuristic gcd agrees with primitive PRS") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 5);
    auto random_poly = [&] {
        poly::IntPoly p;
        for (int i = deg(rng); i >= 0; --i) p.push_back(coeff(rng));
        if (p.back() == 0) p.back() = 1;
        return p;
    };
    auto mul = [](const poly::IntPoly& a, const poly::IntPoly& b) {
        poly::IntPoly r(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    for (int i = 0; i < 80; ++i) {
        const poly::IntPoly g = random_poly();
        const poly::IntPoly a = mul(g, random_poly());
        const poly::IntPoly b = mul(g, random_poly());
        const poly::IntPoly h = poly::gcd(a, b);
        CHECK(h == poly::gcd_prs(a, b));
        poly::IntPoly q;
        CHECK(poly::divide_exact(a, h, q));
        CHECK(poly::divide_exact(b, h, q));
        // The common factor divides the gcd.
        CHECK(poly::divide_exact(h, poly::primitive_part(g), q));
    }
}

TEST_CASE("LaurentPoly and RatFunc JSON round trip") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const LaurentPoly p = testing::random_laurent(rng);
        CHECK(laurent_from_json(to_json(p)) == p);
        CHECK(to_json(laurent_from_json(to_json(p))).dump() == to_json(p).dump());
        const RatFunc r = testing::random_ratfunc(rng);
        CHECK(ratfunc_from_json(to_json(r)) == r);
        CHECK(to_json(ratfunc_from_json(to_json(r))).dump() == to_json(r).dump());
    }
    const Json j = to_json(L(-1, {1, 0, 2}));
    CHECK(j.dump() == R"({"min_exp":-1,"coeffs":["1","0","2"]})");
    // Non-canonical input is canonicalized.
    const Json loose = Json::parse(R"({"min_exp":-3,"coeffs":["0","2/4","0"]})");
    CHECK(to_json(laurent_from_json(loose)).dump() == R"({"min_exp":-2,"coeffs":["1/2"]})");
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"coeffs":[]})")), Error);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"min_exp":0,"coeffs":["x"]})")), Error);
}
