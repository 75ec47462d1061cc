#include <doctest.h>

#include <map>

#include "kronmot/json_io.hpp"
#include "kronmot/wallcross.hpp"
#include "support.hpp"

using namespace kronmot;
using testing::table;
using testing::v;

namespace {

// Reference solution of the ordered-product equation: every a_D is a_coeff(D)
// minus the sum over compositions D = D_1 + ... + D_r (r >= 2) with strictly
// ascending slopes of v^(sum_{k<l} {D_k, D_l}) prod a_{D_k}.
class DecompositionOracle {
public:
    DecompositionOracle(int m, int bound) : form_(m), m_(m) {
        for (int s = 0; s <= bound; ++s)
            for (int d = 0; d <= s; ++d) {
                const DimVector D{d, s - d};
                if (D.is_zero()) {
                    a_[D] = RatFunc(1);
                    continue;
                }
                // Full sum over compositions with r >= 1 minus the r = 1 term.
                RatFunc longer;
                for (const DimVector P : parts_below(D))
                    if (P != D) longer += a_.at(P) * twist(P, D - P) * tail(D - P, P);
                a_[D] = a_coeff(m_, D) - longer;
            }
    }

    const RatFunc& a(DimVector D) const { return a_.at(D); }

private:
    static std::vector<DimVector> parts_below(DimVector D) {
        std::vector<DimVector> out;
        for (int d = 0; d <= D.d; ++d)
            for (int e = 0; e <= D.e; ++e)
                if (d || e) out.push_back({d, e});
        return out;
    }

    RatFunc twist(DimVector A, DimVector B) const { return RatFunc(LaurentPoly::monomial(static_cast<int>(form_.antisym(A, B)))); }

    // Sum over ascending compositions of R whose first slope exceeds slope(last).
    RatFunc tail(DimVector R, DimVector last) {
        const auto key = std::make_pair(R, last);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        RatFunc sum;
        for (const DimVector P : parts_below(R)) {
            if (!slope_less(last, P)) continue;
            if (P == R) sum += a_.at(P);
            else sum += a_.at(P) * twist(P, R - P) * tail(R - P, P);
        }
        memo_.emplace(key, sum);
        return sum;
    }

    KroneckerForm form_;
    int m_;
    std::map<DimVector, RatFunc> a_;
    std::map<std::pair<DimVector, DimVector>, RatFunc> memo_;
};

const LaurentPoly v_minus_vinv = v(1) - v(-1);

} // namespace

TEST_CASE("euler_form examples") {
    CHECK(euler_form(3, {2, 1}, {2, 1}) == -1);
    for (int m = 1; m <= 5; ++m) CHECK(euler_form(m, {1, 0}, {1, 0}) == 1);
    CHECK(euler_form(3, {1, 1}, {1, 1}) == -1);
    const KroneckerForm f(3);
    CHECK(f.antisym({1, 0}, {0, 1}) == -3);
    CHECK(f.antisym({0, 1}, {1, 0}) == 3);
    CHECK(f.moduli_dim({2, 1}) == 2);
    CHECK_THROWS_AS(KroneckerForm(0), Error);
}

TEST_CASE("a_coeff examples") {
    CHECK(a_coeff(3, {0, 0}) == RatFunc(1));
    CHECK(a_coeff(3, {1, 0}) == RatFunc(LaurentPoly::one(), v_minus_vinv));
    const LaurentPoly one_minus = LaurentPoly::one() - v(-2);
    CHECK(a_coeff(3, {1, 1}) == RatFunc(v(1), one_minus * one_minus));
}

TEST_CASE("slope ordering") {
    CHECK(slope_less({1, 0}, {1, 1}));
    CHECK(slope_compare({1, 1}, {2, 2}) == std::weak_ordering::equivalent);
    CHECK(slope_less({1, 2}, {0, 1}));
    CHECK_FALSE(slope_less({0, 1}, {0, 3}));
    CHECK_THROWS_AS(slope_compare({0, 0}, {1, 0}), Error);
}

TEST_CASE("regions") {
    const Region t = Region::triangle(3);
    CHECK(t.points().size() == 10);
    CHECK(t.contains({1, 2}));
    CHECK_FALSE(t.contains({2, 2}));
    const Region b = Region::box(2, 1);
    CHECK(b.points().size() == 6);
    CHECK(b.contains({2, 1}));
    CHECK_FALSE(b.contains({0, 2}));
    // Ordered by total degree so that every point follows its predecessors.
    for (std::size_t i = 1; i < t.points().size(); ++i)
        CHECK(t.points()[i - 1].d + t.points()[i - 1].e <= t.points()[i].d + t.points()[i].e);
}

TEST_CASE("hn_extract agrees with the decomposition oracle") {
    for (const auto& [m, bound] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 6}, {4, 5}}) {
        CAPTURE(m);
        const DecompositionOracle oracle(m, bound);
        const MotiveTable t = hn_extract(m, bound);
        for (const DimVector D : t.region().points()) {
            CAPTURE(D.d);
            CAPTURE(D.e);
            CHECK(t.a(D) == oracle.a(D));
        }
    }
}

TEST_CASE("hn_extract examples") {
    const MotiveTable t = hn_extract(3, 6);
    CHECK(t.a({0, 0}) == RatFunc(1));
    CHECK(t.a({1, 0}) == RatFunc(LaurentPoly::one(), v_minus_vinv));
    CHECK(to_laurent(t.a({2, 1}) * RatFunc(v_minus_vinv)) == table({1, 1, 1}));
    CHECK(to_laurent(t.a({3, 2}) * RatFunc(v_minus_vinv)) == table({1, 1, 3, 3, 3, 1, 1}));
    CHECK_THROWS_AS(t.normalized({7, 0}), Error);
}

TEST_CASE("box and triangle regions give the same coefficients") {
    const MotiveTable tri = hn_extract(3, 7);
    const MotiveTable box = hn_extract(3, Region::box(4, 3));
    for (const DimVector D : box.region().points()) CHECK(box.a(D) == tri.a(D));
}

TEST_CASE("a_D equals a_coeff when D admits no ascending two-part split") {
    for (int m = 1; m <= 4; ++m) {
        const MotiveTable t = hn_extract(m, 6);
        for (const DimVector D : t.region().points()) {
            if (D.is_zero()) {
                CHECK(t.a(D) == RatFunc(1));
                continue;
            }
            bool splits = false;
            for (int d = 0; d <= D.d && !splits; ++d)
                for (int e = 0; e <= D.e && !splits; ++e) {
                    const DimVector P{d, e};
                    if (P.is_zero() || P == D) continue;
                    splits = slope_less(P, D - P);
                }
            if (!splits) CHECK(t.a(D) == a_coeff(m, D));
        }
    }
}

TEST_CASE("moduli_motive examples") {
    CHECK(moduli_motive(3, {1, 0}) == LaurentPoly::one());
    CHECK(moduli_motive(3, {4, 3}) == table({1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1}));
    CHECK(moduli_motive(3, {5, 4}) ==
          table({1, 1, 3, 5, 10, 14, 23, 30, 41, 46, 51, 46, 41, 30, 23, 14, 10, 5, 3, 1, 1}));
    CHECK(moduli_motive(3, {1, 1}) == quantum_integer(3));
    try {
        (void)moduli_motive(3, {2, 2});
        FAIL("expected NonCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonCoprime);
    }
    // Non-coprime coefficients are not polynomial after the constant.
    const MotiveTable t = hn_extract(3, 4);
    CHECK_FALSE(t.motive({2, 2}));
}

TEST_CASE("moduli motives have the expected shape") {
    for (const auto& [m, bound] : std::vector<std::pair<int, int>>{{2, 10}, {3, 11}, {4, 9}, {5, 8}}) {
        const KroneckerForm f(m);
        const MotiveTable t = hn_extract(m, bound);
        for (const DimVector D : t.region().points()) {
            if (D.is_zero() || !is_coprime(D)) continue;
            CAPTURE(m);
            CAPTURE(D.d);
            CAPTURE(D.e);
            const LaurentPoly p = moduli_motive(t, D);
            const long dim = f.moduli_dim(D);
            if (dim < 0) {
                CHECK(p.is_zero());
                continue;
            }
            CHECK(is_palindromic(p));
            CHECK(has_nonnegative_integer_coeffs(p));
            CHECK(p.min_exp() == -dim);
            CHECK(p.max_exp() == dim);
            for (int e = p.min_exp() + 1; e < p.max_exp(); e += 2) CHECK(p.coeff(e) == 0);
        }
    }
}

TEST_CASE("ray_series") {
    const Series A = ray_series(3, {1, 1}, 3);
    CHECK(A[0] == RatFunc(1));
    CHECK(ray_series(3, {1, 0}, 2)[1] == RatFunc(LaurentPoly::one(), v_minus_vinv));
    const MotiveTable small = hn_extract(3, 3);
    CHECK_THROWS_AS(ray_series(small, {1, 1}, 2), Error);
    CHECK_THROWS_AS(ray_series(3, {2, 2}, 2), Error);
    for (int m = 2; m <= 5; ++m) {
        const MotiveTable t = hn_extract(m, Region::box(6, 6 * (m - 1)));
        for (int k = 1; k <= m - 1; ++k) CHECK(ray_series(t, {1, k}, 6) == ray_series(t, {1, m - k}, 6));
    }
}

TEST_CASE("framed_via_quotient examples") {
    const Series F = framed_via_quotient(3, {1, 1}, 4);
    CHECK(F[0] == RatFunc(1));
    CHECK(to_laurent(F[1]) == table({1, 1, 1}));
    CHECK(to_laurent(F[2]) == table({1, 2, 3, 3, 3, 2, 1}));
    for (int m = 2; m <= 5; ++m) CHECK(framed_via_quotient(m, {1, 2}, 2)[0] == RatFunc(1));
}

TEST_CASE("verify_dualities") {
    const Report r = verify_dualities(3, 7);
    CHECK(all_pass(r));
    auto has = [&](const std::string& id) {
        for (const auto& c : r)
            if (c.identity == id) return c.pass;
        return false;
    };
    CHECK(has("swap(2,1)"));
    CHECK(has("reflect(2,1)"));
    CHECK(has("swap(1,0)"));
    CHECK(moduli_motive(3, {2, 1}) == moduli_motive(3, {1, 2}));
    CHECK(moduli_motive(3, {2, 1}) == moduli_motive(3, {5, 2}));
    CHECK(moduli_motive(3, {1, 0}) == moduli_motive(3, {0, 1}));
    CHECK(all_pass(verify_dualities(4, 5)));
}

TEST_CASE("MotiveTable JSON export") {
    const MotiveTable t = hn_extract(3, 2);
    const Json j = to_json(t);
    REQUIRE(j.size() == t.region().points().size());
    for (const auto& rec : j) {
        const DimVector D{rec.at("d").get<int>(), rec.at("e").get<int>()};
        CHECK(ratfunc_from_json(rec.at("a")) == t.a(D));
        if (is_coprime(D)) CHECK(laurent_from_json(rec.at("motive")) == moduli_motive(t, D));
        else CHECK(rec.at("motive").is_null());
    }
}
