#include "kronmot/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>

#include "kronmot/central.hpp"
#include "kronmot/eulerchar.hpp"
#include "kronmot/tamari.hpp"
#include "kronmot/wallcross.hpp"

namespace kronmot {

namespace {

using Clock = std::chrono::steady_clock;

// A failure message, or nullopt when the criterion holds.
using Outcome = std::optional<std::string>;

// Palindromic list of coefficients on exponents -(n-1), -(n-3), ..., n-1.
LaurentPoly table_poly(const std::vector<int>& list) {
    const int n = static_cast<int>(list.size());
    std::vector<BigRational> c(static_cast<std::size_t>(2 * n - 1), BigRational(0));
    for (int i = 0; i < n; ++i) c[2 * static_cast<std::size_t>(i)] = list[static_cast<std::size_t>(i)];
    return LaurentPoly(-(n - 1), std::move(c));
}

std::string label(const char* what, int m, DimVector D) {
    std::ostringstream os;
    os << what << "_{" << D.d << "," << D.e << "}^(" << m << ")";
    return os.str();
}

// Motive shape: palindromic, nonnegative integers, support exactly the
// exponents -dim, -dim+2, ..., dim with none of them zero. Empty when dim < 0.
Outcome check_shape(const LaurentPoly& p, long dim, const std::string& what) {
    if (dim < 0) {
        if (!p.is_zero()) return what + ": expected 0 for negative dimension";
        return std::nullopt;
    }
    if (!is_palindromic(p)) return what + ": not palindromic";
    if (!has_nonnegative_integer_coeffs(p)) return what + ": coefficient not a nonnegative integer";
    if (p.min_exp() != -dim || p.max_exp() != dim)
        return what + ": exponent span [" + std::to_string(p.min_exp()) + "," + std::to_string(p.max_exp()) +
               "] but dim is " + std::to_string(dim);
    for (long e = -dim; e <= dim; ++e) {
        const bool on_lattice = (e + dim) % 2 == 0;
        const bool nonzero = p.coeff(static_cast<int>(e)) != 0;
        if (on_lattice != nonzero) return what + ": unexpected support at exponent " + std::to_string(e);
    }
    return std::nullopt;
}

Outcome criterion_tables() {
    const std::vector<std::vector<int>> framed = {
        {1, 1, 1},
        {1, 2, 3, 3, 3, 2, 1},
        {1, 2, 5, 8, 11, 12, 13, 12, 11, 8, 5, 2, 1},
        {1, 2, 5, 10, 18, 28, 40, 50, 58, 62, 64, 62, 58, 50, 40, 28, 18, 10, 5, 2, 1},
    };
    const std::vector<std::vector<int>> moduli = {
        {1},
        {1, 1, 1},
        {1, 1, 3, 3, 3, 1, 1},
        {1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1},
        {1, 1, 3, 5, 10, 14, 23, 30, 41, 46, 51, 46, 41, 30, 23, 14, 10, 5, 3, 1, 1},
    };
    const PolySeries F = framed_recursion(3, 4);
    const Series Fq = framed_via_quotient(3, {1, 1}, 4);
    for (int d = 1; d <= 4; ++d) {
        const LaurentPoly want = table_poly(framed[static_cast<std::size_t>(d - 1)]);
        if (F[d] != want) return label("recursion K^fr", 3, {d, d}) + " = " + to_string(F[d]);
        if (to_laurent(Fq[d]) != want) return label("quotient K^fr", 3, {d, d}) + " = " + to_string(Fq[d]);
    }
    const PolySeries G = extract_G(3, solve_functional_eq(3, 5));
    const MotiveTable table = hn_extract(3, Region::box(5, 4));
    for (int d = 1; d <= 5; ++d) {
        const LaurentPoly want = table_poly(moduli[static_cast<std::size_t>(d - 1)]);
        const DimVector D{d, d - 1};
        const LaurentPoly wc = moduli_motive(table, D);
        if (wc != want) return label("wall-crossing K", 3, D) + " = " + to_string(wc);
        if (G[d] != want) return label("central G", 3, D) + " = " + to_string(G[d]);
    }
    return std::nullopt;
}

Outcome criterion_three_way() {
    constexpr int order = 6;
    for (int m = 3; m <= 5; ++m) {
        const PolySeries rec = framed_recursion(m, order);
        const PolySeries fix = solve_functional_eq(m, order);
        const Series quo = framed_via_quotient(m, {1, 1}, order);
        for (int d = 0; d <= order; ++d) {
            const std::string at = " at m=" + std::to_string(m) + ", d=" + std::to_string(d);
            if (rec[d] != fix[d]) return "recursion and functional equation differ" + at;
            if (RatFunc(rec[d]) != quo[d]) return "recursion and wall-crossing quotient differ" + at;
        }
    }
    return std::nullopt;
}

Outcome report_failures(const Report& r) {
    for (const auto& c : r)
        if (!c.pass) {
            std::string msg = c.identity + " failed at m=" + std::to_string(c.m);
            if (c.k) msg += ", k=" + std::to_string(*c.k);
            msg += ", order " + std::to_string(c.order);
            if (c.first_failure_degree) msg += ", first bad degree " + std::to_string(*c.first_failure_degree);
            return msg;
        }
    return std::nullopt;
}

Outcome criterion_identities() {
    Report all;
    for (int m = 3; m <= 4; ++m) {
        append(all, verify_main_theorem(m, 6));
        append(all, verify_vdifference(m, 6));
        append(all, verify_funceq(m, 6));
        append(all, verify_eqnew(m, 6));
        for (int k = 1; k <= m - 1; ++k) {
            const Report cor = verify_corident(m, k, 4);
            if (cor.size() != 4) return "corident produced " + std::to_string(cor.size()) + " checks";
            append(all, cor);
            append(all, verify_newduality(m, k, 4));
        }
    }
    const Report dual = verify_dualities(3, 7);
    if (dual.empty()) return std::string("dualities checked nothing");
    append(all, dual);
    return report_failures(all);
}

Outcome criterion_euler_tamari() {
    struct Case {
        int m;
        std::vector<long> expected;
    };
    const std::vector<Case> cases = {{3, {1, 3, 13, 68, 399, 2530}}, {4, {1, 6, 58, 703}}};
    for (const auto& [m, expected] : cases) {
        const int top = static_cast<int>(expected.size());
        const PolySeries G = extract_G(m, framed_recursion(m, top));
        const MotiveTable table = hn_extract(m, Region::box(top, top - 1));
        for (int d = 1; d <= top; ++d) {
            const std::string at = " at m=" + std::to_string(m) + ", d=" + std::to_string(d);
            const BigInt want = expected[static_cast<std::size_t>(d - 1)];
            const BigInt from_g = chi_from_motive(G[d]);
            const BigInt from_wc = chi_from_motive(moduli_motive(table, {d, d - 1}));
            const BigInt closed = chi_moduli_closed(m, d);
            const BigInt brute = interval_count_bruteforce(m - 2, d);
            if (from_g != want) return "chi of G coefficient is " + to_string(from_g) + at;
            if (from_wc != want) return "chi of wall-crossing motive is " + to_string(from_wc) + at;
            if (closed != want) return "closed form gives " + to_string(closed) + at;
            if (brute != want) return "Tamari interval count is " + to_string(brute) + at;
        }
    }
    return std::nullopt;
}

Outcome criterion_framed_euler() {
    const std::vector<long> expected = {1, 3, 15, 91, 612};
    const PolySeries F = framed_recursion(3, 6);
    for (int d = 0; d <= 6; ++d) {
        const BigInt chi = chi_from_motive(F[d]);
        const BigInt closed = chi_framed_closed(3, d);
        if (chi != closed)
            return "d=" + std::to_string(d) + ": motive gives " + to_string(chi) + ", closed form " + to_string(closed);
        if (d < static_cast<int>(expected.size()) && chi != expected[static_cast<std::size_t>(d)])
            return "d=" + std::to_string(d) + ": expected " + std::to_string(expected[static_cast<std::size_t>(d)]);
    }
    return std::nullopt;
}

Outcome criterion_structure() {
    struct Sweep {
        int m;
        int bound;
        int order;
    };
    const std::vector<Sweep> sweeps = {{3, 12, 6}, {4, 10, 6}, {5, 9, 6}};
    for (const auto& [m, bound, order] : sweeps) {
        const KroneckerForm form(m);
        const MotiveTable table = hn_extract(m, bound);
        for (const DimVector D : table.region().points()) {
            if (D.is_zero() || !is_coprime(D)) continue;
            if (auto bad = check_shape(moduli_motive(table, D), form.moduli_dim(D), label("K", m, D))) return bad;
        }
        const PolySeries F = framed_recursion(m, order);
        const PolySeries G = extract_G(m, F);
        for (int d = 1; d <= order; ++d) {
            if (auto bad = check_shape(F[d], form.framed_dim({d, d}), label("K^fr", m, {d, d}))) return bad;
            if (auto bad = check_shape(G[d], form.moduli_dim({d, d - 1}), label("G", m, {d, d - 1}))) return bad;
            if (F[d] != quantum_integer((m - 1) * d + 1) * G[d])
                return "F and G coefficients not related by the quantum integer at m=" + std::to_string(m) +
                       ", d=" + std::to_string(d);
        }
    }
    return std::nullopt;
}

CriterionResult run_one(int id, std::string name, double limit, Outcome (*body)()) {
    CriterionResult r{id, std::move(name), false, {}, 0, limit};
    const auto start = Clock::now();
    try {
        const Outcome bad = body();
        r.pass = !bad;
        r.detail = bad ? *bad : "ok";
    } catch (const std::exception& ex) {
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.pass && r.seconds > limit) {
        r.pass = false;
        r.detail = "exceeded time limit";
    }
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
    struct Entry {
        const char* name;
        double limit;
        Outcome (*body)();
    };
    const Entry entries[] = {
        {"m=3 example tables", 10, criterion_tables},
        {"three-way framed agreement", 120, criterion_three_way},
        {"identity suite", 300, criterion_identities},
        {"Euler characteristic / Tamari chain", 60, criterion_euler_tamari},
        {"framed Euler sequence", 300, criterion_framed_euler},
        {"structural invariants", 300, criterion_structure},
    };
    std::vector<CriterionResult> out;
    const auto start = Clock::now();
    int id = 1;
    for (const auto& s : entries) {
        out.push_back(run_one(id++, s.name, s.limit, s.body));
        if (on_result) on_result(out.back());
    }
    CriterionResult total{id, "whole suite runtime", true, "ok", 0, 300};
    total.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (const auto& r : out)
        if (!r.pass) {
            total.pass = false;
            total.detail = "criterion " + std::to_string(r.id) + " failed";
            break;
        }
    if (total.seconds > total.limit_seconds) {
        total.pass = false;
        total.detail = "exceeded time limit";
    }
    out.push_back(total);
    if (on_result) on_result(total);
    return out;
}

std::string format_result(const CriterionResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", r.seconds, r.limit_seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing +
           "): " + r.detail;
}

} // namespace kronmot
