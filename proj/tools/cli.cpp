#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cache.hpp"
#include "kronmot/acceptance.hpp"
#include "kronmot/central.hpp"
#include "kronmot/error.hpp"
#include "kronmot/eulerchar.hpp"
#include "kronmot/json_io.hpp"
#include "kronmot/tamari.hpp"
#include "kronmot/wallcross.hpp"

namespace kronmot::cli {

namespace {

constexpr const char* schema = "kronmot/1";

enum class Format { plain, json, csv };

struct GlobalOptions {
    std::string format = "plain";
    std::string cache_dir;
    bool no_cache = false;
    std::size_t max_paths = default_path_cap;
};

// A failed consistency check that should surface as a specific exit code.
struct CommandFailure {
    int code;
    std::string message;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NonCoprime:
    case ErrorKind::Parse:
    case ErrorKind::InsufficientBound: return exit_invalid_input;
    case ErrorKind::ResourceLimit: return exit_resource_limit;
    default: return exit_inconsistent;
    }
}

// ---- rendering helpers -------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

std::string json_scalar(const Json& j) {
    if (j.is_null()) return "";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

// Coefficient list in ascending exponent order. When the polynomial lives on
// one parity class only the entries of that class are listed.
std::string coeff_list(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    bool one_parity = true;
    for (std::size_t i = 1; i < p.coeffs().size(); i += 2)
        if (p.coeffs()[i] != 0) one_parity = false;
    const std::size_t step = one_parity ? 2 : 1;
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); i += step) out += (i ? "," : "") + to_string(p.coeffs()[i]);
    return out;
}

void render_motive_plain(const LaurentPoly& p, std::ostream& out) {
    for (int e = p.min_exp(); !p.is_zero() && e <= p.max_exp(); ++e)
        if (p.coeff(e) != 0) out << e << ": " << to_string(p.coeff(e)) << "\n";
    out << coeff_list(p) << "\n";
}

std::string dense_list(const LaurentPoly& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += (i ? "," : "") + to_string(p.coeffs()[i]);
    return out;
}

// ---- option helpers ----------------------------------------------------------

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return +1;
    if (s == "-" || s == "minus") return -1;
    throw Error(ErrorKind::InvalidArgument, "sign must be plus or minus");
}

// ---- commands ----------------------------------------------------------------

struct Params {
    // framed / moduli / hn / series / euler / verify
    int m = 0;
    int d = 0;
    int e = 0;
    int bound = -1;
    std::optional<int> k;
    int order = -1;
    std::string method;
    std::string which;
    std::string sign = "minus";
    std::string kind = "moduli";
    std::string identity;
    bool check = false;
    // tamari
    int mprime = 0;
    int n = 0;
    std::string dump;
};

LaurentPoly framed_by(const std::string& method, int m, int d) {
    if (method == "recursion") return framed_recursion(m, d)[d];
    if (method == "funceq") return solve_functional_eq(m, d)[d];
    return to_laurent(framed_via_quotient(m, {1, 1}, d)[d]);
}

Json cmd_framed(const Params& p) {
    require(p.m >= 3, "framed needs m >= 3");
    require(p.d >= 0, "framed needs d >= 0");
    const LaurentPoly motive = framed_by(p.method, p.m, p.d);
    if (p.check)
        for (const char* other : {"recursion", "funceq", "wallcross"})
            if (framed_by(other, p.m, p.d) != motive)
                throw CommandFailure{exit_inconsistent, std::string("method ") + other + " disagrees with " + p.method};
    return Json{{"m", p.m}, {"d", p.d}, {"method", p.method}, {"motive", to_json(motive)}};
}

Json cmd_moduli(const Params& p) {
    require(p.m >= 1, "moduli needs m >= 1");
    require(p.d >= 0 && p.e >= 0 && (p.d > 0 || p.e > 0), "moduli needs a nonzero dimension vector (d, e) with d, e >= 0");
    const DimVector D{p.d, p.e};
    if (!is_coprime(D))
        throw Error(ErrorKind::NonCoprime, "gcd(d, e) = " + std::to_string(gcd(D)) +
                                              " > 1; the moduli motive needs coprime (d, e). "
                                              "Use the hn subcommand to inspect the semistable coefficient a_D.");
    return Json{{"m", p.m}, {"d", p.d}, {"e", p.e}, {"motive", to_json(moduli_motive(p.m, D))}};
}

Json cmd_hn(const Params& p) {
    require(p.m >= 1, "hn needs m >= 1");
    require(p.bound >= 0, "hn needs bound >= 0");
    return Json{{"m", p.m}, {"bound", p.bound}, {"table", to_json(hn_extract(p.m, p.bound))}};
}

Json cmd_series(const Params& p) {
    require(p.m >= 1, "series needs m >= 1");
    require(p.order >= 0, "series needs order >= 0");
    const int k = p.k.value_or(1);
    require(k >= 1, "series needs k >= 1");
    Json out{{"which", p.which}, {"m", p.m}, {"k", k}, {"order", p.order}};
    if (p.which == "A") {
        out["series"] = to_json(ray_series(p.m, {1, k}, p.order));
    } else if (p.which == "F") {
        out["series"] = to_json(framed_via_quotient(p.m, {1, k}, p.order));
    } else {
        const int sign = parse_sign(p.sign);
        out["sign"] = sign > 0 ? "plus" : "minus";
        const MotiveTable table = hn_extract(p.m, moduli_series_region(k, sign, p.order));
        out["series"] = to_json(moduli_series(table, k, sign, p.order));
    }
    return out;
}

Json cmd_euler(const Params& p) {
    require(p.m >= 3, "euler needs m >= 3");
    const bool framed = p.kind == "framed";
    require(framed ? p.d >= 0 : p.d >= 1, framed ? "euler needs d >= 0" : "euler --kind moduli needs d >= 1");
    const BigInt chi = framed ? chi_framed_closed(p.m, p.d) : chi_moduli_closed(p.m, p.d);
    if (p.check) {
        const PolySeries F = framed_recursion(p.m, p.d);
        const BigInt other = framed ? chi_from_motive(F[p.d]) : chi_from_motive(extract_G(p.m, F)[p.d]);
        if (other != chi)
            throw CommandFailure{exit_verification_failed,
                                 "closed form gives " + to_string(chi) + ", motive gives " + to_string(other)};
    }
    Json out{{"m", p.m}, {"d", p.d}, {"kind", p.kind}, {"chi", to_string(chi)}};
    if (chi.fits_slong_p()) out["chi"] = chi.get_si();
    return out;
}

Json cmd_tamari(const Params& p, std::size_t cap) {
    require(p.mprime >= 1 && p.n >= 1, "tamari needs m-prime >= 1 and n >= 1");
    Json out{{"mprime", p.mprime}, {"n", p.n}, {"method", p.method}};
    std::optional<TamariPoset> poset;
    auto get_poset = [&]() -> const TamariPoset& {
        if (!poset) poset = build_poset(p.mprime, p.n, cap);
        return *poset;
    };
    BigInt count = p.method == "brute" ? interval_count_bruteforce(get_poset()) : interval_count_formula(p.mprime, p.n);
    if (p.check) {
        const BigInt other =
            p.method == "brute" ? interval_count_formula(p.mprime, p.n) : interval_count_bruteforce(get_poset());
        if (other != count)
            throw CommandFailure{exit_verification_failed,
                                 "brute force and formula disagree: " + to_string(count) + " vs " + to_string(other)};
    }
    out["intervals"] = count.fits_slong_p() ? Json(count.get_si()) : Json(to_string(count));
    if (p.dump == "paths") {
        Json paths = Json::array();
        for (const auto& e : get_poset().elements) paths.push_back(e.word());
        out["paths"] = std::move(paths);
    } else if (p.dump == "poset") {
        out["poset"] = to_json(get_poset());
    }
    return out;
}

Json cmd_verify(const Params& p) {
    const std::string& id = p.identity;
    Report r;
    if (id == "dualities") {
        const int bound = p.bound >= 0 ? p.bound : p.order;
        require(bound >= 0, "verify --identity dualities needs --bound");
        require(p.m >= 1, "dualities need m >= 1");
        r = verify_dualities(p.m, bound);
    } else {
        require(p.order >= 0, "verify needs --order >= 0");
        const bool needs_k = id == "corident" || id == "newduality";
        require(!needs_k || p.k.has_value(), "verify --identity " + id + " needs --k");
        require(needs_k || !p.k.has_value(), "verify --identity " + id + " takes no --k");
        if (id == "maintheorem") r = verify_main_theorem(p.m, p.order);
        else if (id == "vdifference") r = verify_vdifference(p.m, p.order);
        else if (id == "funceq") r = verify_funceq(p.m, p.order);
        else if (id == "eqnew") r = verify_eqnew(p.m, p.order);
        else if (id == "corident") r = verify_corident(p.m, *p.k, p.order);
        else r = verify_newduality(p.m, *p.k, p.order);
    }
    return to_json(r);
}

Json cmd_selftest(std::ostream& progress, Format format) {
    Json out = Json::array();
    run_acceptance([&](const CriterionResult& r) {
        if (format == Format::plain) progress << format_result(r) << "\n" << std::flush;
        out.push_back(Json{{"id", r.id}, {"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    });
    return out;
}

// ---- output ------------------------------------------------------------------

void render(const std::string& command, const Json& result, Format format, std::ostream& out) {
    if (format == Format::json) {
        out << Json{{"schema", schema}, {"command", command}, {"result", result}}.dump(2) << "\n";
        return;
    }
    const bool csv = format == Format::csv;
    if (command == "framed" || command == "moduli") {
        const LaurentPoly motive = laurent_from_json(result.at("motive"));
        if (!csv) return render_motive_plain(motive, out);
        out << csv_row({"m", "d", "e", "min_exp", "coeffs"});
        const int e = command == "framed" ? result.at("d").get<int>() : result.at("e").get<int>();
        out << csv_row({json_scalar(result.at("m")), json_scalar(result.at("d")), std::to_string(e),
                        std::to_string(motive.min_exp()), dense_list(motive)});
    } else if (command == "hn") {
        if (csv) out << csv_row({"d", "e", "a", "motive"});
        for (const auto& rec : result.at("table")) {
            const std::string a = to_string(ratfunc_from_json(rec.at("a")));
            const std::string motive = rec.at("motive").is_null() ? "" : coeff_list(laurent_from_json(rec.at("motive")));
            const std::string d = json_scalar(rec.at("d")), e = json_scalar(rec.at("e"));
            if (csv) out << csv_row({d, e, a, motive});
            else out << "(" << d << "," << e << ") a = " << a << (motive.empty() ? "" : "; motive " + motive) << "\n";
        }
    } else if (command == "series") {
        const Series s = series_from_json(result.at("series"));
        if (csv) out << csv_row({"degree", "num", "den"});
        for (int d = 0; d <= s.order(); ++d) {
            if (csv) out << csv_row({std::to_string(d), to_string(s[d].num()), to_string(s[d].den())});
            else out << "t^" << d << ": " << to_string(s[d]) << "\n";
        }
    } else if (command == "euler") {
        if (csv) out << csv_row({"m", "d", "kind", "chi"})
                     << csv_row({json_scalar(result.at("m")), json_scalar(result.at("d")), json_scalar(result.at("kind")),
                                 json_scalar(result.at("chi"))});
        else out << json_scalar(result.at("chi")) << "\n";
    } else if (command == "tamari") {
        if (result.contains("paths")) {
            for (const auto& w : result.at("paths")) out << w.get<std::string>() << "\n";
        } else if (result.contains("poset")) {
            const Json& poset = result.at("poset");
            if (csv) out << csv_row({"index", "path", "covers"});
            for (std::size_t i = 0; i < poset.at("paths").size(); ++i) {
                std::string covers;
                for (const auto& c : poset.at("covers").at(i)) covers += (covers.empty() ? "" : ",") + c.dump();
                const std::string word = poset.at("paths").at(i).get<std::string>();
                if (csv) out << csv_row({std::to_string(i), word, covers});
                else out << i << " " << word << " -> " << (covers.empty() ? "-" : covers) << "\n";
            }
        } else if (csv) {
            out << csv_row({"mprime", "n", "method", "intervals"})
                << csv_row({json_scalar(result.at("mprime")), json_scalar(result.at("n")),
                            json_scalar(result.at("method")), json_scalar(result.at("intervals"))});
        } else {
            out << json_scalar(result.at("intervals")) << "\n";
        }
    } else if (command == "verify") {
        if (csv) out << csv_row({"identity", "m", "k", "order", "status", "first_failure_degree"});
        std::size_t failed = 0;
        for (const auto& c : result) {
            const bool pass = c.at("status") == "pass";
            failed += pass ? 0 : 1;
            if (csv) {
                out << csv_row({json_scalar(c.at("identity")), json_scalar(c.at("m")), json_scalar(c.at("k")),
                                json_scalar(c.at("order")), json_scalar(c.at("status")),
                                json_scalar(c.at("first_failure_degree"))});
            } else {
                out << (pass ? "pass " : "FAIL ") << c.at("identity").get<std::string>() << " m=" << c.at("m").dump();
                if (!c.at("k").is_null()) out << " k=" << c.at("k").dump();
                out << " order=" << c.at("order").dump();
                if (!c.at("first_failure_degree").is_null()) out << " first failure at t^" << c.at("first_failure_degree").dump();
                out << "\n";
            }
        }
        if (!csv) out << (result.size() - failed) << "/" << result.size() << " checks passed\n";
    } else if (command == "selftest") {
        if (csv) {
            out << csv_row({"id", "name", "status", "detail"});
            for (const auto& c : result)
                out << csv_row({json_scalar(c.at("id")), json_scalar(c.at("name")), json_scalar(c.at("status")),
                                json_scalar(c.at("detail"))});
        }
    }
}

int exit_code_of(const std::string& command, const Json& result) {
    if (command != "verify" && command != "selftest") return exit_ok;
    for (const auto& c : result)
        if (c.at("status") != "pass") return exit_verification_failed;
    return exit_ok;
}

std::optional<std::filesystem::path> cache_directory(const GlobalOptions& g) {
    if (g.no_cache) return std::nullopt;
    if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
    if (const char* env = std::getenv("KRONMOT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kronmot";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "kronmot";
    return std::nullopt;
}

// Canonical cache key: schema, command, then the parameters that affect the result.
std::string cache_key(const std::string& command, const Json& params) {
    return std::string(schema) + " " + command + " " + params.dump();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact motives of Kronecker quiver moduli", "kronmot"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default $KRONMOT_CACHE_DIR)");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the result cache");
    app.add_option("--max-paths", g.max_paths, "Largest Tamari poset to build")->check(CLI::PositiveNumber);

    Params p;
    const auto methods = CLI::IsMember({"recursion", "funceq", "wallcross"});

    auto* framed = app.add_subcommand("framed", "Motive of the framed moduli space K_{d,d}^fr");
    framed->add_option("--m", p.m, "Number of arrows")->required();
    framed->add_option("--d", p.d, "Dimension")->required();
    framed->add_option("--method", p.method, "recursion, funceq or wallcross")->default_val("recursion")->check(methods);
    framed->add_flag("--check", p.check, "Run all three methods and compare");

    auto* moduli = app.add_subcommand("moduli", "Motive of K_{d,e} for coprime (d, e)");
    moduli->add_option("--m", p.m, "Number of arrows")->required();
    moduli->add_option("--d", p.d, "Source dimension")->required();
    moduli->add_option("--e", p.e, "Sink dimension")->required();

    auto* hn = app.add_subcommand("hn", "Semistable coefficients a_D for d + e <= bound");
    hn->add_option("--m", p.m, "Number of arrows")->required();
    hn->add_option("--bound", p.bound, "Largest d + e")->required();

    auto* series = app.add_subcommand("series", "Generating series F^(k), G^(k),sign or A^(k)");
    series->add_option("--which", p.which, "F, G or A")->required()->check(CLI::IsMember({"F", "G", "A"}));
    series->add_option("--m", p.m, "Number of arrows")->required();
    series->add_option("--k", p.k, "Slope index (default 1)");
    series->add_option("--order", p.order, "Truncation order")->required();
    series->add_option("--sign", p.sign, "plus or minus, for G (default minus)")
        ->check(CLI::IsMember({"plus", "minus", "+", "-"}));

    auto* euler = app.add_subcommand("euler", "Euler characteristic from the closed forms");
    euler->add_option("--m", p.m, "Number of arrows")->required();
    euler->add_option("--d", p.d, "Dimension")->required();
    euler->add_option("--kind", p.kind, "framed or moduli")->default_val("moduli")->check(CLI::IsMember({"framed", "moduli"}));
    euler->add_flag("--check", p.check, "Compare with the motive at v = 1");

    auto* tamari = app.add_subcommand("tamari", "Interval count of the m'-Tamari lattice");
    tamari->add_option("--m-prime", p.mprime, "m'")->required();
    tamari->add_option("--n", p.n, "Index")->required();
    tamari->add_option("--method", p.method, "brute or formula")->default_val("brute")->check(CLI::IsMember({"brute", "formula"}));
    tamari->add_flag("--check", p.check, "Run both methods and compare");
    tamari->add_option("--dump", p.dump, "Also output the paths or the covering digraph")->check(CLI::IsMember({"paths", "poset"}));

    auto* verify = app.add_subcommand("verify", "Check one family of series identities exactly");
    verify->add_option("--identity", p.identity, "Identity name")
        ->required()
        ->check(CLI::IsMember({"corident", "newduality", "maintheorem", "vdifference", "funceq", "dualities", "eqnew"}));
    verify->add_option("--m", p.m, "Number of arrows")->required();
    verify->add_option("--k", p.k, "Slope index for corident and newduality");
    verify->add_option("--order", p.order, "Truncation order");
    verify->add_option("--bound", p.bound, "Largest d + e, for dualities");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, x;
        const int code = app.exit(e, o, x);
        out << o.str();
        err << x.str();
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    const Format format = g.format == "json" ? Format::json : g.format == "csv" ? Format::csv : Format::plain;
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    // Parameters that determine the result; also the cache key.
    Json params;
    std::function<Json()> compute;
    if (sub == framed) {
        params = {{"m", p.m}, {"d", p.d}, {"method", p.method}};
        compute = [&] { return cmd_framed(p); };
    } else if (sub == moduli) {
        params = {{"m", p.m}, {"d", p.d}, {"e", p.e}};
        compute = [&] { return cmd_moduli(p); };
    } else if (sub == hn) {
        params = {{"m", p.m}, {"bound", p.bound}};
        compute = [&] { return cmd_hn(p); };
    } else if (sub == series) {
        params = {{"which", p.which}, {"m", p.m}, {"k", p.k.value_or(1)}, {"order", p.order}};
        if (p.which == "G") params["sign"] = p.sign == "+" || p.sign == "plus" ? "plus" : "minus";
        compute = [&] { return cmd_series(p); };
    } else if (sub == euler) {
        params = {{"m", p.m}, {"d", p.d}, {"kind", p.kind}};
        compute = [&] { return cmd_euler(p); };
    } else if (sub == tamari) {
        params = {{"mprime", p.mprime}, {"n", p.n}, {"method", p.method}, {"dump", p.dump}};
        // The cap changes whether a result exists, not what it is.
        if (p.method == "brute" || !p.dump.empty()) params["max_paths"] = g.max_paths;
        compute = [&] { return cmd_tamari(p, g.max_paths); };
    } else if (sub == verify) {
        params = {{"identity", p.identity}, {"m", p.m}, {"k", p.k ? Json(*p.k) : Json(nullptr)},
                  {"order", p.order}, {"bound", p.bound}};
        compute = [&] { return cmd_verify(p); };
    } else {
        compute = [&] { return cmd_selftest(out, format); };
    }

    try {
        // --check reruns the computation by design; selftest measures time.
        const bool cacheable = sub != selftest && !p.check;
        const auto dir = cacheable ? cache_directory(g) : std::nullopt;
        std::optional<ResultCache> cache;
        if (dir) cache.emplace(*dir);
        const std::string key = cache_key(command, params);
        std::optional<Json> result = cache ? cache->load(key) : std::nullopt;
        if (!result) {
            result = compute();
            if (cache) cache->store(key, *result);
        }
        render(command, *result, format, out);
        return exit_code_of(command, *result);
    } catch (const CommandFailure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_inconsistent;
    }
}

} // namespace kronmot::cli
