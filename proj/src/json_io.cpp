#include "kronmot/json_io.hpp"

#include <string>

#include "kronmot/error.hpp"

namespace kronmot {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) parse_error(std::string("expected an object with field \"") + name + "\"");
    auto it = j.find(name);
    if (it == j.end()) parse_error(std::string("missing field \"") + name + "\"");
    return *it;
}

int int_field(const Json& j, const char* name) {
    const Json& x = field(j, name);
    if (!x.is_number_integer()) parse_error(std::string("field \"") + name + "\" must be an integer");
    return x.get<int>();
}

std::optional<int> optional_int_field(const Json& j, const char* name) {
    const Json& x = field(j, name);
    if (x.is_null()) return std::nullopt;
    if (!x.is_number_integer()) parse_error(std::string("field \"") + name + "\" must be an integer or null");
    return x.get<int>();
}

BigRational rational_value(const Json& x) {
    if (x.is_string()) return parse_rational(x.get<std::string>());
    if (x.is_number_integer()) return BigRational(BigInt(std::to_string(x.get<long long>())));
    parse_error("expected a rational string");
}

BigInt integer_value(const Json& x) {
    const BigRational r = rational_value(x);
    if (!is_integer(r)) parse_error("expected an integer, got " + to_string(r));
    return r.get_num();
}

Json optional_to_json(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

// JSON number when it fits in a signed 64-bit long, decimal string otherwise.
Json integer_to_json(const BigInt& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(to_string(x));
}

} // namespace

Json to_json(const LaurentPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RatFunc& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const PolySeries& s) { return to_json(to_ratfunc_series(s)); }

Json to_json(const MotiveTable& t) {
    Json out = Json::array();
    for (const DimVector& D : t.region().points()) {
        const auto motive = is_coprime(D) ? t.motive(D) : std::nullopt;
        out.push_back(Json{{"d", D.d},
                           {"e", D.e},
                           {"a", to_json(t.a(D))},
                           {"motive", motive ? to_json(*motive) : Json(nullptr)}});
    }
    return out;
}

Json to_json(const Report& r) {
    Json out = Json::array();
    for (const auto& c : r)
        out.push_back(Json{{"identity", c.identity},
                           {"m", c.m},
                           {"k", optional_to_json(c.k)},
                           {"order", c.order},
                           {"status", c.pass ? "pass" : "fail"},
                           {"first_failure_degree", optional_to_json(c.first_failure_degree)}});
    return out;
}

Json to_json(const ChiRecord& c) {
    return Json{{"m", c.m}, {"d", c.d}, {"chi_framed", integer_to_json(c.chi_framed)}, {"chi_moduli", integer_to_json(c.chi_moduli)}};
}

Json to_json(const TamariPoset& p) {
    Json paths = Json::array();
    for (const auto& e : p.elements) paths.push_back(e.word());
    Json covers = Json::array();
    for (const auto& row : p.covers) covers.push_back(row);
    return Json{{"paths", std::move(paths)}, {"covers", std::move(covers)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    const int min_exp = int_field(j, "min_exp");
    const Json& cs = field(j, "coeffs");
    if (!cs.is_array()) parse_error("\"coeffs\" must be an array");
    std::vector<BigRational> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) coeffs.push_back(rational_value(c));
    return LaurentPoly(min_exp, std::move(coeffs));
}

RatFunc ratfunc_from_json(const Json& j) {
    LaurentPoly den = laurent_from_json(field(j, "den"));
    if (den.is_zero()) parse_error("zero denominator");
    return RatFunc(laurent_from_json(field(j, "num")), std::move(den));
}

Series series_from_json(const Json& j) {
    const int order = int_field(j, "order");
    const Json& cs = field(j, "coeffs");
    if (order < 0 || !cs.is_array() || cs.size() != static_cast<std::size_t>(order) + 1)
        parse_error("series needs order >= 0 and order + 1 coefficients");
    std::vector<RatFunc> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) coeffs.push_back(ratfunc_from_json(c));
    return Series(order, std::move(coeffs));
}

Report report_from_json(const Json& j) {
    if (!j.is_array()) parse_error("report must be an array");
    Report out;
    for (const auto& x : j) {
        const Json& status = field(x, "status");
        if (!status.is_string() || (status != "pass" && status != "fail")) parse_error("status must be pass or fail");
        const Json& id = field(x, "identity");
        if (!id.is_string()) parse_error("identity must be a string");
        out.push_back({id.get<std::string>(), int_field(x, "m"), optional_int_field(x, "k"), int_field(x, "order"),
                       status == "pass", optional_int_field(x, "first_failure_degree")});
    }
    return out;
}

ChiRecord chi_record_from_json(const Json& j) {
    return {int_field(j, "m"), int_field(j, "d"), integer_value(field(j, "chi_framed")),
            integer_value(field(j, "chi_moduli"))};
}

} // namespace kronmot
