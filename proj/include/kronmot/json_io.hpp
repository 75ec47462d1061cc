#pragma once

#include <json.hpp>

#include "kronmot/eulerchar.hpp"
#include "kronmot/laurent.hpp"
#include "kronmot/ratfunc.hpp"
#include "kronmot/report.hpp"
#include "kronmot/series.hpp"
#include "kronmot/tamari.hpp"
#include "kronmot/wallcross.hpp"

namespace kronmot {

using Json = nlohmann::ordered_json;

// Encoders. Rationals and big integers are written as decimal strings.
Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& r);
Json to_json(const Series& s);
Json to_json(const PolySeries& s);
Json to_json(const MotiveTable& t);
Json to_json(const Report& r);
Json to_json(const ChiRecord& c);
Json to_json(const TamariPoset& p);

// Decoders canonicalize, so encode(decode(x)) == x for any encoder output.
// Malformed input throws Error(ErrorKind::Parse).
LaurentPoly laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
Series series_from_json(const Json& j);
Report report_from_json(const Json& j);
ChiRecord chi_record_from_json(const Json& j);

} // namespace kronmot
