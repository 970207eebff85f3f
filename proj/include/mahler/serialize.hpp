#pragma once

// JSON, CSV and text rendering of results.
//
// Interval endpoints travel as decimal strings rounded outward with enough
// digits to read back the identical binary endpoints.  Objects use sorted
// keys, so equal values always dump to equal bytes.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mahler/asymptotics.hpp"
#include "mahler/bigfloat.hpp"
#include "mahler/irreducibility.hpp"
#include "mahler/measure.hpp"
#include "mahler/minsearch.hpp"
#include "mahler/poly.hpp"

namespace mahler {

using Json = nlohmann::json;

inline constexpr std::string_view kToolVersion = MAHLER_VERSION;

/// Decimal string that reads back to x at x's precision (read with the
/// opposite rounding direction).
std::string decimal_string(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat bigfloat_from_string(const std::string& s, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);

/// "midpoint ± half-width".
std::string format_interval(const Interval& x, int digits = 12);

Json to_json(const Interval& x);
Interval interval_from_json(const Json& j);

Json to_json(const RationalPoly& p);  // ascending coefficients as strings
RationalPoly rational_poly_from_json(const Json& j);
Json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);

Json to_json(const MeasureResult& m);
MeasureResult measure_from_json(const Json& j);

Json to_json(const RootSet& r);
RootSet roots_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const SearchRecord& r);
SearchRecord search_record_from_json(const Json& j);

Json to_json(const SeriesResult& s);
Json to_json(const BoundRow& r);
Json to_json(const MonotonicityReport& r);
MonotonicityReport monotonicity_from_json(const Json& j);

/// {command, params, results, tool_version}.
Json make_envelope(std::string_view command, Json params, Json results);

/// Indented dump with a trailing newline.
std::string dump(const Json& j);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace mahler
