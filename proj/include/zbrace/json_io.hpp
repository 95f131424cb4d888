#pragma once

// JSON forms used by the CLI and the Python module. Keys are emitted in a
// fixed order so reports can be compared byte for byte.

#include <json.hpp>

#include "zbrace/brace.hpp"
#include "zbrace/classification.hpp"
#include "zbrace/gl2z.hpp"
#include "zbrace/ybe.hpp"

namespace zbrace::json {

using Json = nlohmann::ordered_json;

Json to_json(const Mat2& m);   // [[a11,a12],[a21,a22]]
Json to_json(const Vec2& v);   // [x1,x2]
Json to_json(const BraceSpec& spec);  // {"phi": .., "psi": ..}
Json to_json(const Verdict& v);
Json to_json(const RowParams& params);
Json to_json(const std::vector<RowLabel>& rows);  // ["1.1", ...]
Json to_json(const SearchReport& report);
Json to_json(const OrdersReport& report);
Json to_json(const YbeReport& report);

// Throw std::invalid_argument on malformed input; NotUnimodular from BraceSpec.
Mat2 mat_from_json(const Json& j);
BraceSpec spec_from_json(const Json& j);

}  // namespace zbrace::json
