#pragma once

#include <string>

#include "json.hpp"
#include "toep/matrix.hpp"
#include "toep/partitions.hpp"
#include "toep/scalar.hpp"
#include "toep/specialization.hpp"
#include "toep/symbols.hpp"

namespace toep {

using Json = nlohmann::json;

// Request-payload decoding. Every parser names `field` in its SchemaError so
// the caller can point at the offending part of the request; range problems
// surface as InputError from the constructors underneath.

Json parse_json_text(const std::string& text, const std::string& field);

long long_from_json(const Json& v, const std::string& field);
Rational rational_from_json(const Json& v, const std::string& field);

// Series encoding: {"coeffs": [rationals], "lo": int, "order": int} with
// coeffs[i] the coefficient of exponent lo + i. "lo" defaults to 0, "order"
// to lo + coeffs.size() - 1; when both are given the window must match.
Series series_from_json(const Json& v, const std::string& field);

// Rational encodings stay rational; a series object becomes a series value.
Scalar scalar_from_json(const Json& v, const std::string& field);

// JSON array of weakly decreasing nonnegative integers.
Partition partition_from_json(const Json& v, const std::string& field);

// {"kind": "finite", "values": [...]}
// {"kind": "principal", "q": ..., "count": n}
// {"kind": "principal_shifted", "q": ..., "start": s, "count": n}
// {"kind": "principal_infinite", "q": ..., "shift": s?}
Specialization specialization_from_json(const Json& v, const std::string& field);

// {"builtin": "pure_fh" | "theta_gd" | "theta_d" | "tridiagonal", ...params}
// or {"factors": [{"orientation": "z"|"zinv", "basis": "H"|"E", "spec": ...}]}.
Symbol symbol_from_json(const Json& v, const std::string& field);

// Inverses of the decoders above: rationals as "p/q" strings, series as the
// coeffs/lo/order object, so every printed value parses back unchanged.
Json scalar_to_json(const Scalar& v);
Json matrix_to_json(const ScalarMatrix& m);

}  // namespace toep
