#pragma once

#include <string>

#include <json.hpp>

#include "concord/twisted_doubles.hpp"

namespace concord {

using Json = nlohmann::json;

/// Integers and rationals are written as decimal strings ("num/den").
Json to_json(const Integer& z);
Json to_json(const Rational& r);
Json to_json(const IntMatrix& m);
/// Ascending coefficients.
Json to_json(const IntPolynomial& p);
/// Rational breakpoints as ["num", "den"]; algebraic ones as an object with
/// the r enclosure "interval" plus x_poly, x_interval and upper.
Json to_json(const Breakpoint& b);
/// [{"plateau_first": v0}, {"breakpoint": b, "plateau_after": v1}, ...]
Json to_json(const SignatureProfile& p);
Json to_json(const CGValue& v);
Json to_json(const MinmaxResult& m);
Json to_json(const ObstructionReport& r);
Json to_json(const IndependenceReport& r);
Json to_json(const TableRow& row);

/// Readers accept JSON numbers or decimal strings. Throw ParseError.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
IntPolynomial polynomial_from_json(const Json& j);
SignatureProfile profile_from_json(const Json& j);

Json parse_json(const std::string& text);

/// unknot | torus:2,n | torus-neg:l | seifert:<json> | profile:<json>,
/// joined with '#' for connected sums.
SignatureProfile parse_companion(const std::string& spec);

}  // namespace concord
