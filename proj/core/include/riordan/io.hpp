#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/sequences.hpp"
#include "riordan/series.hpp"
#include "riordan/tp.hpp"

namespace riordan {

using json = nlohmann::json;

// Every number travels as an exact fraction string ("p" or "p/q").
// Malformed input throws Error(ParseError).

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

/// {"order": N, "coeffs": ["c0", ..., "cN"]}
void to_json(json& j, const Series& s);
void from_json(const json& j, Series& s);

/// {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}
void to_json(json& j, const MatrixWindow& m);
void from_json(const json& j, MatrixWindow& m);

/// {"A": series, "Z": series, "W": series, "z0": "p/q", "w0": "p/q", "order": N}
void to_json(json& j, const AZWTriple& azw);
void from_json(const json& j, AZWTriple& azw);

/// {"a0": ..., "a1": ..., "a2": ..., "z0": ..., "z1": ..., "z2": ..., "w0": ..., "w1": ...}
void to_json(json& j, const TridiagonalProduction& p);
void from_json(const json& j, TridiagonalProduction& p);

/// {"verdict", "checked_order", "strategy", "minors_checked",
///  "witness": {"rows", "cols", "value"} | null, "note"}
void to_json(json& j, const TPReport& r);
void from_json(const json& j, TPReport& r);

/// Rows of fraction strings separated by commas, no header.
std::string matrix_to_csv(const MatrixWindow& m);
MatrixWindow matrix_from_csv(std::string_view text);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_json_text(std::string_view text);

/// Reads a matrix file: JSON when the content starts with '{', CSV otherwise.
MatrixWindow read_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace riordan
