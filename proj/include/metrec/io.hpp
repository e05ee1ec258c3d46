#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "metrec/matrix.hpp"
#include "metrec/recognizers.hpp"

namespace metrec {

enum class MatrixFormat { text, csv, json };

/// Guesses the format from a file extension (.csv, .json); text otherwise.
MatrixFormat format_from_path(std::string_view path);

/// Text: optional first line holding only the order m, then m rows of m
/// whitespace-separated tokens. CSV: the same grid separated by commas.
/// JSON: an array of rows, or {"matrix": [...]}, with numbers or strings.
/// Lines starting with '#' and blank lines are skipped in text and CSV.
/// Throws ParseError (with line/column) or ShapeError.
PredistanceMatrix parse_matrix(std::string_view input, MatrixFormat format = MatrixFormat::text);

/// Header line with m, then one row per line of canonical tokens.
std::string format_matrix(const PredistanceMatrix& m);

/// Verdict JSON; vertex indices in witnesses and edges are 1-based.
nlohmann::json verdict_to_json(const Verdict& v);

/// Condition trail plus the rejection or certificate summary.
std::string verdict_to_human(const Verdict& v);

}  // namespace metrec
