#include "metrec/io.hpp"

#include <charconv>
#include <sstream>

#include "metrec/errors.hpp"

namespace metrec {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line, char separator) {
  std::vector<Token> out;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  if (separator == ' ') {
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos == line.size()) break;
      auto start = pos;
      while (pos < line.size() && !is_space(line[pos])) ++pos;
      out.push_back({line.substr(start, pos - start), start + 1});
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto end = line.find(separator, start);
    auto field = line.substr(start, end == std::string_view::npos ? line.size() - start : end - start);
    std::size_t lead = 0;
    while (lead < field.size() && is_space(field[lead])) ++lead;
    field.remove_prefix(lead);
    while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
    out.push_back({field, start + lead + 1});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Rational parse_token(const Token& token, std::size_t line) {
  if (token.text.empty()) throw ParseError("empty field", line, token.column);
  try {
    return parse_rational(token.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, token.column + (e.column() ? e.column() - 1 : 0));
  }
}

PredistanceMatrix parse_grid(std::string_view input, char separator) {
  std::vector<std::vector<Rational>> rows;
  std::optional<std::size_t> header;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    auto line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto tokens = split_line(line, separator);
    if (!header && rows.empty() && tokens.size() == 1) {
      std::size_t m = 0;
      auto text = tokens[0].text;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
      if (ec != std::errc() || ptr != text.data() + text.size() || m < 2)
        throw ParseError("order line must hold an integer m >= 2", line_no, tokens[0].column);
      header = m;
      continue;
    }
    std::vector<Rational> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) row.push_back(parse_token(t, line_no));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  if (header && *header != rows.size())
    throw ParseError("order line says " + std::to_string(*header) + " but found " +
                     std::to_string(rows.size()) + " rows");
  return PredistanceMatrix::from_rows(rows);
}

Rational json_entry(const nlohmann::json& value, std::size_t row, std::size_t col) {
  auto where = " at row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what() + where);
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(mpz_class(std::to_string(value.get<std::uint64_t>())))
                                      : Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    // The shortest round-trip decimal is the literal the user most likely wrote.
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value.get<double>());
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
  }
  throw ParseError("matrix entries must be numbers or strings" + where);
}

}  // namespace

MatrixFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view ext) {
    return path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext;
  };
  if (ends_with(".csv")) return MatrixFormat::csv;
  if (ends_with(".json")) return MatrixFormat::json;
  return MatrixFormat::text;
}

PredistanceMatrix parse_matrix(std::string_view input, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::text: return parse_grid(input, ' ');
    case MatrixFormat::csv: return parse_grid(input, ',');
    case MatrixFormat::json: {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(input);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
      if (!doc.is_array() || doc.empty()) throw ParseError("JSON matrix must be a non-empty array of rows");
      std::vector<std::vector<Rational>> rows;
      for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_array()) throw ParseError("JSON row " + std::to_string(i + 1) + " is not an array");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < doc[i].size(); ++j) row.push_back(json_entry(doc[i][j], i, j));
        rows.push_back(std::move(row));
      }
      return PredistanceMatrix::from_rows(rows);
    }
  }
  throw ParseError("unknown matrix format");
}

std::string format_matrix(const PredistanceMatrix& m) {
  std::ostringstream out;
  out << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["family"] = family_name(v.family);
  if (!v.method.empty()) j["method"] = v.method;
  j["accepted"] = v.accepted;
  if (v.n) j["n"] = *v.n;
  if (v.r) j["r"] = *v.r;
  if (v.certificate) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : v.certificate->graph.edges())
      edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", to_string(e.weight)}});
    j["certificate"] = {{"embedding", v.certificate->labels}, {"edges", std::move(edges)}};
  }
  if (v.rejection) {
    std::vector<std::size_t> witness;
    for (auto x : v.rejection->witness) witness.push_back(x + 1);
    j["rejection"] = {{"condition", v.rejection->condition},
                      {"witness", witness},
                      {"values", v.rejection->values}};
    if (!v.rejection->detail.empty()) j["rejection"]["detail"] = v.rejection->detail;
  }
  if (!v.cross_checks.empty()) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [key, value] : v.cross_checks) checks[key] = value;
    j["crossChecks"] = std::move(checks);
  }
  return j;
}

std::string verdict_to_human(const Verdict& v) {
  std::ostringstream out;
  out << family_name(v.family);
  if (!v.method.empty()) out << " (" << v.method << ")";
  out << ": " << (v.accepted ? "ACCEPTED" : "REJECTED") << '\n';
  if (v.n) out << "  n = " << *v.n << '\n';
  if (v.r) out << "  r = " << *v.r << " indecomposable pairs\n";
  for (const auto& step : v.trail)
    out << "  [" << (step.passed ? "pass" : "FAIL") << "] " << step.condition << '\n';
  if (v.rejection) {
    out << "  witness:";
    for (auto x : v.rejection->witness) out << ' ' << x + 1;
    if (!v.rejection->values.empty()) {
      out << "  values:";
      for (const auto& s : v.rejection->values) out << ' ' << s;
    }
    out << '\n';
    if (!v.rejection->detail.empty()) out << "  " << v.rejection->detail << '\n';
  }
  if (v.certificate) {
    out << "  embedding:";
    for (std::size_t i = 0; i < v.certificate->labels.size(); ++i)
      out << ' ' << i + 1 << "->" << v.certificate->labels[i];
    out << '\n';
    out << "  edges:";
    for (const auto& e : v.certificate->graph.edges())
      out << ' ' << e.u + 1 << '-' << e.v + 1 << ':' << to_string(e.weight);
    out << '\n';
  }
  return out.str();
}

}  // namespace metrec
