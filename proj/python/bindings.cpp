#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metrec/bench.hpp"
#include "metrec/errors.hpp"
#include "metrec/io.hpp"
#include "metrec/oracle.hpp"
#include "metrec/recognizers.hpp"

namespace py = pybind11;
using namespace metrec;

namespace {

MatrixFormat format_of(const std::string& name) {
  if (name == "text") return MatrixFormat::text;
  if (name == "csv") return MatrixFormat::csv;
  if (name == "json") return MatrixFormat::json;
  throw std::invalid_argument("format must be text, csv or json");
}

DistanceMatrix load(const std::string& text, const std::string& format, const std::string& mode,
                    double eps) {
  auto p = parse_matrix(text, format_of(format));
  if (mode == "float") return validate(std::move(p), Arithmetic::tolerant(eps));
  if (mode != "exact") throw std::invalid_argument("mode must be exact or float");
  return validate(std::move(p));
}

GeneratorSpec spec_of(const std::string& family, std::size_t param, std::uint64_t seed) {
  if (family == "hypercube") return GeneratorSpec::hypercube(static_cast<unsigned>(param), seed);
  if (family == "petersen") return GeneratorSpec::petersen(seed);
  if (family == "tree") return GeneratorSpec::tree(param, seed);
  if (family == "q3-useless") return GeneratorSpec::q3_with_useless(param, seed);
  if (family == "cycle") return GeneratorSpec::cycle(param, seed);
  throw std::invalid_argument("unknown generator family " + family);
}

}  // namespace

PYBIND11_MODULE(_metrec, m) {
  m.doc() = "Distance-matrix recognizers (native core)";

  auto error = py::register_exception<Error>(m, "MetrecError", PyExc_ValueError);
  py::register_exception<TriangleViolation>(m, "TriangleViolation", error);
  py::register_exception<OrderError>(m, "OrderError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  m.def(
      "recognize",
      [](const std::string& text, const std::string& family, const std::string& method,
         const std::string& format, const std::string& mode, double eps) {
        auto d = load(text, format, mode, eps);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : recognize_family(d, family, method)) out.push_back(verdict_to_json(v));
        return out.dump();
      },
      py::arg("text"), py::arg("family") = "auto", py::arg("method") = "count",
      py::arg("format") = "text", py::arg("mode") = "exact", py::arg("eps") = 1e-9);

  m.def(
      "canonical",
      [](const std::string& text, const std::string& format) {
        return format_matrix(parse_matrix(text, format_of(format)));
      },
      py::arg("text"), py::arg("format") = "text");

  m.def(
      "generate",
      [](const std::string& family, std::size_t param, std::uint64_t seed) {
        return format_matrix(generate(spec_of(family, param, seed)).matrix.predistance());
      },
      py::arg("family"), py::arg("param") = 0, py::arg("seed") = 0);

  m.def(
      "indecomposable_pairs",
      [](const std::string& text, const std::string& format) {
        auto d = load(text, format, "exact", 0);
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : classify(d).indecomposable_pairs()) out.emplace_back(e.first + 1, e.second + 1);
        return out;
      },
      py::arg("text"), py::arg("format") = "text");

  m.def(
      "bench",
      [](const std::vector<std::size_t>& sizes, unsigned reps) {
        auto report = bench(sizes, reps);
        std::vector<std::pair<std::size_t, double>> samples;
        for (const auto& s : report.samples) samples.emplace_back(s.order, s.seconds);
        return std::make_pair(samples, report.slope);
      },
      py::arg("sizes"), py::arg("reps") = 1);
}
