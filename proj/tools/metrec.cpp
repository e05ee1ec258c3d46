#include <CLI11.hpp>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "metrec/bench.hpp"
#include "metrec/errors.hpp"
#include "metrec/io.hpp"
#include "metrec/oracle.hpp"
#include "metrec/recognizers.hpp"

using namespace metrec;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string family = "auto";
  std::string method = "count";
  std::string mode = "exact";
  std::string eps = "1e-9";
  std::string format;
  std::string output = "json";
  bool bench = false;
  std::vector<std::size_t> sizes{64, 128, 256, 512};
  unsigned reps = 3;
  std::string gen;
  std::uint64_t seed = 0;
  std::string out = ".";
};

int fail(const Options& opt, const std::string& code, const std::string& message,
         json extra = json::object()) {
  if (opt.output == "json") {
    extra["error"] = code;
    extra["message"] = message;
    std::cout << extra.dump(2) << '\n';
  }
  std::cerr << "metrec: " << message << '\n';
  return 2;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run(const Options& opt) {
  PredistanceMatrix p = [&] {
    auto text = read_input(opt.input);
    MatrixFormat format = format_from_path(opt.input);
    if (opt.format == "csv") format = MatrixFormat::csv;
    else if (opt.format == "json") format = MatrixFormat::json;
    else if (opt.format == "text") format = MatrixFormat::text;
    return parse_matrix(text, format);
  }();

  Arithmetic arithmetic;
  if (opt.mode == "float") {
    double eps = parse_rational(opt.eps).get_d();
    if (!(eps > 0)) throw RangeError("--eps must be positive in float mode");
    arithmetic = Arithmetic::tolerant(eps);
  }
  auto d = validate(std::move(p), arithmetic);
  auto verdicts = recognize_family(d, opt.family, opt.method);

  bool accepted = false;
  for (const auto& v : verdicts) accepted = accepted || v.accepted;

  if (opt.output == "human") {
    for (const auto& v : verdicts) std::cout << verdict_to_human(v);
  } else if (verdicts.size() == 1) {
    std::cout << verdict_to_json(verdicts.front()).dump(2) << '\n';
  } else {
    json all = json::array();
    for (const auto& v : verdicts) all.push_back(verdict_to_json(v));
    std::cout << json{{"family", opt.family}, {"accepted", accepted}, {"verdicts", all}}.dump(2)
              << '\n';
  }
  return accepted ? 0 : 1;
}

int run_bench(const Options& opt) {
  auto report = bench(opt.sizes, opt.reps);
  if (opt.output == "human") {
    for (const auto& s : report.samples)
      std::cout << "m=" << s.order << "  " << s.seconds << " s" << (s.accepted ? "" : "  (rejected)")
                << '\n';
    if (!std::isnan(report.slope)) std::cout << "log-log slope: " << report.slope << '\n';
  } else {
    json samples = json::array();
    for (const auto& s : report.samples)
      samples.push_back({{"m", s.order}, {"seconds", s.seconds}, {"accepted", s.accepted}});
    json j{{"samples", samples}};
    j["slope"] = std::isnan(report.slope) ? json(nullptr) : json(report.slope);
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

// "hypercube:3", "petersen", "tree:7", "q3-useless:2", "cycle:10"
int run_gen(const Options& opt) {
  auto colon = opt.gen.find(':');
  std::string name = opt.gen.substr(0, colon);
  std::size_t param = 0;
  if (colon != std::string::npos) param = std::stoul(opt.gen.substr(colon + 1));

  GeneratorSpec spec;
  std::string expect_family;
  bool expect_accept = true;
  if (name == "hypercube") {
    spec = GeneratorSpec::hypercube(static_cast<unsigned>(param ? param : 3), opt.seed);
    expect_family = "hypercube";
  } else if (name == "petersen") {
    spec = GeneratorSpec::petersen(opt.seed);
    expect_family = "petersen";
  } else if (name == "tree") {
    spec = GeneratorSpec::tree(param ? param : 8, opt.seed);
    expect_family = "tree";
  } else if (name == "q3-useless") {
    spec = GeneratorSpec::q3_with_useless(param, opt.seed);
    expect_family = "q3";
  } else if (name == "cycle") {
    spec = GeneratorSpec::cycle(param ? param : 5, opt.seed);
    expect_family = "tree";
    expect_accept = false;
  } else {
    throw SpecError("unknown generator family '" + name + "'");
  }
  auto instance = generate(spec);

  std::string stem = name + (colon == std::string::npos ? "" : "-" + std::to_string(param)) +
                     "-seed" + std::to_string(opt.seed);
  std::filesystem::path dir(opt.out);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / (stem + ".matrix.txt"));
    out << "# " << opt.gen << " seed " << opt.seed << '\n'
        << format_matrix(instance.matrix.predistance());
  }
  json edges = json::array();
  for (const auto& e : instance.graph.edges())
    edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", to_string(e.weight)}});
  json expected{{"generator", opt.gen},
                {"seed", opt.seed},
                {"family", expect_family},
                {"accepted", expect_accept},
                {"graph", {{"edges", edges}}}};
  {
    std::ofstream out(dir / (stem + ".expected.json"));
    out << expected.dump(2) << '\n';
  }
  std::cout << (dir / stem).string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize distance matrices of weighted hypercubes, Q3, Petersen and trees"};
  Options opt;
  app.add_option("input", opt.input, "Matrix file (stdin when omitted or '-')");
  app.add_option("--family", opt.family, "Target family")
      ->check(CLI::IsMember({"hypercube", "q3", "petersen", "tree", "auto"}));
  app.add_option("--method", opt.method, "Hypercube recognizer")
      ->check(CLI::IsMember({"count", "layers", "both"}));
  app.add_option("--mode", opt.mode, "Comparison mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--eps", opt.eps, "Tolerance in float mode");
  app.add_option("--format", opt.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", opt.output, "Output style")->check(CLI::IsMember({"json", "human"}));
  app.add_flag("--bench", opt.bench, "Run the scaling benchmark");
  app.add_option("--sizes", opt.sizes, "Benchmark orders")->delimiter(',');
  app.add_option("--reps", opt.reps, "Benchmark repetitions per size");
  app.add_option("--gen", opt.gen, "Write a fixture: hypercube:n, petersen, tree:m, q3-useless:t, cycle:m");
  app.add_option("--seed", opt.seed, "Generator seed");
  app.add_option("--out", opt.out, "Fixture output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt.bench) return run_bench(opt);
    if (!opt.gen.empty()) return run_gen(opt);
    return run(opt);
  } catch (const ParseError& e) {
    json extra{{"line", e.line()}, {"column", e.column()}};
    std::string where = e.line() ? " (line " + std::to_string(e.line()) + ", column " +
                                       std::to_string(e.column()) + ")"
                                 : "";
    return fail(opt, "parse", e.what() + where, extra);
  } catch (const ShapeError& e) {
    return fail(opt, "shape", e.what(), {{"witness", {e.row() + 1, e.col() + 1}}});
  } catch (const TriangleViolation& e) {
    return fail(opt, "triangle", e.what(),
                {{"witness", {e.i() + 1, e.k() + 1, e.j() + 1}},
                 {"values", {to_string(e.d_ij()), to_string(e.d_ik()), to_string(e.d_kj())}}});
  } catch (const OrderError& e) {
    return fail(opt, e.code(), e.what(), {{"order", e.order()}});
  } catch (const Error& e) {
    return fail(opt, "input", e.what());
  } catch (const std::exception& e) {
    return fail(opt, "internal", e.what());
  }
}
