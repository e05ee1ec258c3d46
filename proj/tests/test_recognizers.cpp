#include <doctest.h>

#include <random>

#include "metrec/errors.hpp"
#include "metrec/io.hpp"
#include "metrec/oracle.hpp"
#include "metrec/shortest_paths.hpp"
#include "oracles.hpp"

using namespace metrec;

namespace {

DistanceMatrix dm(const char* text) { return validate(parse_matrix(text)); }

DistanceMatrix unit(const Graph& g) { return validate(oracle::unit_matrix(g)); }

DistanceMatrix tree8(std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return unit(Graph(8, e));
}

// Re-derives the certificate's distance matrix with the test oracle.
void check_certificate(const DistanceMatrix& d, const Verdict& v) {
  REQUIRE(v.accepted);
  REQUIRE(v.certificate.has_value());
  CHECK_FALSE(v.rejection.has_value());
  CHECK(oracle::distance_matrix(v.certificate->graph) == d.predistance());
  CHECK(v.certificate->labels.size() == d.order());
}

void check_rejection(const Verdict& v, const std::string& condition) {
  CHECK_FALSE(v.accepted);
  CHECK_FALSE(v.certificate.has_value());
  REQUIRE(v.rejection.has_value());
  CHECK(v.rejection->condition == condition);
  REQUIRE_FALSE(v.trail.empty());
  CHECK(v.trail.back().condition == condition);
  CHECK_FALSE(v.trail.back().passed);
}

DistanceMatrix hamiltonian_path_q3() {
  // Gray-code order 0,1,3,2,6,7,5,4 is a Hamiltonian path of Q_3.
  const std::size_t order[] = {0, 1, 3, 2, 6, 7, 5, 4};
  WeightedGraph w(8);
  auto q3 = hypercube(3);
  for (auto [a, b] : q3.edges()) {
    bool on_path = false;
    for (int i = 0; i < 7; ++i)
      on_path = on_path || (std::min(order[i], order[i + 1]) == a && std::max(order[i], order[i + 1]) == b);
    w.add_edge(a, b, on_path ? 1 : 100);
  }
  return apsp(w);
}

}  // namespace

TEST_CASE("unit Q3 through every applicable recognizer") {
  auto d = unit(hypercube(3));
  auto count = recognize_hypercube_by_count(d);
  CHECK(count.n == 3u);
  CHECK(count.r == 12u);
  check_certificate(d, count);
  CHECK(count.certificate->embedding.maps_edges(skeleton(classify(d)), hypercube(3)));
  for (const auto& e : count.certificate->graph.edges()) CHECK(e.weight == 1);

  auto layers = recognize_hypercube_by_layers(d);
  check_certificate(d, layers);
  // For the antipodal pair, three neighbours of y lie in X_2(x).
  auto lp = layer_partition(d, classify(d), 0);
  std::size_t k = 0;
  auto sk = skeleton(classify(d));
  for (auto w : sk.neighbors(7)) k += lp.depth[w] == 2;
  CHECK(k == 3);

  auto q3 = recognize_q3_general(d);
  check_certificate(d, q3);
  CHECK(std::find(q3.cross_checks.begin(), q3.cross_checks.end(),
                  std::pair<std::string, std::string>{"branch", "r=12"}) != q3.cross_checks.end());

  CHECK_FALSE(recognize_tree(d).accepted);
  CHECK_THROWS_AS(recognize_petersen(d), OrderError);
}

TEST_CASE("Q1 accepts any positive weight") {
  auto d = dm("0 5\n5 0\n");
  for (auto v : {recognize_hypercube_by_count(d), recognize_hypercube_by_layers(d)}) {
    check_certificate(d, v);
    CHECK(v.n == 0u + 1u);
    CHECK(v.certificate->graph.edges()[0].weight == 5);
    CHECK(v.certificate->labels.size() == 2);
  }
}

TEST_CASE("order preconditions") {
  auto k3 = dm("0 1 1\n1 0 1\n1 1 0\n");
  try {
    recognize_hypercube_by_count(k3);
    FAIL("expected OrderError");
  } catch (const OrderError& e) {
    CHECK(e.code() == "OrderNotPowerOfTwo");
  }
  CHECK_THROWS_AS(recognize_hypercube_by_layers(k3), OrderError);
  try {
    recognize_petersen(unit(hypercube(3)));
    FAIL("expected OrderError");
  } catch (const OrderError& e) {
    CHECK(e.code() == "OrderNot10");
  }
  try {
    recognize_q3_general(k3);
    FAIL("expected OrderError");
  } catch (const OrderError& e) {
    CHECK(e.code() == "OrderNot8");
  }
}

TEST_CASE("the bipartite 4-regular counterexample is rejected by both routes") {
  auto d = unit(counterexample_graph());
  auto count = recognize_hypercube_by_count(d);
  check_rejection(count, "cubici0.b");
  CHECK(count.rejection->witness == std::vector<std::size_t>{0, 1});
  CHECK(count.rejection->values == std::vector<std::string>{"4"});
  CHECK(count.r == 32u);

  auto layers = recognize_hypercube_by_layers(d);
  check_rejection(layers, "cubici.a");
  REQUIRE(layers.rejection->witness.size() == 2);
  auto [x, y] = std::pair{layers.rejection->witness[0], layers.rejection->witness[1]};
  CHECK(oracle::common_neighbours(counterexample_graph(), x, y) == 4);
  CHECK(layers.rejection->values == std::vector<std::string>{"2", "4"});
}

TEST_CASE("weighted 8-cycle fails the layer count") {
  auto inst = generate(GeneratorSpec::cycle(8, 4));
  auto layers = recognize_hypercube_by_layers(inst.matrix);
  check_rejection(layers, "cubici.a");
  // On a cycle every vertex past the base has exactly one neighbour a layer closer.
  const auto& w = layers.rejection->witness;
  auto lp = layer_partition(skeleton(classify(inst.matrix)), w[0]);
  CHECK(layers.rejection->values ==
        std::vector<std::string>{std::to_string(lp.depth[w[1]]), "1"});
  CHECK(lp.depth[w[1]] >= 2);
  auto count = recognize_hypercube_by_count(inst.matrix);
  check_rejection(count, "cubici0.a");
  CHECK(count.rejection->values == std::vector<std::string>{"8", "12"});
}

TEST_CASE("odd cycles are reported by the layer route") {
  // Whenever the layer route blames (b), its witness is an odd cycle.
  std::mt19937_64 rng(21);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 5; ++t) {
    auto inst = generate(GeneratorSpec::hypercube(2 + rng() % 2, rng()));
    auto mutant = mutate(inst.matrix, random_mutation(inst.matrix, rng));
    try {
      auto d = validate(mutant);
      auto v = recognize_hypercube_by_layers(d);
      if (v.rejection && v.rejection->condition == "cubici.b") {
        ++seen;
        CHECK(v.rejection->witness.size() % 2 == 1);
      }
    } catch (const TriangleViolation&) {
    }
  }
}

TEST_CASE("Hamiltonian-path weighting of Q3 takes the r=7 branch") {
  auto d = hamiltonian_path_q3();
  auto c = classify(d);
  CHECK(c.indecomposable_count() == 7);
  auto v = recognize_q3_general(d);
  check_certificate(d, v);
  CHECK(v.r == 7u);
  CHECK(d.max_entry() == 7);
  std::size_t ones = 0, fourteens = 0;
  for (const auto& e : v.certificate->graph.edges()) {
    ones += e.weight == 1;
    fourteens += e.weight == 14;
  }
  CHECK(ones == 7);
  CHECK(fourteens == 5);
  CHECK_FALSE(recognize_hypercube_by_count(d).accepted);
}

TEST_CASE("7-edge trees outside Q3 are rejected in the r=7 branch") {
  // St(1,3,3): leaf-to-leaf lengths 4, 4, 6.
  auto st133 = recognize_q3_general(tree8({{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}}));
  check_rejection(st133, "q3.r7.oddpath");
  CHECK(st133.rejection->values == std::vector<std::string>{"4", "4", "6"});
  // St(1,1,5)
  check_rejection(recognize_q3_general(tree8({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}})),
                  "q3.r7.oddpath");
  // Br(1|2,2|1,1)
  check_rejection(recognize_q3_general(tree8({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {5, 7}})),
                  "q3.r7.oddpath");
  // Br(2|1,1|1,2)
  auto br = recognize_q3_general(tree8({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}}));
  check_rejection(br, "q3.r7.deg3adjacency");
  CHECK(br.rejection->witness == std::vector<std::size_t>{0, 4});
  // Three degree-3 vertices in a row: a leaf path of length 3 exists, but the
  // two outer ones are two steps apart.
  check_rejection(recognize_q3_general(tree8({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}})),
                  "q3.r7.deg3adjacency");
}

TEST_CASE("7-edge trees inside Q3 are accepted") {
  for (auto edges : {std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
                     std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}},     // St(1,2,4)
                     std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}},     // St(2,2,3)
                     std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {4, 6}, {6, 7}},     // Br(1|1,2|1,2)
                     std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {5, 7}},     // Br(1|1,3|1,1)
                     // degree-3 vertices three steps apart: 000 and 111 through 100, 110
                     std::vector<Edge>{{0, 1}, {0, 6}, {0, 7}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}}) {
    auto d = unit(Graph(8, edges));
    auto v = recognize_q3_general(d);
    check_certificate(d, v);
  }
}

TEST_CASE("q3 with useless edges covers every r from 7 to 12") {
  for (std::size_t t = 0; t <= 5; ++t) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = generate(GeneratorSpec::q3_with_useless(t, seed));
      auto v = recognize_q3_general(inst.matrix);
      CHECK(v.r == 12 - t);
      check_certificate(inst.matrix, v);
      if (t >= 1 && t <= 4)
        CHECK(std::find(v.cross_checks.begin(), v.cross_checks.end(),
                        std::pair<std::string, std::string>{"branch", "r=8..11"}) != v.cross_checks.end());
    }
  }
}

TEST_CASE("q3 rejects degree and count violations") {
  // K_{1,7}: the centre has 7 indecomposable entries.
  auto star = recognize_q3_general(tree8({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}));
  check_rejection(star, "q3.a");
  CHECK(star.rejection->witness == std::vector<std::size_t>{0});
  // K_{2,3} plus a pendant path has a vertex pair with 3 common neighbours.
  Graph k23(8, std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {6, 7}});
  auto bad = recognize_q3_general(unit(k23));
  check_rejection(bad, "q3.r8_11.completion");
}

TEST_CASE("spanning subgraphs of Q3 with 8 to 11 edges are accepted") {
  // Two 4-cycles joined by one edge.
  Graph g(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}});
  auto d = unit(g);
  check_certificate(d, recognize_q3_general(d));
  // A Hamiltonian 8-cycle: all eight vertices are deficient.
  auto cyc = generate(GeneratorSpec::cycle(8, 1));
  auto v = recognize_q3_general(cyc.matrix);
  check_certificate(cyc.matrix, v);
  CHECK(v.r == 8u);
}

TEST_CASE("Petersen") {
  auto d = unit(petersen());
  auto v = recognize_petersen(d);
  check_certificate(d, v);
  for (const auto& e : v.certificate->graph.edges()) CHECK(e.weight == 1);
  CHECK(v.certificate->labels[0] == "v1");

  auto cycle = generate(GeneratorSpec::cycle(10, 3));
  auto c = recognize_petersen(cycle.matrix);
  check_rejection(c, "petersen.a");
  CHECK(c.rejection->values == std::vector<std::string>{"2"});

  // Entry (1,3) lowered from 2 to 1.
  auto p = d.predistance();
  std::vector<Rational> e(p.entries().begin(), p.entries().end());
  e[0 * 10 + 2] = e[2 * 10 + 0] = 1;
  auto mutated = recognize_petersen(validate(PredistanceMatrix(10, e)));
  CHECK_FALSE(mutated.accepted);
  REQUIRE(mutated.rejection.has_value());
  CHECK(mutated.rejection->condition.rfind("petersen.", 0) == 0);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = generate(GeneratorSpec::petersen(seed));
    check_certificate(inst.matrix, recognize_petersen(inst.matrix));
  }
}

TEST_CASE("Petersen (b) agrees with the literal short-run condition") {
  std::mt19937_64 rng(13);
  int checked = 0, rejected_b = 0;
  for (int t = 0; t < 200; ++t) {
    auto inst = generate(GeneratorSpec::petersen(rng()));
    auto mutant = mutate(inst.matrix, random_mutation(inst.matrix, rng));
    std::vector<DistanceMatrix> cases{inst.matrix};
    try {
      cases.push_back(validate(mutant));
    } catch (const TriangleViolation&) {
    }
    if (t % 2 == 0) {
      // The pentagonal prism is cubic with 4-cycles.
      std::vector<Edge> prism;
      for (std::size_t i = 0; i < 5; ++i)
        prism.insert(prism.end(), {{i, (i + 1) % 5}, {5 + i, 5 + (i + 1) % 5}, {i, 5 + i}});
      cases.push_back(validate(oracle::distance_matrix(oracle::random_weights(Graph(10, prism), rng))));
    }
    for (const auto& d : cases) {
      auto v = recognize_petersen(d);
      auto g = skeleton(classify(d));
      bool literal_b = !oracle::has_short_closed_run(g);
      bool a_holds = true;
      for (std::size_t x = 0; x < 10; ++x) a_holds = a_holds && g.degree(x) == 3;
      if (!a_holds) continue;
      ++checked;
      rejected_b += !literal_b;
      CHECK((v.rejection && v.rejection->condition == "petersen.b") == !literal_b);
    }
  }
  CHECK(checked > 0);
  CHECK(rejected_b > 0);
}

TEST_CASE("trees") {
  auto path = dm("0 1 3\n1 0 2\n3 2 0\n");
  auto v = recognize_tree(path);
  check_certificate(path, v);
  CHECK(v.certificate->graph.edges().size() == 2);

  auto k3 = recognize_tree(dm("0 1 1\n1 0 1\n1 1 0\n"));
  check_rejection(k3, "tree.median");
  CHECK(k3.rejection->witness == std::vector<std::size_t>{0, 1, 2});

  auto q2 = recognize_tree(unit(hypercube(2)));
  check_rejection(q2, "tree.fourpoint");
  CHECK(q2.rejection->witness == std::vector<std::size_t>{0, 1, 2, 3});

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = generate(GeneratorSpec::tree(2 + seed % 9, seed));
    check_certificate(inst.matrix, recognize_tree(inst.matrix));
  }
}

TEST_CASE("auto dispatch") {
  auto k3 = dm("0 1 1\n1 0 1\n1 1 0\n");
  auto all = recognize_family(k3, "auto");
  REQUIRE(all.size() == 5);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) check_rejection(all[i], "order");
  check_rejection(all.back(), "tree.median");

  auto q3 = recognize_family(unit(hypercube(3)), "auto");
  REQUIRE(q3.size() == 5);
  CHECK(q3[0].accepted);
  CHECK(q3[1].accepted);
  CHECK(q3[2].accepted);
  check_rejection(q3[3], "order");
  CHECK_FALSE(q3[4].accepted);

  CHECK(recognize_family(unit(hypercube(3)), "hypercube", "both").size() == 2);
  CHECK(recognize_family(unit(hypercube(3)), "hypercube", "layers")[0].method == "layers");
  CHECK_THROWS_AS(recognize_family(k3, "petersen"), OrderError);
}

TEST_CASE("verdicts are invariant under positive scaling") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    auto inst = t % 2 ? generate(GeneratorSpec::hypercube(3, rng())) : generate(GeneratorSpec::petersen(rng()));
    PredistanceMatrix p = inst.matrix.predistance();
    if (t % 3 == 0) p = mutate(inst.matrix, random_mutation(inst.matrix, rng));
    std::optional<DistanceMatrix> d;
    try {
      d = validate(p);
    } catch (const TriangleViolation&) {
      continue;
    }
    Rational q(static_cast<long>(rng() % 50 + 1), static_cast<unsigned long>(rng() % 50 + 1));
    q.canonicalize();
    std::vector<Rational> e(p.entries().begin(), p.entries().end());
    for (auto& x : e) x *= q;
    auto dq = validate(PredistanceMatrix(p.order(), e));
    for (const auto& family : {"auto"}) {
      auto a = recognize_family(*d, family);
      auto b = recognize_family(dq, family);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].accepted == b[i].accepted);
        if (a[i].rejection && b[i].rejection) CHECK(a[i].rejection->condition == b[i].rejection->condition);
      }
    }
  }
}

TEST_CASE("every n=3 hypercube accept is a Q3-general accept") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    auto inst = generate(GeneratorSpec::hypercube(3, rng()));
    auto p = t % 2 ? inst.matrix.predistance() : mutate(inst.matrix, random_mutation(inst.matrix, rng));
    try {
      auto d = validate(p);
      if (recognize_hypercube_by_count(d).accepted) CHECK(recognize_q3_general(d).accepted);
    } catch (const TriangleViolation&) {
    }
  }
}

TEST_CASE("reconstruction refuses a wrong embedding") {
  auto inst = generate(GeneratorSpec::hypercube(3, 7));
  Embedding identity{{0, 1, 2, 3, 4, 5, 6, 7}};
  auto good = recognize_hypercube_by_count(inst.matrix).certificate->embedding;
  CHECK_NOTHROW(reconstruct_and_verify(inst.matrix, Family::hypercube_all_useful, good));
  if (!identity.maps_edges(skeleton(classify(inst.matrix)), hypercube(3)))
    CHECK_THROWS_AS(reconstruct_and_verify(inst.matrix, Family::hypercube_all_useful, identity),
                    std::logic_error);
}

TEST_CASE("float mode") {
  // Unit Q3 with a little measurement noise.
  auto base = unit(hypercube(3));
  std::mt19937_64 rng(23);
  std::vector<Rational> e(base.predistance().entries().begin(), base.predistance().entries().end());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      Rational noise(static_cast<long>(rng() % 21) - 10, 1000000000000L);
      e[i * 8 + j] += noise;
      e[j * 8 + i] = e[i * 8 + j];
    }
  PredistanceMatrix noisy(8, e);
  auto loose = validate(noisy, Arithmetic::tolerant(1e-9));
  auto v = recognize_hypercube_by_count(loose);
  CHECK(v.accepted);
  CHECK(v.r == 12u);
}
