#include <doctest.h>

#include "oracles.hpp"
#include "rgk/error.hpp"
#include "rgk/invariants.hpp"
#include "rgk/ramsey.hpp"

using namespace rgk;

namespace {

void check_witness(const Graph& g, const ChromaticProfile& prof) {
  REQUIRE(static_cast<int>(prof.witness.size()) == g.order());
  CHECK(oracle::proper(g, prof.witness));
  std::vector<int> size(static_cast<std::size_t>(prof.chi), 0);
  for (int c : prof.witness) {
    REQUIRE(c >= 0);
    REQUIRE(c < prof.chi);
    ++size[static_cast<std::size_t>(c)];
  }
  CHECK(*std::min_element(size.begin(), size.end()) == prof.s);
  CHECK(prof.s >= 1);
  CHECK(prof.s <= g.order() / prof.chi);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("chromatic number fixtures") {
  CHECK(chromatic_number(complete_multipartite(PartSizes::uniform(2, 3))) == 2);
  CHECK(chromatic_number(complete_multipartite(PartSizes::uniform(3, 2))) == 3);
  const Graph fan = join(standard_graph(GraphKind::path, 6), Graph(1));
  CHECK(chromatic_number(fan) == 3);
  CHECK(chromatic_number(standard_graph(GraphKind::cycle, 5)) == 3);
  CHECK(chromatic_number(Graph(4)) == 1);
  CHECK_THROWS_AS(chromatic_number(Graph(0)), PreconditionError);
  CHECK_THROWS_AS(chromatic_number(Graph(17)), PreconditionError);
}

TEST_CASE("surplus fixtures") {
  const Graph fan = join(standard_graph(GraphKind::path, 6), Graph(1));
  CHECK(min_color_class(fan).s == 1);
  const auto k33 = min_color_class(complete_multipartite({3, 3}));
  CHECK(k33.chi == 2);
  CHECK(k33.s == 3);
  const auto c5 = min_color_class(standard_graph(GraphKind::cycle, 5));
  CHECK(c5.chi == 3);
  CHECK(c5.s == 1);
  const auto e4 = min_color_class(Graph(4));
  CHECK(e4.chi == 1);
  CHECK(e4.s == 4);
  // C_6 plus the chord (0,2): the surplus is a minimum over all optimal
  // colorings, not a property of the first one found.
  GraphBuilder b(6);
  for (int i = 0; i < 6; ++i) b.add_edge(i, (i + 1) % 6);
  b.add_edge(0, 2);
  const Graph g = b.build();
  CHECK(min_color_class(g).s == oracle::surplus(g, 3));
}

TEST_CASE("burr bound") {
  CHECK(burr_lower_bound(standard_graph(GraphKind::complete, 3), 4) == 7);
  for (int h = 1; h < 9; ++h) CHECK(burr_lower_bound(standard_graph(GraphKind::complete, 2), h) == h);
  // chi = k+1, s = 1 against a host of order p*alpha + n.
  const Graph k4 = standard_graph(GraphKind::complete, 4);
  const int k = 3, p = 3, alpha = 2, n = 5;
  CHECK(burr_lower_bound(k4, p * alpha + n) == k * (p * alpha + n - 1) + 1);
  CHECK_THROWS_AS(burr_lower_bound(complete_multipartite({3, 3}), 2), PreconditionError);
}

TEST_CASE("chi and s agree with brute force on all graphs up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto prof = min_color_class(g);
      REQUIRE(prof.chi == oracle::chromatic_number(g));
      CHECK(chromatic_number(g) == prof.chi);
      if (n <= 6) CHECK(prof.s == oracle::surplus(g, prof.chi));
      check_witness(g, prof);
    }
  }
}

TEST_CASE("chi agrees with brute force on random 8-vertex graphs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(8, 0.2 + 0.01 * i, rng);
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
  }
}

TEST_CASE("adding an edge never lowers chi") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    const int n = 4 + i % 9;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const auto missing = complement(g).edges();
    if (missing.empty()) continue;
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    const auto [u, v] = missing[rng() % missing.size()];
    b.add_edge(u, v);
    CHECK(chromatic_number(b.build()) >= chromatic_number(g));
  }
}

TEST_CASE("seeing every other class does not force s = 1") {
  // In K_{3,3} every vertex has a neighbor in the other class, yet s = 3.
  const auto prof = min_color_class(complete_multipartite({3, 3}));
  CHECK(prof.chi == 2);
  CHECK(prof.s == 3);
}

TEST_CASE("a singleton class in an optimal coloring sees every other class") {
  // If some optimal coloring has a one-vertex class, that vertex must have a
  // neighbor in every other class, or it could be merged into one of them.
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto prof = min_color_class(g);
      if (prof.s != 1) continue;
      for (Vertex v = 0; v < n; ++v) {
        const int cv = prof.witness[static_cast<std::size_t>(v)];
        if (std::count(prof.witness.begin(), prof.witness.end(), cv) != 1) continue;
        for (int c = 0; c < prof.chi; ++c) {
          if (c == cv) continue;
          bool sees = false;
          for_each_vertex(g.neighbors(v), [&](Vertex u) {
            if (prof.witness[static_cast<std::size_t>(u)] == c) sees = true;
          });
          CHECK(sees);
        }
      }
    }
  }
}

}  // TEST_SUITE
