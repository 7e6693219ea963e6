#include <doctest.h>

#include "oracles.hpp"
#include "rgk/colorings.hpp"
#include "rgk/error.hpp"
#include "rgk/goodness.hpp"
#include "rgk/invariants.hpp"
#include "rgk/ramsey.hpp"
#include "rgk/trees.hpp"

using namespace rgk;

namespace {

Graph path(int n) { return standard_graph(GraphKind::path, n); }
Graph complete(int n) { return standard_graph(GraphKind::complete, n); }

// Does `g` contain some connected subgraph on `order` vertices? Equivalent
// to having a component of at least that order.
bool has_connected_subgraph(const Graph& g, int order) {
  for (const auto& c : connected_components(g))
    if (static_cast<int>(c.size()) >= order) return true;
  return false;
}

}  // namespace

TEST_SUITE("colorings") {

TEST_CASE("burr coloring for K_3 against order 4") {
  const auto prof = min_color_class(complete(3));
  const TwoColoring c = burr_coloring(prof, 4);
  CHECK(c.order() == 6);
  CHECK(c.is_complementary());
  CHECK(isomorphic(c.blue, copies(complete(3), 2)));
  CHECK(isomorphic(c.red, complete_multipartite({3, 3})));
  CHECK_FALSE(find_embedding(complete(3), c.red));
  CHECK_FALSE(has_connected_subgraph(c.blue, 4));
}

TEST_CASE("burr coloring shapes") {
  const auto k2 = min_color_class(complete(2));
  for (int h = 1; h <= 8; ++h) {
    const TwoColoring c = burr_coloring(k2, h);
    CHECK(c.order() == h - 1);
    CHECK(c.red.edge_count() == 0);
  }
  // chi = k+1, s = 1, h = p*alpha + n: one less than the claimed value.
  const auto k4 = min_color_class(complete(4));
  const int p = 3, alpha = 2, n = 2;
  CHECK(burr_coloring(k4, p * alpha + n).order() == 3 * (p * alpha + n - 1));
  // s = 2 adds a blue block of order s - 1.
  const auto c4 = min_color_class(standard_graph(GraphKind::cycle, 4));
  REQUIRE(c4.s == 2);
  const TwoColoring c = burr_coloring(c4, 3);
  CHECK(c.order() == 3);
  CHECK_FALSE(find_embedding(standard_graph(GraphKind::cycle, 4), c.red));
  CHECK_FALSE(has_connected_subgraph(c.blue, 3));
  CHECK_THROWS_AS(burr_coloring(c4, 1), PreconditionError);
}

TEST_CASE("burr coloring avoids both graphs on all small pairs") {
  int pairs = 0;
  for (int gn = 2; gn <= 5; ++gn)
    for (const Graph& g : enumerate_graphs(gn)) {
      const auto prof = min_color_class(g);
      if (prof.chi < 2) continue;
      for (int hn = 1; hn <= 5; ++hn)
        for (const Graph& h : enumerate_graphs(hn)) {
          if (!is_connected(h) || hn < prof.s) continue;
          const TwoColoring c = burr_coloring(prof, hn);
          INFO(encode_graph6(g), " vs ", encode_graph6(h));
          CHECK(c.order() == burr_lower_bound(prof, hn) - 1);
          CHECK(c.is_complementary());
          CHECK_FALSE(oracle::contains(g, c.red));
          CHECK_FALSE(oracle::contains(h, c.blue));
          ++pairs;
        }
    }
  CHECK(pairs > 1000);
}

TEST_CASE("necessity coloring, tree copies fill the last block") {
  const auto params = NecessityParams::make(2, 3, 1, 3, 1, path(3));
  CHECK(params.t == 3);
  CHECK(params.q == 0);
  CHECK(params.case_number() == 1);
  const TwoColoring c = necessity_coloring(params);
  CHECK(c.order() == 9);
  CHECK(c.is_complementary());
  CHECK(c.red == copies(path(3), 3));
  CHECK(isomorphic(c.red, necessity_red_model(params)));
  const BlueCheck blue = verify_no_blue_target(c, necessity_target_parts(params));
  CHECK(blue.absent);
  CHECK(blue.explanation == "components 3,3,3 vs bins 2,2,2,3");
}

TEST_CASE("necessity coloring with leftover vertices") {
  const auto params = NecessityParams::make(2, 3, 2, 4, 1, path(3));
  CHECK(params.block() == 10);
  CHECK(params.q == 1);
  CHECK(params.t == 3);
  CHECK(params.order() == 19);
  const TwoColoring c = necessity_coloring(params);
  CHECK(c.is_complementary());
  CHECK(isomorphic(c.red, necessity_red_model(params), kMaxOrder));
  CHECK(symmetry_is_valid(c.red, necessity_red_symmetry(params)));
  const BlueCheck blue = verify_no_blue_target(c, necessity_target_parts(params));
  CHECK(blue.absent);
  CHECK(blue.explanation.find("components 3,3,3,1 vs bins 2,2,2,4") != std::string::npos);
}

TEST_CASE("necessity parameter checks") {
  CHECK_THROWS_AS(NecessityParams::make(2, 3, 1, 3, 1, complete(2)), PreconditionError);
  CHECK_THROWS_AS(NecessityParams::make(2, 2, 1, 3, 1, path(3)), HypothesisError);
  CHECK_THROWS_AS(NecessityParams::make(2, 3, 1, 3, 1, standard_graph(GraphKind::cycle, 3)),
                  PreconditionError);
  CHECK_THROWS_AS(NecessityParams::make(2, 3, 4, 20, 1, path(3)), PreconditionError);
  CHECK_THROWS_AS(NecessityParams::make(2, 3, 0, 3, 1, path(3)), PreconditionError);
}

TEST_CASE("blue target check") {
  const TwoColoring all_blue = TwoColoring::from_blue(complete(6));
  const BlueCheck present = verify_no_blue_target(all_blue, {2, 2, 2});
  CHECK_FALSE(present.absent);
  REQUIRE(present.witness);
  CHECK(verify_part_assignment(all_blue.blue, {2, 2, 2}, *present.witness));
  CHECK(verify_no_blue_target(all_blue, {3, 4}).absent);
}

TEST_CASE("red side") {
  const auto params = NecessityParams::make(3, 2, 1, 3, 1, complete(2));
  const TwoColoring c = necessity_coloring(params);
  CHECK(c.red.max_degree() == 1);
  const RedCheck p3 = red_avoids(c, path(3));
  CHECK(p3.avoids);
  CHECK_FALSE(p3.witness);
  const RedCheck k2 = red_avoids(c, complete(2));
  CHECK_FALSE(k2.avoids);
  REQUIRE(k2.witness);
  CHECK(verify_embedding(complete(2), c.red, *k2.witness));

  // (2K_{1,2} u K_1) + K_1(6): holds a triangle but not the fan, whose
  // center would need a path on six vertices among its neighbors.
  const auto fp = NecessityParams::make(2, 3, 2, 1, 1, path(3));
  const TwoColoring fc = necessity_coloring(fp);
  const HostSymmetry sym = necessity_red_symmetry(fp);
  const RedCheck tri = red_avoids(fc, complete(3), {std::nullopt, &sym});
  CHECK_FALSE(tri.avoids);
  REQUIRE(tri.witness);
  CHECK(verify_embedding(complete(3), fc.red, *tri.witness));
  const Graph fan = join(path(6), Graph(1));
  CHECK(red_avoids(fc, fan, {std::nullopt, &sym}).avoids);
  CHECK(red_avoids(fc, fan).avoids);
}

TEST_CASE("grid: complementary, red model, no blue target") {
  for (int alpha : {1, 2, 3}) {
    const int p = snd(alpha);
    for (int k : {1, 2})
      for (int n = 1; n <= 6; ++n)
        for (const Graph& tree : enumerate_free_trees(snd(alpha)).trees) {
          const auto params = NecessityParams::make(alpha, p, k, n, 1, tree);
          CHECK(params.t * params.snd + params.q == params.block());
          const TwoColoring c = necessity_coloring(params);
          CHECK(c.is_complementary());
          CHECK(canonical_form(c.red, kMaxOrder) == canonical_form(necessity_red_model(params), kMaxOrder));
          CHECK(verify_no_blue_target(c, necessity_target_parts(params)).absent);
        }
  }
}

TEST_CASE("h > 1 uses the multipartite skeleton") {
  const auto params = NecessityParams::make(2, 3, 1, 2, 3, path(3));
  CHECK(necessity_target_parts(params).to_string() == "[2,2,2,6]");
  const TwoColoring c = necessity_coloring(params);
  CHECK(verify_no_blue_target(c, necessity_target_parts(params)).absent);
}

}  // TEST_SUITE
