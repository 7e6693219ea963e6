#pragma once

#include <optional>
#include <string>

#include "rgk/embedding.hpp"
#include "rgk/graph.hpp"
#include "rgk/invariants.hpp"

namespace rgk {

// Red/blue edge coloring of K_N, kept as the two color graphs.
struct TwoColoring {
  Graph red;
  Graph blue;

  int order() const noexcept { return red.order(); }
  bool is_complementary() const;

  static TwoColoring from_red(Graph red);
  static TwoColoring from_blue(Graph blue);
};

// Parameters of the extremal coloring of K_N, N = k(p*alpha + n*h - 1) + 1,
// whose blue graph is (k-1) K_{B-1} together with K_B minus t disjoint
// copies of `tree`, B = p*alpha + n*h = t*snd(alpha) + q.
struct NecessityParams {
  int alpha = 0;
  int p = 0;
  int k = 0;
  int n = 0;
  int h = 0;
  Graph tree;
  int snd = 0;
  int t = 0;
  int q = 0;

  // Validates and derives snd, t, q. Requires a tree on snd(alpha)
  // vertices, p >= snd(alpha), k, n, h >= 1 and N <= 62.
  static NecessityParams make(int alpha, int p, int k, int n, int h, Graph tree);

  int block() const noexcept { return p * alpha + n * h; }
  int order() const noexcept { return k * (block() - 1) + 1; }
  int case_number() const noexcept { return q == 0 ? 1 : 2; }
};

// Burr's witness for r(G, H) > (chi-1)(v(H)-1) + s - 1: blue is (chi-1)
// disjoint K_{h_order-1} plus a K_{s-1}, red is complete multipartite
// across those blocks.
TwoColoring burr_coloring(const ChromaticProfile& profile, int h_order);

// Vertex layout: the k-1 clique blocks first, then the B-block whose first
// t*snd vertices carry the deleted tree copies, q leftover vertices last.
TwoColoring necessity_coloring(const NecessityParams& params);

// (tT u qK_1) + K_{k-1}(B-1), assembled from the graph constructors alone.
Graph necessity_red_model(const NecessityParams& params);

// Block symmetries of the red graph of necessity_coloring (tree copies,
// clique blocks), for use with find_embedding.
HostSymmetry necessity_red_symmetry(const NecessityParams& params);

// Multipartite skeleton K_{alpha,...,alpha, n*h} of the blue target
// K_p(alpha) + nH; for h = 1 this is the target itself.
PartSizes necessity_target_parts(const NecessityParams& params);

struct BlueCheck {
  bool absent = false;
  std::string explanation;
  std::optional<PartAssignment> witness;
};

// Is the complete multipartite graph `parts` absent from the blue graph?
BlueCheck verify_no_blue_target(const TwoColoring& c, const PartSizes& parts,
                                std::optional<std::uint64_t> budget = {});

struct RedCheck {
  bool avoids = false;
  std::optional<Embedding> witness;
};

RedCheck red_avoids(const TwoColoring& c, const Graph& g, const SearchOptions& options = {});

}  // namespace rgk
