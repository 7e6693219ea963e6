#include "rgk/colorings.hpp"

#include "rgk/error.hpp"
#include "rgk/goodness.hpp"

namespace rgk {

namespace {

std::string join_ints(std::span<const int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

Graph cliques(std::span<const int> sizes) {
  std::vector<Graph> blocks;
  for (int s : sizes) blocks.push_back(standard_graph(GraphKind::complete, s));
  return disjoint_union(blocks);
}

}  // namespace

bool TwoColoring::is_complementary() const {
  if (red.order() != blue.order()) return false;
  for (Vertex v = 0; v < red.order(); ++v) {
    const VertexSet r = red.rows()[static_cast<std::size_t>(v)];
    const VertexSet b = blue.rows()[static_cast<std::size_t>(v)];
    if ((r & b) != 0 || (r | b) != (red.vertices() & ~bit(v))) return false;
  }
  return true;
}

TwoColoring TwoColoring::from_red(Graph red) {
  Graph blue = complement(red);
  return {std::move(red), std::move(blue)};
}

TwoColoring TwoColoring::from_blue(Graph blue) {
  Graph red = complement(blue);
  return {std::move(red), std::move(blue)};
}

NecessityParams NecessityParams::make(int alpha, int p, int k, int n, int h, Graph tree) {
  if (alpha < 1) throw PreconditionError("alpha must be at least 1");
  if (k < 1 || n < 1 || h < 1) throw PreconditionError("k, n and h must be at least 1");
  NecessityParams out;
  out.alpha = alpha;
  out.p = p;
  out.k = k;
  out.n = n;
  out.h = h;
  out.snd = rgk::snd(alpha);
  if (p < out.snd)
    throw HypothesisError("p >= snd(alpha)",
                          "p = " + std::to_string(p) + ", snd = " + std::to_string(out.snd));
  if (!is_tree(tree)) throw PreconditionError("necessity coloring needs a tree");
  if (tree.order() != out.snd)
    throw PreconditionError("tree has " + std::to_string(tree.order()) +
                            " vertices, snd(alpha) = " + std::to_string(out.snd));
  out.tree = std::move(tree);
  const long long block = static_cast<long long>(p) * alpha + static_cast<long long>(n) * h;
  const long long order = static_cast<long long>(k) * (block - 1) + 1;
  if (order > kMaxOrder)
    throw PreconditionError("coloring order " + std::to_string(order) + " exceeds " +
                            std::to_string(kMaxOrder));
  out.q = static_cast<int>(block % out.snd);
  out.t = static_cast<int>(block / out.snd);
  if (out.t < 1) throw PreconditionError("no tree copy fits in the large block");
  return out;
}

TwoColoring burr_coloring(const ChromaticProfile& profile, int h_order) {
  if (profile.chi < 2) throw PreconditionError("burr coloring needs chi >= 2");
  if (h_order < profile.s)
    throw PreconditionError("burr coloring needs v(H) >= s(G) = " + std::to_string(profile.s));
  std::vector<int> blocks(static_cast<std::size_t>(profile.chi - 1), h_order - 1);
  blocks.push_back(profile.s - 1);
  return TwoColoring::from_blue(cliques(blocks));
}

TwoColoring necessity_coloring(const NecessityParams& params) {
  const int big = params.block();
  std::vector<int> blocks(static_cast<std::size_t>(params.k - 1), big - 1);
  blocks.push_back(big);
  GraphBuilder blue(params.order());
  for (auto [u, v] : cliques(blocks).edges()) blue.add_edge(u, v);
  Graph blue_graph = blue.build();

  // Delete the tree copies from the last clique.
  std::vector<VertexSet> rows(blue_graph.rows().begin(), blue_graph.rows().end());
  const int offset = (params.k - 1) * (big - 1);
  for (int copy = 0; copy < params.t; ++copy) {
    const int base = offset + copy * params.snd;
    for (auto [u, v] : params.tree.edges()) {
      rows[static_cast<std::size_t>(base + u)] &= ~bit(base + v);
      rows[static_cast<std::size_t>(base + v)] &= ~bit(base + u);
    }
  }
  return TwoColoring::from_blue(Graph::from_rows(std::move(rows)));
}

Graph necessity_red_model(const NecessityParams& params) {
  const Graph forest = disjoint_union({copies(params.tree, params.t),
                                       standard_graph(GraphKind::empty, params.q)});
  if (params.k == 1) return forest;
  return join(forest, complete_multipartite(PartSizes::uniform(params.k - 1, params.block() - 1)));
}

HostSymmetry necessity_red_symmetry(const NecessityParams& params) {
  HostSymmetry sym;
  const int big = params.block();
  BlockFamily clique_blocks;
  for (int b = 0; b < params.k - 1; ++b) {
    std::vector<Vertex> block;
    for (int i = 0; i < big - 1; ++i) block.push_back(b * (big - 1) + i);
    clique_blocks.blocks.push_back(std::move(block));
  }
  BlockFamily tree_copies;
  const int offset = (params.k - 1) * (big - 1);
  for (int copy = 0; copy < params.t; ++copy) {
    std::vector<Vertex> block;
    for (int i = 0; i < params.snd; ++i) block.push_back(offset + copy * params.snd + i);
    tree_copies.blocks.push_back(std::move(block));
  }
  if (clique_blocks.blocks.size() > 1) sym.families.push_back(std::move(clique_blocks));
  if (tree_copies.blocks.size() > 1) sym.families.push_back(std::move(tree_copies));
  return sym;
}

PartSizes necessity_target_parts(const NecessityParams& params) {
  std::vector<int> parts(static_cast<std::size_t>(params.p), params.alpha);
  parts.push_back(params.n * params.h);
  return PartSizes(std::move(parts));
}

BlueCheck verify_no_blue_target(const TwoColoring& c, const PartSizes& parts,
                                std::optional<std::uint64_t> budget) {
  BlueCheck out;
  const int need = parts.total();
  if (need > c.order()) {
    out.absent = true;
    out.explanation = "target needs " + std::to_string(need) + " vertices, coloring has " +
                      std::to_string(c.order());
    return out;
  }
  out.witness = contains_multipartite(c.blue, parts, budget);
  if (out.witness) {
    out.explanation = "blue target present";
    return out;
  }
  out.absent = true;

  // Reconstruct why, component by component.
  std::vector<std::string> reasons;
  int small = 0;
  const auto comps = parts.count() > 1 ? connected_components(c.blue)
                                       : std::vector<std::vector<Vertex>>{};
  for (const auto& comp : comps) {
    const int size = static_cast<int>(comp.size());
    if (size < need) {
      ++small;
    } else if (size == need) {
      const auto sizes = complement_component_sizes(c.blue, comp);
      reasons.push_back("components " + join_ints(sizes) + " vs bins " + join_ints(parts.parts()));
    } else {
      reasons.push_back("no placement in a blue component of order " + std::to_string(size));
    }
  }
  if (small > 0)
    reasons.push_back(std::to_string(small) + " blue component(s) with fewer than " +
                      std::to_string(need) + " vertices");
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    if (i) out.explanation += "; ";
    out.explanation += reasons[i];
  }
  return out;
}

RedCheck red_avoids(const TwoColoring& c, const Graph& g, const SearchOptions& options) {
  RedCheck out;
  out.witness = find_embedding(g, c.red, options);
  out.avoids = !out.witness.has_value();
  return out;
}

}  // namespace rgk
