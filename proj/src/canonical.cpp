// Canonical labeling by individualization-refinement.
//
// Every node of the search tree holds an ordered vertex coloring that is
// equitable (each vertex of a cell sees the same number of neighbors in
// every cell). Non-discrete nodes branch on the first non-singleton cell;
// discrete leaves induce a relabeling, and the smallest relabeled adjacency
// matrix over all leaves is the canonical form.
//
// Branches are pruned only through twins (vertices with equal neighborhoods
// apart from each other): swapping two twins of the target cell is an
// automorphism fixing the current coloring, so their subtrees yield the same
// set of leaf matrices.

#include <algorithm>
#include <numeric>

#include "rgk/error.hpp"
#include "rgk/graph.hpp"

namespace rgk {

namespace {

using Coloring = std::vector<int>;
using Matrix = std::vector<VertexSet>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    twin_lower_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u = 0; u < v; ++u)
        if ((row(u) & ~bit(v)) == (row(v) & ~bit(u))) twin_lower_[idx(v)] |= bit(u);
  }

  std::vector<Vertex> run() {
    search(refine(Coloring(static_cast<std::size_t>(n_), 0)));
    return best_label_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  VertexSet row(Vertex v) const { return g_.rows()[idx(v)]; }

  static int color_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Split cells by neighbor counts per cell until stable. The old color is
  // the leading key, so the refined coloring nests inside the old one.
  Coloring refine(Coloring color) const {
    int colors = color_count(color);
    while (true) {
      std::vector<VertexSet> cells(static_cast<std::size_t>(colors), 0);
      for (Vertex v = 0; v < n_; ++v) cells[static_cast<std::size_t>(color[idx(v)])] |= bit(v);

      std::vector<std::vector<int>> keys(idx(n_));
      for (Vertex v = 0; v < n_; ++v) {
        auto& key = keys[idx(v)];
        key.reserve(static_cast<std::size_t>(colors) + 1);
        key.push_back(color[idx(v)]);
        for (VertexSet cell : cells) key.push_back(popcount(row(v) & cell));
      }
      std::vector<Vertex> by_key(idx(n_));
      std::iota(by_key.begin(), by_key.end(), 0);
      std::sort(by_key.begin(), by_key.end(),
                [&](Vertex a, Vertex b) { return keys[idx(a)] < keys[idx(b)]; });

      Coloring next(idx(n_));
      int rank = -1;
      for (std::size_t i = 0; i < by_key.size(); ++i) {
        if (i == 0 || keys[idx(by_key[i])] != keys[idx(by_key[i - 1])]) ++rank;
        next[idx(by_key[i])] = rank;
      }
      const int next_colors = rank + 1;
      color = std::move(next);
      if (next_colors == colors) return color;
      colors = next_colors;
    }
  }

  static Coloring individualize(const Coloring& color, Vertex v) {
    // v moves in front of the rest of its cell; all later cells shift by one.
    Coloring out(color.size());
    const int c = color[idx(v)];
    for (std::size_t u = 0; u < color.size(); ++u)
      out[u] = color[u] > c || (color[u] == c && static_cast<Vertex>(u) != v) ? color[u] + 1
                                                                              : color[u];
    return out;
  }

  void search(const Coloring& color) {
    const int colors = color_count(color);
    if (colors == n_) {
      leaf(color);
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(colors), 0);
    for (int c : color) ++cell_size[static_cast<std::size_t>(c)];
    const int target = static_cast<int>(
        std::find_if(cell_size.begin(), cell_size.end(), [](int s) { return s > 1; }) -
        cell_size.begin());

    VertexSet cell = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (color[idx(v)] == target) cell |= bit(v);
    for_each_vertex(cell, [&](Vertex v) {
      if ((twin_lower_[idx(v)] & cell) != 0) return;
      search(refine(individualize(color, v)));
    });
  }

  void leaf(const Coloring& label) {
    Matrix m(idx(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet r = 0;
      for_each_vertex(row(v), [&](Vertex u) { r |= bit(label[idx(u)]); });
      m[idx(label[idx(v)])] = r;
    }
    if (best_label_.empty() || m < best_) {
      best_ = std::move(m);
      best_label_.assign(label.begin(), label.end());
    }
  }

  const Graph& g_;
  int n_;
  std::vector<VertexSet> twin_lower_;
  Matrix best_;
  std::vector<Vertex> best_label_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw PreconditionError("canonical form: order " + std::to_string(g.order()) +
                            " exceeds exact bound " + std::to_string(max_order));
  if (g.order() == 0) return {};
  return CanonicalSearch(g).run();
}

std::string canonical_form(const Graph& g, int max_order) {
  return encode_graph6(relabel(g, canonical_labeling(g, max_order)));
}

bool isomorphic(const Graph& a, const Graph& b, int max_order) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace rgk
