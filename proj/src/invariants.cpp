#include "rgk/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "rgk/error.hpp"

namespace rgk {

namespace {

void check_input(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("chromatic number of the null graph is undefined");
  if (g.order() > kChromaticExactBound)
    throw PreconditionError("chromatic number: order " + std::to_string(g.order()) +
                            " exceeds exact bound " + std::to_string(kChromaticExactBound));
}

int max_clique(const Graph& g, VertexSet candidates, int size = 0) {
  if (candidates == 0) return size;
  int best = size;
  while (candidates != 0) {
    if (size + popcount(candidates) <= best) break;
    const Vertex v = lowest(candidates);
    candidates &= ~bit(v);
    best = std::max(best, max_clique(g, candidates & g.neighbors(v), size + 1));
  }
  return best;
}

// Colorings are explored with classes introduced in order of first use, so
// each partition of the vertices into classes is visited once.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int colors) : g_(g), k_(colors) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    members_.assign(static_cast<std::size_t>(k_), 0);
  }

  bool colorable() { return color_next(0, 0); }

  // Minimum over all proper k-colorings of the smallest class; k must be chi.
  int min_class(std::vector<int>& witness) {
    best_ = g_.order() + 1;
    witness_ = &witness;
    minimize(0, 0);
    return best_;
  }

 private:
  bool color_next(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((members_[static_cast<std::size_t>(c)] & g_.neighbors(v)) != 0) continue;
      members_[static_cast<std::size_t>(c)] |= bit(v);
      const bool ok = color_next(i + 1, std::max(used, c + 1));
      members_[static_cast<std::size_t>(c)] &= ~bit(v);
      if (ok) return true;
    }
    return false;
  }

  void minimize(std::size_t i, int used) {
    if (best_ == 1) return;
    // Classes only grow and unopened ones will hold at least one vertex.
    int floor = g_.order() + 1;
    for (int c = 0; c < k_; ++c)
      floor = std::min(floor, std::max(1, popcount(members_[static_cast<std::size_t>(c)])));
    if (floor >= best_) return;
    if (used + static_cast<int>(order_.size() - i) < k_) return;

    if (i == order_.size()) {
      best_ = floor;
      for (int c = 0; c < k_; ++c)
        for_each_vertex(members_[static_cast<std::size_t>(c)],
                        [&](Vertex v) { (*witness_)[static_cast<std::size_t>(v)] = c; });
      return;
    }
    const Vertex v = order_[i];
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((members_[static_cast<std::size_t>(c)] & g_.neighbors(v)) != 0) continue;
      members_[static_cast<std::size_t>(c)] |= bit(v);
      minimize(i + 1, std::max(used, c + 1));
      members_[static_cast<std::size_t>(c)] &= ~bit(v);
    }
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> members_;
  int best_ = 0;
  std::vector<int>* witness_ = nullptr;
};

}  // namespace

int chromatic_number(const Graph& g) {
  check_input(g);
  for (int k = std::max(1, max_clique(g, g.vertices()));; ++k)
    if (ColoringSearch(g, k).colorable()) return k;
}

ChromaticProfile min_color_class(const Graph& g) {
  ChromaticProfile profile;
  profile.chi = chromatic_number(g);
  profile.witness.assign(static_cast<std::size_t>(g.order()), -1);
  profile.s = ColoringSearch(g, profile.chi).min_class(profile.witness);
  return profile;
}

long long burr_lower_bound(const ChromaticProfile& profile, long long h_order) {
  if (h_order < profile.s)
    throw PreconditionError("burr bound needs v(H) >= s(G) = " + std::to_string(profile.s));
  return static_cast<long long>(profile.chi - 1) * (h_order - 1) + profile.s;
}

long long burr_lower_bound(const Graph& g, long long h_order) {
  return burr_lower_bound(min_color_class(g), h_order);
}

}  // namespace rgk
