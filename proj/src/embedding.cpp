#include "rgk/embedding.hpp"

#include <algorithm>

#include "rgk/error.hpp"

namespace rgk {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

class NodeCounter {
 public:
  explicit NodeCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}

  void tick() {
    ++nodes_;
    if (budget_ && nodes_ > *budget_) throw BudgetExhausted(*budget_);
  }

 private:
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
};

// Backtracking over pattern vertices in a connectivity-first order. A host
// candidate is skipped when an automorphism fixing every used host vertex
// maps it to a smaller candidate: an unused lower twin, or the matching
// vertex of an earlier, wholly unused block of the same family.
class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& pattern, const Graph& host, const SearchOptions& options)
      : pattern_(pattern), host_(host), counter_(options.budget) {
    const int pn = pattern.order();
    const int hn = host.order();

    twin_lower_.assign(idx(hn), 0);
    for (Vertex v = 0; v < hn; ++v)
      for (Vertex u = 0; u < v; ++u)
        if ((host.rows()[idx(u)] & ~bit(v)) == (host.rows()[idx(v)] & ~bit(u)))
          twin_lower_[idx(v)] |= bit(u);

    membership_.assign(idx(hn), {});
    if (options.symmetry != nullptr) {
      for (const BlockFamily& family : options.symmetry->families) {
        const int f = static_cast<int>(block_masks_.size());
        block_masks_.emplace_back();
        for (const auto& block : family.blocks) {
          const int j = static_cast<int>(block_masks_.back().size());
          VertexSet mask = 0;
          for (Vertex v : block) {
            mask |= bit(v);
            if (j > 0) membership_[idx(v)].push_back({f, j});
          }
          block_masks_.back().push_back(mask);
        }
      }
    }

    // Order: repeatedly take the vertex with most already-ordered
    // neighbors, then highest degree, then lowest index.
    std::vector<bool> placed(idx(pn), false);
    VertexSet placed_mask = 0;
    for (int step = 0; step < pn; ++step) {
      Vertex best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (Vertex v = 0; v < pn; ++v) {
        if (placed[idx(v)]) continue;
        const int links = popcount(pattern.neighbors(v) & placed_mask);
        const int degree = pattern.degree(v);
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      placed[idx(best)] = true;
      placed_mask |= bit(best);
      order_.push_back(best);
    }

    anchors_.assign(idx(pn), {});
    VertexSet earlier = 0;
    for (Vertex v : order_) {
      for_each_vertex(pattern.neighbors(v) & earlier, [&](Vertex u) { anchors_[idx(v)].push_back(u); });
      earlier |= bit(v);
    }

    degree_ok_.assign(idx(pn), 0);
    for (Vertex v = 0; v < pn; ++v)
      for (Vertex h = 0; h < hn; ++h)
        if (host.degree(h) >= pattern.degree(v)) degree_ok_[idx(v)] |= bit(h);

    map_.assign(idx(pn), -1);
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return Embedding{map_};
  }

 private:
  bool symmetric_to_smaller(Vertex c) const {
    if ((twin_lower_[idx(c)] & ~used_) != 0) return true;
    for (const auto& [f, j] : membership_[idx(c)]) {
      const auto& masks = block_masks_[static_cast<std::size_t>(f)];
      if ((masks[static_cast<std::size_t>(j)] & used_) != 0) continue;
      for (int i = 0; i < j; ++i)
        if ((masks[static_cast<std::size_t>(i)] & used_) == 0) return true;
    }
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    VertexSet candidates = degree_ok_[idx(v)] & ~used_;
    for (Vertex u : anchors_[idx(v)]) candidates &= host_.rows()[idx(map_[idx(u)])];
    while (candidates != 0) {
      const Vertex c = lowest(candidates);
      candidates &= candidates - 1;
      if (symmetric_to_smaller(c)) continue;
      counter_.tick();
      map_[idx(v)] = c;
      used_ |= bit(c);
      if (extend(depth + 1)) return true;
      used_ &= ~bit(c);
    }
    map_[idx(v)] = -1;
    return false;
  }

  struct Membership {
    int family;
    int block;
  };

  const Graph& pattern_;
  const Graph& host_;
  NodeCounter counter_;
  std::vector<VertexSet> twin_lower_;
  std::vector<std::vector<VertexSet>> block_masks_;
  std::vector<std::vector<Membership>> membership_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> anchors_;
  std::vector<VertexSet> degree_ok_;
  std::vector<Vertex> map_;
  VertexSet used_ = 0;
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                        const SearchOptions& options) {
  if (options.symmetry != nullptr) {
    for (const BlockFamily& family : options.symmetry->families)
      for (const auto& block : family.blocks)
        for (Vertex v : block)
          if (v < 0 || v >= host.order())
            throw PreconditionError("host symmetry references a missing vertex");
  }
  return SubgraphSearch(pattern, host, options).run();
}

bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order())
    throw PreconditionError("embedding domain has " + std::to_string(e.map.size()) +
                            " entries for a pattern of order " + std::to_string(pattern.order()));
  VertexSet image = 0;
  bool injective = true;
  for (Vertex h : e.map) {
    if (h < 0 || h >= host.order())
      throw PreconditionError("embedding image " + std::to_string(h) + " outside the host");
    if (image & bit(h)) injective = false;
    image |= bit(h);
  }
  if (!injective) return false;
  for (auto [u, v] : pattern.edges())
    if (!host.adjacent(e.map[idx(u)], e.map[idx(v)])) return false;
  return true;
}

bool symmetry_is_valid(const Graph& host, const HostSymmetry& symmetry) {
  for (const BlockFamily& family : symmetry.families) {
    for (std::size_t i = 0; i < family.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < family.blocks.size(); ++j) {
        const auto& a = family.blocks[i];
        const auto& b = family.blocks[j];
        if (a.size() != b.size()) return false;
        std::vector<Vertex> perm(idx(host.order()));
        for (Vertex v = 0; v < host.order(); ++v) perm[idx(v)] = v;
        for (std::size_t k = 0; k < a.size(); ++k) {
          if (a[k] < 0 || a[k] >= host.order() || b[k] < 0 || b[k] >= host.order()) return false;
          perm[idx(a[k])] = b[k];
          perm[idx(b[k])] = a[k];
        }
        try {
          if (relabel(host, perm) != host) return false;
        } catch (const PreconditionError&) {
          return false;  // overlapping blocks
        }
        for (std::size_t k = 0; k < a.size(); ++k)
          if (a[k] >= b[k]) return false;
      }
    }
  }
  return true;
}

std::string format_embedding(const Embedding& e) {
  std::string out;
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(v) + "->" + std::to_string(e.map[v]);
  }
  return out;
}

}  // namespace rgk
