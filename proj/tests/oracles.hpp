#pragma once

// Brute-force reference implementations. Each one avoids the search code it
// is used to check: permutations instead of refinement, all injections
// instead of backtracking, all k^v assignments instead of branch and bound.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rgk/graph.hpp"

namespace oracle {

using rgk::Graph;
using rgk::Vertex;

inline std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) out.emplace_back(u, v);
  return out;
}

inline Graph from_mask(int n, unsigned long long mask) {
  rgk::GraphBuilder b(n);
  const auto ps = pairs(n);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (mask >> i & 1ULL) b.add_edge(ps[i].first, ps[i].second);
  return b.build();
}

// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Representatives of isomorphism classes, found by pairwise permutation tests.
inline std::vector<Graph> classes(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    bool fresh = true;
    for (const Graph& r : reps)
      if (oracle::isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

inline std::vector<Graph> all_labeled(int n) {
  std::vector<Graph> out;
  const auto m = pairs(n).size();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) out.push_back(from_mask(n, mask));
  return out;
}

// Labeled trees from Pruefer sequences.
inline std::vector<Graph> labeled_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) return {Graph(1)};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    rgk::GraphBuilder b(n);
    for (int x : seq) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      b.add_edge(leaf, x);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(x)];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    b.add_edge(last[0], last[1]);
    out.push_back(b.build());
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

// Subgraph containment by trying every injective map.
inline bool contains(const Graph& pattern, const Graph& host) {
  const int p = pattern.order();
  const int h = host.order();
  if (p > h) return false;
  std::vector<Vertex> map(static_cast<std::size_t>(p));
  std::vector<bool> used(static_cast<std::size_t>(h), false);
  const auto edges = pattern.edges();
  std::function<bool(int)> go = [&](int i) {
    if (i == p) {
      for (auto [u, v] : edges)
        if (!host.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
          return false;
      return true;
    }
    for (Vertex x = 0; x < h; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      map[static_cast<std::size_t>(i)] = x;
      if (go(i + 1)) return true;
      used[static_cast<std::size_t>(x)] = false;
    }
    return false;
  };
  return go(0);
}

// Calls f(assignment) for each of the k^n maps from vertices to classes.
template <class F>
void for_each_assignment(int n, int k, F&& f) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    f(a);
    int i = 0;
    while (i < n && ++a[static_cast<std::size_t>(i)] == k) a[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
  }
}

inline bool proper(const Graph& g, const std::vector<int>& a) {
  for (auto [u, v] : g.edges())
    if (a[static_cast<std::size_t>(u)] == a[static_cast<std::size_t>(v)]) return false;
  return true;
}

inline int chromatic_number(const Graph& g) {
  for (int k = 1;; ++k) {
    bool found = false;
    for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
      if (!found && proper(g, a)) found = true;
    });
    if (found) return k;
  }
}

// Minimum class size over proper colorings using all chi classes.
inline int surplus(const Graph& g, int chi) {
  int best = g.order();
  for_each_assignment(g.order(), chi, [&](const std::vector<int>& a) {
    if (!proper(g, a)) return;
    std::vector<int> size(static_cast<std::size_t>(chi), 0);
    for (int c : a) ++size[static_cast<std::size_t>(c)];
    const int lo = *std::min_element(size.begin(), size.end());
    if (lo > 0) best = std::min(best, lo);
  });
  return best;
}

// G fits into mK_2 + K_{k-1}(m) with m = v(G) iff its vertices split into
// one set inducing maximum degree <= 1 and k-1 independent sets.
inline bool matching_plus_independent(const Graph& g, int k) {
  bool ok = false;
  for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
    if (ok) return;
    for (auto [u, v] : g.edges()) {
      const int cu = a[static_cast<std::size_t>(u)];
      if (cu == a[static_cast<std::size_t>(v)] && cu != 0) return;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (a[static_cast<std::size_t>(v)] != 0) continue;
      int inside = 0;
      for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && a[static_cast<std::size_t>(u)] == 0 && g.adjacent(u, v)) ++inside;
      if (inside > 1) return;
    }
    ok = true;
  });
  return ok;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  rgk::GraphBuilder b(n);
  for (auto [u, v] : pairs(n))
    if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
