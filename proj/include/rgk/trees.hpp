#pragma once

#include <vector>

#include "rgk/graph.hpp"

namespace rgk {

inline constexpr int kMaxTreeOrder = 16;

// All free trees on n vertices, one per isomorphism class, ordered
// lexicographically by canonical level sequence. levels[i] is the level
// sequence (root at level 1, preorder) of trees[i]; vertex labels follow
// that preorder.
struct TreeSet {
  int n = 0;
  std::vector<Graph> trees;
  std::vector<std::vector<int>> levels;

  std::size_t size() const noexcept { return trees.size(); }
};

TreeSet enumerate_free_trees(int n);

// Tree on levels.size() vertices: vertex i hangs from the last earlier
// vertex one level up.
Graph tree_from_levels(const std::vector<int>& levels);

struct TreeShape {
  bool is_path = false;
  bool contains_claw = false;
};

// Classifies a tree as a path or as containing K_{1,3}; the two flags are
// computed independently (degree sequence vs. a subgraph search).
TreeShape tree_structure_fact(const Graph& t);

}  // namespace rgk
