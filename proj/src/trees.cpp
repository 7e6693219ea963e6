// Free trees by the constant-amortized-time successor rule of Wright,
// Richmond, Odlyzko and McKay: each tree is encoded by the level sequence
// of its center-rooted canonical form, and the successor of a sequence is
// obtained by copying a suffix block while tracking the center constraints
// (h1, h2, r, c below). The traversal starts at the path and ends at the
// star.

#include "rgk/trees.hpp"

#include <algorithm>
#include <limits>

#include "rgk/embedding.hpp"
#include "rgk/error.hpp"

namespace rgk {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

// 1-indexed state, as in the published algorithm: level[i] is the level of
// vertex i and parent[i] its parent vertex (0 for the root).
class FreeTreeSuccessor {
 public:
  explicit FreeTreeSuccessor(int n) : n_(n), level_(static_cast<std::size_t>(n) + 1), parent_(level_.size()) {
    const int k = n / 2 + 1;
    p_ = n == 4 ? 3 : n;
    q_ = n - 1;
    h1_ = k;
    h2_ = n;
    c_ = n % 2 == 0 ? n + 1 : kInfinity;
    r_ = k;
    for (int i = 1; i <= k; ++i) L(i) = i;
    for (int i = k + 1; i <= n; ++i) L(i) = i - k + 1;
    for (int i = 1; i <= n; ++i) W(i) = i - 1;
    if (n > 2) W(k + 1) = 1;
    if (n <= 3) q_ = 0;
  }

  std::vector<int> levels() const { return {level_.begin() + 1, level_.end()}; }
  bool has_next() const { return q_ != 0; }

  void advance() {
    const int n = n_;
    bool fixit = false;
    bool needr = false;
    bool needc = false;
    bool needh2 = false;

    if (c_ == n + 1 ||
        (p_ == h2_ && ((L(h1_) == L(h2_) + 1 && n - h2_ > r_ - h1_) ||
                       (L(h1_) == L(h2_) && n - h2_ + 1 < r_ - h1_)))) {
      if (L(r_) > 3) {
        p_ = r_;
        q_ = W(r_);
        if (h1_ == r_) --h1_;
        fixit = true;
      } else {
        p_ = r_;
        --r_;
        q_ = 2;
      }
    }

    if (p_ <= h1_) h1_ = p_ - 1;
    if (p_ <= r_) {
      needr = true;
    } else if (p_ <= h2_) {
      needh2 = true;
    } else if (L(h2_) == L(h1_) - 1 && n - h2_ == r_ - h1_) {
      if (p_ <= c_) needc = true;
    } else {
      c_ = kInfinity;
    }

    const int oldp = p_;
    const int delta = q_ - p_;
    const int oldlq = L(q_);
    const int oldwq = W(q_);
    p_ = kInfinity;

    for (int i = oldp; i <= n; ++i) {
      L(i) = L(i + delta);
      if (L(i) == 2) {
        W(i) = 1;
      } else {
        p_ = i;
        q_ = L(i) == oldlq ? oldwq : W(i + delta) - delta;
        W(i) = q_;
      }
      if (needr && L(i) == 2) {
        needr = false;
        needh2 = true;
        r_ = i - 1;
      }
      if (needh2 && L(i) <= L(i - 1) && i > r_ + 1) {
        needh2 = false;
        h2_ = i - 1;
        if (L(h2_) == L(h1_) - 1 && n - h2_ == r_ - h1_)
          needc = true;
        else
          c_ = kInfinity;
      }
      if (needc) {
        if (L(i) != L(h1_ - h2_ + i) - 1) {
          needc = false;
          c_ = i;
        } else {
          c_ = i + 1;
        }
      }
    }

    if (fixit) {
      r_ = n - h1_ + 1;
      for (int i = r_ + 1; i <= n; ++i) {
        L(i) = i - r_ + 1;
        W(i) = i - 1;
      }
      W(r_ + 1) = 1;
      h2_ = n;
      p_ = n;
      q_ = p_ - 1;
      c_ = kInfinity;
    } else {
      if (p_ == kInfinity) {
        p_ = L(oldp - 1) != 2 ? oldp - 1 : oldp - 2;
        q_ = W(p_);
      }
      if (needh2) {
        h2_ = n;
        c_ = (L(h2_) == L(h1_) - 1 && h1_ == r_) ? n + 1 : kInfinity;
      }
    }
  }

 private:
  int& L(int i) { return level_[static_cast<std::size_t>(i)]; }
  int& W(int i) { return parent_[static_cast<std::size_t>(i)]; }

  int n_;
  std::vector<int> level_;
  std::vector<int> parent_;
  int p_ = 0, q_ = 0, h1_ = 0, h2_ = 0, c_ = 0, r_ = 0;
};

}  // namespace

Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  GraphBuilder b(n);
  std::vector<Vertex> last_at_level(static_cast<std::size_t>(n) + 2, -1);
  for (int i = 0; i < n; ++i) {
    const int lvl = levels[static_cast<std::size_t>(i)];
    if (lvl < 1 || lvl > n || (i == 0) != (lvl == 1))
      throw PreconditionError("malformed level sequence");
    if (i > 0) {
      const Vertex parent = last_at_level[static_cast<std::size_t>(lvl - 1)];
      if (parent < 0) throw PreconditionError("malformed level sequence");
      b.add_edge(parent, i);
    }
    last_at_level[static_cast<std::size_t>(lvl)] = i;
  }
  return b.build();
}

TreeSet enumerate_free_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw PreconditionError("tree order " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxTreeOrder) + "]");
  TreeSet out;
  out.n = n;
  FreeTreeSuccessor gen(n);
  out.levels.push_back(gen.levels());
  while (gen.has_next()) {
    gen.advance();
    out.levels.push_back(gen.levels());
  }
  std::sort(out.levels.begin(), out.levels.end());
  for (const auto& lv : out.levels) out.trees.push_back(tree_from_levels(lv));
  return out;
}

TreeShape tree_structure_fact(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("tree_structure_fact: input is not a tree");
  TreeShape shape;
  shape.is_path = t.max_degree() <= 2;
  shape.contains_claw = find_embedding(standard_graph(GraphKind::star, 4), t).has_value();
  return shape;
}

}  // namespace rgk
