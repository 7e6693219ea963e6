#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgk/colorings.hpp"
#include "rgk/embedding.hpp"
#include "rgk/graph.hpp"
#include "rgk/trees.hpp"

namespace rgk {

// Smallest positive integer that does not divide alpha (always >= 2).
int snd(long long alpha);

// m copies of t joined with the complete (k_minus_1)-partite graph whose
// parts all have size m. Copies come first, then the parts.
Graph host_template(int m, int k_minus_1, const Graph& t);

// The copies of t form one block family and the parts another.
HostSymmetry host_template_symmetry(int m, int k_minus_1, const Graph& t);

// H = K_{q+1}(alpha; beta): q parts of size alpha and one of size beta.
// beta = 0 is read as K_q(alpha).
struct Family {
  int q = 1;
  int beta = 0;
};

struct GoodnessProblem {
  Graph g;
  int alpha = 1;
  int p = 2;
  std::optional<Family> family;  // empty: H = K_1
};

enum class Verdict { good, not_good, sufficient, inconclusive };
std::string to_string(Verdict v);

// slope * n + intercept.
struct LinearForm {
  long long slope = 0;
  long long intercept = 0;

  long long at(long long n) const noexcept { return slope * n + intercept; }
  std::string to_string() const;
};

// A concrete lower-bound coloring built from a failing tree: neither red g
// nor the blue target skeleton, on claimed_value(n) - 1 vertices.
struct Refutation {
  NecessityParams params;
  TwoColoring coloring;
  bool blue_absent = false;
  std::string blue_explanation;
  bool red_avoids = false;
};

struct GoodnessCertificate {
  Verdict verdict = Verdict::inconclusive;
  int alpha = 0;
  int p = 0;
  std::vector<int> sizes;  // part sizes of the multisize variant
  int tree_order = 0;      // snd(alpha), or min snd over the sizes
  int chi = 0;
  int s = 0;
  int m = 0;
  int k = 0;
  int h = 1;
  LinearForm claimed_value;
  TreeSet trees;
  // Aligned with trees; empty where no embedding exists or the tree was skipped.
  std::vector<std::optional<Embedding>> embeddings;
  std::vector<bool> checked;
  std::optional<int> failing_tree;
  std::vector<int> failing_trees;  // all of them, in exhaustive mode
  std::optional<Refutation> refutation;
  std::vector<std::string> notes;
};

struct DecideOptions {
  std::optional<std::uint64_t> budget;  // per tree
  bool exhaustive = false;
  int jobs = 1;
  bool reverse_tree_order = false;
  bool build_refutation = true;
};

// Good iff g embeds into host_template(m, k-1, T) for every free tree T on
// snd(alpha) vertices, where m = v(g) and k = chi(g) - 1. Throws
// HypothesisError when s(g) != 1, chi(g) < 2 or p < snd(alpha), and
// BudgetExhausted when a tree that matters stays undecided.
GoodnessCertificate decide_goodness(const GoodnessProblem& prob, const DecideOptions& options = {});

// One-way test for K_{sizes..., n}: "sufficient" when the embedding
// condition holds with trees on min snd(sizes[i]) vertices, otherwise
// "inconclusive".
GoodnessCertificate decide_goodness_multisize(const Graph& g, std::span<const int> sizes,
                                              const DecideOptions& options = {});

// Re-checks a certificate from scratch: each stored embedding against a
// freshly built host, failing trees by a new exhaustive search, and the
// refutation coloring if present.
bool recheck_certificate(const Graph& g, const GoodnessCertificate& cert,
                         std::optional<std::uint64_t> budget = {});

}  // namespace rgk
