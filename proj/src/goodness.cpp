#include "rgk/goodness.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "rgk/error.hpp"
#include "rgk/invariants.hpp"
#include "rgk/parallel.hpp"

namespace rgk {

namespace {

enum class TreeState { skipped, found, absent, undecided };

struct TreeOutcome {
  TreeState state = TreeState::skipped;
  std::optional<Embedding> embedding;
};

struct Setup {
  ChromaticProfile profile;
  int m = 0;
  int k = 0;
};

Setup check_target(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("target graph has no vertices");
  Setup out;
  out.profile = min_color_class(g);
  out.m = g.order();
  out.k = out.profile.chi - 1;
  if (out.profile.chi < 2)
    throw HypothesisError("chi(G) >= 2", "chi = " + std::to_string(out.profile.chi));
  if (out.profile.s != 1)
    throw HypothesisError("s(G) = 1", "s = " + std::to_string(out.profile.s));
  return out;
}

void check_host_order(int m, int k, int tree_order) {
  const long long order = static_cast<long long>(m) * tree_order + static_cast<long long>(m) * (k - 1);
  if (order > kMaxOrder)
    throw PreconditionError("host template would have " + std::to_string(order) +
                            " vertices (limit " + std::to_string(kMaxOrder) + ")");
}

// Runs the per-tree embedding checks and fills the tree part of `cert`.
// Results past the first failure (in iteration order) are discarded unless
// the run is exhaustive, so the outcome never depends on scheduling.
void check_trees(const Graph& g, GoodnessCertificate& cert, const DecideOptions& options) {
  const std::size_t count = cert.trees.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.reverse_tree_order) std::reverse(order.begin(), order.end());

  std::vector<TreeOutcome> outcomes(count);
  std::atomic<std::size_t> first_fail{count};
  parallel_for(count, options.jobs, [&](std::size_t pos) {
    if (!options.exhaustive && pos > first_fail.load()) return;
    const Graph& tree = cert.trees.trees[order[pos]];
    const Graph host = host_template(cert.m, cert.k - 1, tree);
    const HostSymmetry sym = host_template_symmetry(cert.m, cert.k - 1, tree);
    TreeOutcome& out = outcomes[pos];
    try {
      out.embedding = find_embedding(g, host, {options.budget, &sym});
      out.state = out.embedding ? TreeState::found : TreeState::absent;
    } catch (const BudgetExhausted&) {
      out.state = TreeState::undecided;
      return;
    }
    if (out.state == TreeState::absent) {
      std::size_t cur = first_fail.load();
      while (pos < cur && !first_fail.compare_exchange_weak(cur, pos)) {
      }
    }
  });

  const std::size_t stop = options.exhaustive ? count : first_fail.load();
  cert.embeddings.assign(count, std::nullopt);
  cert.checked.assign(count, false);
  for (std::size_t pos = 0; pos < count; ++pos) {
    if (pos > stop) break;
    const TreeOutcome& out = outcomes[pos];
    if (out.state == TreeState::undecided)
      throw BudgetExhausted(options.budget.value_or(0));
    const std::size_t index = order[pos];
    cert.checked[index] = true;
    cert.embeddings[index] = out.embedding;
    if (out.state == TreeState::absent) {
      const int i = static_cast<int>(index);
      if (!cert.failing_tree) cert.failing_tree = i;
      cert.failing_trees.push_back(i);
    }
  }
}

std::optional<Refutation> build_refutation(const Graph& g, const GoodnessCertificate& cert,
                                           const DecideOptions& options) {
  const Graph& tree = cert.trees.trees[static_cast<std::size_t>(*cert.failing_tree)];
  const long long n = 1;
  const long long block = static_cast<long long>(cert.p) * cert.alpha + n * cert.h;
  if (static_cast<long long>(cert.k) * (block - 1) + 1 > kMaxOrder) return std::nullopt;

  Refutation r{NecessityParams::make(cert.alpha, cert.p, cert.k, static_cast<int>(n), cert.h, tree),
               {}, false, {}, false};
  r.coloring = necessity_coloring(r.params);
  const BlueCheck blue = verify_no_blue_target(r.coloring, necessity_target_parts(r.params),
                                               options.budget);
  r.blue_absent = blue.absent;
  r.blue_explanation = blue.explanation;
  const HostSymmetry sym = necessity_red_symmetry(r.params);
  r.red_avoids = red_avoids(r.coloring, g, {options.budget, &sym}).avoids;
  return r;
}

}  // namespace

int snd(long long alpha) {
  if (alpha < 1) throw PreconditionError("snd: alpha must be at least 1");
  int k = 2;
  while (alpha % k == 0) ++k;
  return k;
}

Graph host_template(int m, int k_minus_1, const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("host_template: t is not a tree");
  if (m < 1) throw PreconditionError("host_template: m must be at least 1");
  if (k_minus_1 < 0) throw PreconditionError("host_template: negative part count");
  check_host_order(m, k_minus_1 + 1, t.order());
  const Graph forest = copies(t, m);
  if (k_minus_1 == 0) return forest;
  return join(forest, complete_multipartite(PartSizes::uniform(k_minus_1, m)));
}

HostSymmetry host_template_symmetry(int m, int k_minus_1, const Graph& t) {
  HostSymmetry sym;
  const int vt = t.order();
  if (m > 1) {
    BlockFamily trees;
    for (int c = 0; c < m; ++c) {
      std::vector<Vertex> block(static_cast<std::size_t>(vt));
      std::iota(block.begin(), block.end(), c * vt);
      trees.blocks.push_back(std::move(block));
    }
    sym.families.push_back(std::move(trees));
  }
  if (k_minus_1 > 1) {
    BlockFamily parts;
    for (int b = 0; b < k_minus_1; ++b) {
      std::vector<Vertex> block(static_cast<std::size_t>(m));
      std::iota(block.begin(), block.end(), m * vt + b * m);
      parts.blocks.push_back(std::move(block));
    }
    sym.families.push_back(std::move(parts));
  }
  return sym;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::good: return "good";
    case Verdict::not_good: return "not_good";
    case Verdict::sufficient: return "sufficient";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string LinearForm::to_string() const {
  std::string out = slope == 1 ? "n" : std::to_string(slope) + "n";
  if (intercept >= 0) return out + " + " + std::to_string(intercept);
  return out + " - " + std::to_string(-intercept);
}

GoodnessCertificate decide_goodness(const GoodnessProblem& prob, const DecideOptions& options) {
  if (prob.alpha < 1) throw PreconditionError("alpha must be at least 1");
  const int tree_order = snd(prob.alpha);
  if (prob.p < tree_order)
    throw HypothesisError("p >= snd(alpha)", "p = " + std::to_string(prob.p) +
                                                 ", snd(alpha) = " + std::to_string(tree_order));
  if (prob.family && (prob.family->q < 1 || prob.family->beta < 0))
    throw HypothesisError("q >= 1 and beta >= 0", "q = " + std::to_string(prob.family->q) +
                                                      ", beta = " + std::to_string(prob.family->beta));
  const Setup setup = check_target(prob.g);
  check_host_order(setup.m, setup.k, tree_order);

  GoodnessCertificate cert;
  cert.alpha = prob.alpha;
  cert.p = prob.p;
  cert.tree_order = tree_order;
  cert.chi = setup.profile.chi;
  cert.s = setup.profile.s;
  cert.m = setup.m;
  cert.k = setup.k;
  cert.h = prob.family ? prob.family->q * prob.alpha + prob.family->beta : 1;
  cert.claimed_value = {static_cast<long long>(cert.k) * cert.h,
                        static_cast<long long>(cert.k) * (static_cast<long long>(prob.p) * prob.alpha - 1) + 1};
  cert.notes.push_back("claimed value holds for all sufficiently large n; no threshold is computed");
  if (prob.family && prob.family->beta == 0)
    cert.notes.push_back("beta = 0: H is read as K_q(alpha)");
  cert.trees = enumerate_free_trees(tree_order);

  check_trees(prob.g, cert, options);
  cert.verdict = cert.failing_tree ? Verdict::not_good : Verdict::good;

  if (cert.failing_tree && options.build_refutation) {
    try {
      cert.refutation = build_refutation(prob.g, cert, options);
      if (!cert.refutation)
        cert.notes.push_back("no refutation coloring fits within " + std::to_string(kMaxOrder) +
                             " vertices");
    } catch (const BudgetExhausted&) {
      cert.notes.push_back("refutation coloring left unverified: budget exhausted");
    }
  }
  return cert;
}

GoodnessCertificate decide_goodness_multisize(const Graph& g, std::span<const int> sizes,
                                              const DecideOptions& options) {
  if (sizes.empty()) throw PreconditionError("multisize: no part sizes given");
  for (int a : sizes)
    if (a < 1) throw PreconditionError("multisize: part sizes must be at least 1");
  int tree_order = snd(sizes[0]);
  for (int a : sizes) tree_order = std::min(tree_order, snd(a));
  const Setup setup = check_target(g);
  check_host_order(setup.m, setup.k, tree_order);

  GoodnessCertificate cert;
  cert.p = static_cast<int>(sizes.size());
  cert.sizes.assign(sizes.begin(), sizes.end());
  cert.tree_order = tree_order;
  cert.chi = setup.profile.chi;
  cert.s = setup.profile.s;
  cert.m = setup.m;
  cert.k = setup.k;
  const long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  cert.claimed_value = {cert.k, static_cast<long long>(cert.k) * (total - 1) + 1};
  cert.notes.push_back("one-way test: a failing tree does not show that goodness fails");
  cert.trees = enumerate_free_trees(tree_order);

  check_trees(g, cert, options);
  cert.verdict = cert.failing_tree ? Verdict::inconclusive : Verdict::sufficient;
  return cert;
}

bool recheck_certificate(const Graph& g, const GoodnessCertificate& cert,
                         std::optional<std::uint64_t> budget) {
  const std::size_t count = cert.trees.size();
  if (cert.embeddings.size() != count || cert.checked.size() != count) return false;
  if (cert.trees.n != cert.tree_order) return false;
  const bool positive = cert.verdict == Verdict::good || cert.verdict == Verdict::sufficient;
  if (positive && cert.failing_tree) return false;
  if (!positive && !cert.failing_tree) return false;

  for (std::size_t i = 0; i < count; ++i) {
    const Graph host = host_template(cert.m, cert.k - 1, cert.trees.trees[i]);
    if (cert.embeddings[i]) {
      if (!verify_embedding(g, host, *cert.embeddings[i])) return false;
    } else if (positive) {
      return false;
    }
  }
  for (int i : cert.failing_trees) {
    const Graph host = host_template(cert.m, cert.k - 1, cert.trees.trees[static_cast<std::size_t>(i)]);
    if (find_embedding(g, host, {budget, nullptr})) return false;
  }

  if (cert.refutation) {
    const Refutation& r = *cert.refutation;
    if (!r.coloring.is_complementary()) return false;
    if (necessity_coloring(r.params).blue != r.coloring.blue) return false;
    if (!verify_no_blue_target(r.coloring, necessity_target_parts(r.params), budget).absent)
      return false;
    const HostSymmetry sym = necessity_red_symmetry(r.params);
    if (!symmetry_is_valid(r.coloring.red, sym)) return false;
    if (!red_avoids(r.coloring, g, {budget, &sym}).avoids) return false;
  }
  return true;
}

}  // namespace rgk
