#include "rgk/ramsey.hpp"

#include <array>
#include <atomic>
#include <set>

#include "rgk/embedding.hpp"
#include "rgk/error.hpp"
#include "rgk/parallel.hpp"

namespace rgk {

namespace {

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, int n) {
  std::set<std::string> seen;
  for (const Graph& g : smaller) {
    const Vertex v = n - 1;
    for (VertexSet nbrs = 0; nbrs < bit(n - 1); ++nbrs) {
      std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
      rows.push_back(nbrs);
      for_each_vertex(nbrs, [&](Vertex u) { rows[static_cast<std::size_t>(u)] |= bit(v); });
      seen.insert(canonical_form(Graph::from_rows(std::move(rows)), kMaxEnumerationOrder));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& code : seen) out.push_back(decode_graph6(code));
  return out;
}

bool contains(const Graph& pattern, const Graph& host, const ArrowOptions& options) {
  std::string key;
  if (options.cache != nullptr) {
    key = encode_graph6(pattern) + ' ' + encode_graph6(host);
    if (auto hit = options.cache->lookup(key)) return *hit;
  }
  const bool found = find_embedding(pattern, host, {options.budget, nullptr}).has_value();
  if (options.cache != nullptr) options.cache->store(key, found);
  return found;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw PreconditionError("enumerate_graphs: n must lie in [0, " +
                            std::to_string(kMaxEnumerationOrder) + "]");
  static std::mutex mutex;
  static std::array<std::optional<std::vector<Graph>>, kMaxEnumerationOrder + 1> cache;
  std::lock_guard lock(mutex);
  for (int i = 0; i <= n; ++i) {
    auto& slot = cache[static_cast<std::size_t>(i)];
    if (slot) continue;
    slot = i == 0 ? std::vector<Graph>{Graph(0)}
                  : extend_by_vertex(*cache[static_cast<std::size_t>(i - 1)], i);
  }
  return *cache[static_cast<std::size_t>(n)];
}

std::optional<bool> ContainmentCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = verdicts_.find(key);
  if (it == verdicts_.end()) return std::nullopt;
  return it->second;
}

void ContainmentCache::store(const std::string& key, bool contained) {
  std::lock_guard lock(mutex_);
  verdicts_[key] = contained;
}

std::size_t ContainmentCache::size() const {
  std::lock_guard lock(mutex_);
  return verdicts_.size();
}

ArrowingResult arrows(int n, const Graph& g, const Graph& h, const ArrowOptions& options) {
  const auto& classes = enumerate_graphs(n);
  std::atomic<std::size_t> first_bad{classes.size()};
  parallel_for(classes.size(), options.jobs, [&](std::size_t i) {
    if (i > first_bad.load()) return;
    const Graph& red = classes[i];
    if (contains(g, red, options)) return;
    if (contains(h, complement(red), options)) return;
    std::size_t cur = first_bad.load();
    while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
    }
  });

  ArrowingResult out;
  out.n = n;
  const std::size_t bad = first_bad.load();
  out.arrows = bad == classes.size();
  if (!out.arrows) out.counterexample = TwoColoring::from_red(classes[bad]);
  return out;
}

RamseyValue ramsey_number(const Graph& g, const Graph& h, int n_max, const ArrowOptions& options) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder)
    throw PreconditionError("ramsey_number: n_max must lie in [1, " +
                            std::to_string(kMaxEnumerationOrder) + "]");
  RamseyValue out;
  out.lower_bound = 1;
  for (int n = 1; n <= n_max; ++n) {
    ArrowingResult r = arrows(n, g, h, options);
    if (r.arrows) {
      out.status = RamseyStatus::exact;
      out.value = n;
      return out;
    }
    out.lower_bound = n + 1;
    out.lower_witness = std::move(r.counterexample);
  }
  return out;
}

}  // namespace rgk
