#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rgk/colorings.hpp"
#include "rgk/graph.hpp"

namespace rgk {

inline constexpr int kMaxEnumerationOrder = 9;

// One canonical representative per isomorphism class of graphs on n
// vertices, ordered by canonical graph6. Computed once per n and cached.
const std::vector<Graph>& enumerate_graphs(int n);

// Memoized "pattern is a subgraph of host" verdicts, keyed by the graph6
// of the pattern and of the (canonical) host.
class ContainmentCache {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool contained);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, bool> verdicts_;
};

struct ArrowOptions {
  std::optional<std::uint64_t> budget;  // per subgraph search
  int jobs = 1;
  ContainmentCache* cache = nullptr;
};

struct ArrowingResult {
  int n = 0;
  bool arrows = false;
  // First class (in enumeration order) with neither red g nor blue h.
  std::optional<TwoColoring> counterexample;
};

// K_n -> (g, h): every graph F on n vertices has g in F or h in its complement.
ArrowingResult arrows(int n, const Graph& g, const Graph& h, const ArrowOptions& options = {});

enum class RamseyStatus { exact, lower_bound_only };

struct RamseyValue {
  RamseyStatus status = RamseyStatus::lower_bound_only;
  std::optional<int> value;  // set when exact
  int lower_bound = 0;       // r(g, h) >= lower_bound
  std::optional<TwoColoring> lower_witness;  // on lower_bound - 1 vertices
};

RamseyValue ramsey_number(const Graph& g, const Graph& h, int n_max,
                          const ArrowOptions& options = {});

}  // namespace rgk
