#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rgk/embedding.hpp"
#include "rgk/error.hpp"

namespace rgk {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

class ExactPacker {
 public:
  ExactPacker(std::span<const int> items, std::span<const int> bins)
      : items_(items.begin(), items.end()), remaining_(bins.begin(), bins.end()) {
    order_.resize(items_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return items_[idx(a)] > items_[idx(b)]; });
    bin_of_.assign(items_.size(), -1);
  }

  std::optional<std::vector<int>> run() {
    const long long item_sum = std::accumulate(items_.begin(), items_.end(), 0LL);
    const long long bin_sum = std::accumulate(remaining_.begin(), remaining_.end(), 0LL);
    if (item_sum != bin_sum) return std::nullopt;
    if (!place(0)) return std::nullopt;
    return bin_of_;
  }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    std::vector<int> key = remaining_;
    std::sort(key.begin(), key.end());
    if (failed_[i].contains(key)) return false;

    const int item = order_[i];
    const int size = items_[idx(item)];
    std::set<int> tried_capacities;
    for (std::size_t b = 0; b < remaining_.size(); ++b) {
      if (remaining_[b] < size) continue;
      // Bins with equal remaining capacity are interchangeable.
      if (!tried_capacities.insert(remaining_[b]).second) continue;
      remaining_[b] -= size;
      bin_of_[idx(item)] = static_cast<int>(b);
      if (place(i + 1)) return true;
      remaining_[b] += size;
    }
    bin_of_[idx(item)] = -1;
    failed_[i].insert(std::move(key));
    return false;
  }

  std::vector<int> items_;
  std::vector<int> remaining_;
  std::vector<int> order_;
  std::vector<int> bin_of_;
  std::map<std::size_t, std::set<std::vector<int>>> failed_;
};

std::vector<VertexSet> complement_rows(const Graph& host) {
  std::vector<VertexSet> rows(idx(host.order()));
  for (Vertex v = 0; v < host.order(); ++v)
    rows[idx(v)] = host.vertices() & ~host.rows()[idx(v)] & ~bit(v);
  return rows;
}

std::vector<VertexSet> components_within(const std::vector<VertexSet>& rows, VertexSet scope) {
  std::vector<VertexSet> out;
  while (scope != 0) {
    VertexSet comp = bit(lowest(scope));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= rows[idx(v)]; });
      next &= scope;
      frontier = next & ~comp;
      comp |= next;
    }
    scope &= ~comp;
    out.push_back(comp);
  }
  return out;
}

// Spanning case on `scope`: every complement component goes whole into one part.
std::optional<PartAssignment> pack_scope(const Graph& host, const std::vector<VertexSet>& co,
                                         VertexSet scope, const PartSizes& parts) {
  const auto comps = components_within(co, scope);
  std::vector<int> sizes;
  for (VertexSet c : comps) sizes.push_back(popcount(c));
  const auto packing = pack_exact(sizes, parts.parts());
  if (!packing) return std::nullopt;
  PartAssignment a;
  a.part_of.assign(idx(host.order()), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for_each_vertex(comps[i], [&](Vertex v) { a.part_of[idx(v)] = (*packing)[i]; });
  return a;
}

// Non-spanning case: choose vertices one at a time for a part or leave
// them out. A selected vertex must share its part with every selected
// complement neighbor.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& host, const std::vector<VertexSet>& co, VertexSet scope,
               const PartSizes& parts, std::optional<std::uint64_t> budget)
      : co_(co), parts_(parts), budget_(budget) {
    for_each_vertex(scope, [&](Vertex v) { vertices_.push_back(v); });
    part_of_.assign(idx(host.order()), -1);
    counts_.assign(idx(parts.count()), 0);
    needed_ = parts.total();
  }

  std::optional<PartAssignment> run() {
    if (!choose(0)) return std::nullopt;
    return PartAssignment{part_of_};
  }

 private:
  bool choose(std::size_t i) {
    if (needed_ == 0) return true;
    if (vertices_.size() - i < static_cast<std::size_t>(needed_)) return false;
    if (budget_ && ++nodes_ > *budget_) throw BudgetExhausted(*budget_);

    const Vertex v = vertices_[i];
    int forced = -1;
    bool selectable = true;
    for_each_vertex(co_[idx(v)] & selected_, [&](Vertex u) {
      const int p = part_of_[idx(u)];
      if (forced == -1) forced = p;
      else if (forced != p) selectable = false;
    });

    if (selectable) {
      for (int p = 0; p < parts_.count(); ++p) {
        if (forced != -1 && p != forced) continue;
        if (counts_[idx(p)] == parts_[p]) continue;
        if (counts_[idx(p)] == 0 && earlier_empty_twin(p)) continue;
        assign(v, p);
        if (choose(i + 1)) return true;
        unassign(v, p);
      }
    }
    return choose(i + 1);
  }

  bool earlier_empty_twin(int p) const {
    for (int q = 0; q < p; ++q)
      if (counts_[idx(q)] == 0 && parts_[q] == parts_[p]) return true;
    return false;
  }

  void assign(Vertex v, int p) {
    part_of_[idx(v)] = p;
    selected_ |= bit(v);
    ++counts_[idx(p)];
    --needed_;
  }

  void unassign(Vertex v, int p) {
    part_of_[idx(v)] = -1;
    selected_ &= ~bit(v);
    --counts_[idx(p)];
    ++needed_;
  }

  const std::vector<VertexSet>& co_;
  const PartSizes& parts_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<int> part_of_;
  std::vector<int> counts_;
  VertexSet selected_ = 0;
  int needed_ = 0;
};

}  // namespace

std::optional<std::vector<int>> pack_exact(std::span<const int> items, std::span<const int> bins) {
  return ExactPacker(items, bins).run();
}

std::vector<int> complement_component_sizes(const Graph& host, std::span<const Vertex> vs) {
  VertexSet scope = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= host.order()) throw PreconditionError("vertex out of range");
    scope |= bit(v);
  }
  std::vector<int> sizes;
  for (VertexSet c : components_within(complement_rows(host), scope)) sizes.push_back(popcount(c));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::optional<PartAssignment> contains_multipartite(const Graph& host, const PartSizes& parts,
                                                    std::optional<std::uint64_t> budget) {
  if (parts.count() == 0) throw PreconditionError("contains_multipartite: no parts");
  const int total = parts.total();
  if (total > host.order()) return std::nullopt;
  const auto co = complement_rows(host);

  if (total == host.order()) return pack_scope(host, co, host.vertices(), parts);

  if (parts.count() == 1) {
    PartAssignment a;
    a.part_of.assign(idx(host.order()), -1);
    for (Vertex v = 0; v < total; ++v) a.part_of[idx(v)] = 0;
    return a;
  }

  // With two or more parts the target is connected, so it lives inside a
  // single component of the host.
  for (const auto& comp : connected_components(host)) {
    const int size = static_cast<int>(comp.size());
    if (size < total) continue;
    VertexSet scope = 0;
    for (Vertex v : comp) scope |= bit(v);
    auto found = size == total ? pack_scope(host, co, scope, parts)
                               : SubsetSearch(host, co, scope, parts, budget).run();
    if (found) return found;
  }
  return std::nullopt;
}

bool verify_part_assignment(const Graph& host, const PartSizes& parts, const PartAssignment& a) {
  if (static_cast<int>(a.part_of.size()) != host.order()) return false;
  std::vector<int> counts(idx(parts.count()), 0);
  for (int p : a.part_of) {
    if (p < -1 || p >= parts.count()) return false;
    if (p >= 0) ++counts[idx(p)];
  }
  for (int p = 0; p < parts.count(); ++p)
    if (counts[idx(p)] != parts[p]) return false;
  for (Vertex u = 0; u < host.order(); ++u)
    for (Vertex v = u + 1; v < host.order(); ++v) {
      const int pu = a.part_of[idx(u)];
      const int pv = a.part_of[idx(v)];
      if (pu >= 0 && pv >= 0 && pu != pv && !host.adjacent(u, v)) return false;
    }
  return true;
}

}  // namespace rgk
