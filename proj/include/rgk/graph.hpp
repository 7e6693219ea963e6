#pragma once

// Simple undirected graphs on at most 62 vertices, stored as one 64-bit
// adjacency row per vertex, plus the constructors used throughout the
// library (unions, joins, complete multipartite graphs, paths, stars...).
//
// Labeling conventions are fixed so that fixtures stay byte-stable:
//   * disjoint_union / join place the vertices of each operand
//     consecutively, in argument order;
//   * complete_multipartite lays parts out consecutively;
//   * path is 0-1-...-(n-1), star has center 0, cycle closes (n-1)-0.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rgk {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 62;
inline constexpr int kCanonicalExactBound = 12;

constexpr VertexSet bit(Vertex v) noexcept { return VertexSet{1} << v; }
constexpr VertexSet first_n(int n) noexcept { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) noexcept { return std::popcount(s); }
inline Vertex lowest(VertexSet s) noexcept { return std::countr_zero(s); }

template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Rows must be symmetric, loop-free and confined to the first `rows.size()` bits.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept { return edges_; }
  VertexSet vertices() const noexcept { return first_n(order()); }

  bool adjacent(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const { return popcount(neighbors(v)); }
  int max_degree() const noexcept;
  std::span<const VertexSet> rows() const noexcept { return rows_; }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
  int edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  int order() const noexcept { return static_cast<int>(rows_.size()); }
  Graph build() const { return Graph::from_rows(rows_); }

 private:
  std::vector<VertexSet> rows_;
};

// Sizes of the partite sets of a complete multipartite graph.
class PartSizes {
 public:
  PartSizes() = default;
  explicit PartSizes(std::vector<int> parts);
  PartSizes(std::initializer_list<int> parts) : PartSizes(std::vector<int>(parts)) {}

  static PartSizes uniform(int count, int size);

  std::span<const int> parts() const noexcept { return parts_; }
  int count() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept { return total_; }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

enum class GraphKind { path, star, cycle, complete, empty };

// graph6, one-byte header only (n <= 62).
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> graphs);
Graph disjoint_union(std::initializer_list<Graph> graphs);
Graph copies(const Graph& g, int count);
Graph join(const Graph& g1, const Graph& g2);
Graph complete_multipartite(const PartSizes& parts);
Graph standard_graph(GraphKind kind, int n);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

// perm[v] is the new label of vertex v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Canonical string (graph6 of a canonical relabeling): equal iff isomorphic.
// Exact individualization-refinement; rejects graphs above `max_order`.
std::string canonical_form(const Graph& g, int max_order = kCanonicalExactBound);
std::vector<Vertex> canonical_labeling(const Graph& g, int max_order = kCanonicalExactBound);
bool isomorphic(const Graph& a, const Graph& b, int max_order = kCanonicalExactBound);

}  // namespace rgk
