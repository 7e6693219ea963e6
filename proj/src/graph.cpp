#include "rgk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "rgk/error.hpp"

namespace rgk {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxOrder)
    throw PreconditionError("graph order " + std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxOrder) + "]");
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = b.build();
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet mask = first_n(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const VertexSet row = rows[static_cast<std::size_t>(v)];
    if ((row & ~mask) != 0) throw PreconditionError("adjacency row references a missing vertex");
    if ((row & bit(v)) != 0) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    for_each_vertex(row, [&](Vertex u) {
      if ((rows[static_cast<std::size_t>(u)] & bit(v)) == 0)
        throw PreconditionError("adjacency is not symmetric");
    });
    degree_sum += popcount(row);
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.edges_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (VertexSet row : rows_) best = std::max(best, popcount(row));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < order(); ++u)
    for_each_vertex(rows_[static_cast<std::size_t>(u)] & ~first_n(u + 1),
                    [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

GraphBuilder::GraphBuilder(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = order();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for order " + std::to_string(n));
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

PartSizes::PartSizes(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw PreconditionError("part sizes must be positive");
    total_ += p;
  }
}

PartSizes PartSizes::uniform(int count, int size) {
  if (count < 0) throw PreconditionError("negative part count");
  return PartSizes(std::vector<int>(static_cast<std::size_t>(count), size));
}

std::string PartSizes::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

// graph6: header chr(63+n), then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per byte, +63.
Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw PreconditionError("graph6: empty string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 63 + kMaxOrder)
    throw PreconditionError("graph6: malformed header byte");
  const int n = header - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body)
    throw PreconditionError("graph6: expected " + std::to_string(body) + " body bytes, got " +
                            std::to_string(text.size() - 1));
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < body; ++i) {
    const int c = static_cast<unsigned char>(text[1 + i]);
    if (c < 63 || c > 126) throw PreconditionError("graph6: body byte out of range");
    const int chunk = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = ((chunk >> b) & 1) != 0;
      if (k >= bits) {
        if (set) throw PreconditionError("graph6: nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Column j holds pairs (0,j),...,(j-1,j); locate pair number k.
      int j = 1;
      std::size_t start = 0;
      while (start + static_cast<std::size_t>(j) <= k) {
        start += static_cast<std::size_t>(j);
        ++j;
      }
      const int i_row = static_cast<int>(k - start);
      rows[static_cast<std::size_t>(i_row)] |= bit(j);
      rows[static_cast<std::size_t>(j)] |= bit(i_row);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | ((g.rows()[static_cast<std::size_t>(i)] >> j) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for (Vertex v = 0; v < g.order(); ++v)
    rows[static_cast<std::size_t>(v)] = all & ~rows[static_cast<std::size_t>(v)] & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(std::span<const Graph> graphs) {
  int total = 0;
  for (const Graph& g : graphs) total += g.order();
  check_order(total);
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(total));
  int offset = 0;
  for (const Graph& g : graphs) {
    for (VertexSet row : g.rows()) rows.push_back(row << offset);
    offset += g.order();
  }
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(std::initializer_list<Graph> graphs) {
  return disjoint_union(std::span<const Graph>(graphs.begin(), graphs.size()));
}

Graph copies(const Graph& g, int count) {
  if (count < 0) throw PreconditionError("negative copy count");
  std::vector<Graph> parts(static_cast<std::size_t>(count), g);
  return disjoint_union(parts);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  check_order(n1 + n2);
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(n1 + n2));
  const VertexSet right = first_n(n2) << n1;
  for (VertexSet row : g1.rows()) rows.push_back(row | right);
  for (VertexSet row : g2.rows()) rows.push_back((row << n1) | first_n(n1));
  return Graph::from_rows(std::move(rows));
}

Graph complete_multipartite(const PartSizes& parts) {
  if (parts.count() == 0) throw PreconditionError("complete_multipartite: no parts");
  check_order(parts.total());
  const VertexSet all = first_n(parts.total());
  std::vector<VertexSet> rows;
  int offset = 0;
  for (int size : parts.parts()) {
    const VertexSet block = first_n(size) << offset;
    for (int i = 0; i < size; ++i) rows.push_back(all & ~block);
    offset += size;
  }
  return Graph::from_rows(std::move(rows));
}

Graph standard_graph(GraphKind kind, int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  GraphBuilder b(n);
  switch (kind) {
    case GraphKind::path:
      for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
      break;
    case GraphKind::star:
      for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
      break;
    case GraphKind::cycle:
      if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
      for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
      break;
    case GraphKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
      break;
    case GraphKind::empty:
      break;
  }
  return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  VertexSet seen = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order())
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen & bit(v)) throw PreconditionError("induced_subgraph: repeated vertex");
    seen |= bit(v);
  }
  const int k = static_cast<int>(vs.size());
  std::vector<VertexSet> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.rows()[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])] &
          bit(vs[static_cast<std::size_t>(j)]))
        rows[static_cast<std::size_t>(i)] |= bit(j);
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("relabel: size mismatch");
  VertexSet image = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || (image & bit(p))) throw PreconditionError("relabel: not a permutation");
    image |= bit(p);
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = 0;
    for_each_vertex(g.rows()[static_cast<std::size_t>(v)],
                    [&](Vertex u) { row |= bit(perm[static_cast<std::size_t>(u)]); });
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.rows()[static_cast<std::size_t>(v)]; });
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<Vertex> members;
    for_each_vertex(comp, [&](Vertex v) { members.push_back(v); });
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

}  // namespace rgk
