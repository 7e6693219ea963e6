#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgk/graph.hpp"

namespace rgk {

// Injective map from pattern vertices to host vertices: map[v] is the image of v.
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Interchangeable vertex blocks of a host. Blocks are listed in increasing
// vertex order and correspond positionally; exchanging any two blocks of a
// family (fixing all other vertices) must be an automorphism of the host.
struct BlockFamily {
  std::vector<std::vector<Vertex>> blocks;
};

struct HostSymmetry {
  std::vector<BlockFamily> families;
};

// True iff every declared block exchange is an automorphism of `host`.
bool symmetry_is_valid(const Graph& host, const HostSymmetry& symmetry);

struct SearchOptions {
  // Maximum number of search nodes; exceeding it throws BudgetExhausted.
  std::optional<std::uint64_t> budget;
  // Known block symmetries of the host; twins are detected automatically.
  const HostSymmetry* symmetry = nullptr;
};

// Subgraph (not induced) containment. Exhaustive: nullopt means that no
// embedding exists.
std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                        const SearchOptions& options = {});

// Throws PreconditionError when the map's domain or range does not fit.
bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

// part_of[v] is the target part of host vertex v, or -1 if v is unused.
struct PartAssignment {
  std::vector<int> part_of;
};

// Is the complete multipartite graph with the given part sizes a subgraph of
// `host`? In the spanning case every component of the host's complement must
// sit inside a single part, which reduces the question to exact packing.
std::optional<PartAssignment> contains_multipartite(const Graph& host, const PartSizes& parts,
                                                    std::optional<std::uint64_t> budget = {});

bool verify_part_assignment(const Graph& host, const PartSizes& parts, const PartAssignment& a);

// Places every item into a bin so that each bin is filled exactly; returns
// the bin of each item. Bins are tried in index order.
std::optional<std::vector<int>> pack_exact(std::span<const int> items, std::span<const int> bins);

// Sizes of the components of the complement of host[vs], sorted descending.
std::vector<int> complement_component_sizes(const Graph& host, std::span<const Vertex> vs);

std::string format_embedding(const Embedding& e);

}  // namespace rgk
