#pragma once

#include <vector>

#include "rgk/graph.hpp"

namespace rgk {

inline constexpr int kChromaticExactBound = 16;

// chi: chromatic number. s: minimum color-class size over all proper
// chi-colorings (the chromatic surplus). witness[v] is the class of v in
// one optimal coloring attaining s.
struct ChromaticProfile {
  int chi = 0;
  int s = 0;
  std::vector<int> witness;
};

int chromatic_number(const Graph& g);
ChromaticProfile min_color_class(const Graph& g);

// (chi(g) - 1)(h_order - 1) + s(g): Burr's lower bound on r(g, H) for connected H.
long long burr_lower_bound(const Graph& g, long long h_order);
long long burr_lower_bound(const ChromaticProfile& profile, long long h_order);

}  // namespace rgk
