#pragma once

#include <cstdint>
#include <vector>

#include "wf/webgraph.hpp"

namespace wf {

struct TaitReport {
  long long tait_count = 0;
  long long identity_rhs = 0;
  // (1-set index in canonical enumeration order, n(s)) for each even 1-set.
  std::vector<std::pair<int, int>> even_onesets;
  bool ok = false;
};

// Number of edge colourings by {0,1,2} with the three colours at every
// vertex distinct. Circle edges contribute a free factor of 3; any loop
// edge forces 0 (one edge cannot take two distinct colours).
long long count_tait(const WebGraph& web);

// Independent exhaustive oracle: tries all 3^#edges assignments.
long long count_tait_oracle(const WebGraph& web);

// lhs = count_tait, rhs = sum over even 1-sets of 2^{n(s)}.
TaitReport verify_identity(const WebGraph& web);

// Deterministic connected cubic multigraphs via the configuration model
// (loops and parallel edges permitted). Vertex counts are drawn from the
// even numbers in [2, max_vertices]. Throws std::invalid_argument for
// max_vertices < 2, odd, or > 12, or count < 0.
std::vector<WebGraph> random_cubic_multigraphs(int max_vertices,
                                               std::uint64_t seed, int count);

}  // namespace wf
