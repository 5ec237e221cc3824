#pragma once

#include <string>
#include <vector>

#include "wf/webgraph.hpp"

namespace wf {

// An r/c edge colouring: c_edges holds the edge indices coloured c, in
// increasing order. At every vertex exactly one slot is c; c-loops are
// forbidden (a loop would claim two of the three slots).
struct OneSet {
  std::vector<int> c_edges;
};

// The complementary 2-set traced into cycles. Each cycle is the list of
// r-edge indices in traversal order; a lone r-circle edge is its own
// one-element cycle. c_endpoint_count[i] counts c-edge ends met by cycle i
// (one per vertex on the cycle).
struct RCycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> cycle_vertices;  // vertices on each cycle
  std::vector<int> c_endpoint_count;
  int n() const { return static_cast<int>(cycles.size()); }
  // cycle_of_edge[e] = cycle index of r-edge e, -1 for c-edges.
  std::vector<int> cycle_of_edge;
};

enum class LiftKind { InvariantCircle, SwappedPair, SingleWrappingCircle };

struct LiftedComponent {
  int c_edge = -1;  // source c edge index
  LiftKind kind = LiftKind::InvariantCircle;
};

// Combinatorial shadow of the real double cover of (web, s).
struct CoverShadow {
  int b1 = 0;  // n(s) - 1
  std::vector<LiftedComponent> lifted_c;
  long long naive_spinc_count = 1;  // 2^(#lifted orbit classes)
  bool even = false;
};

struct CComponent {
  bool circle = false;
  int edge = -1;
  std::pair<int, int> endpoints{-1, -1};  // vertex pair for arcs
};

// All labelled 1-sets, in canonical order (lexicographic on the sorted
// c-edge index lists). Empty when none exists.
std::vector<OneSet> enumerate_onesets(const WebGraph& web);

bool is_oneset(const WebGraph& web, const std::vector<int>& c_edges);
bool is_oneset(const WebGraph& web, const std::vector<std::string>& c_ids);

RCycleDecomposition r_cycles(const WebGraph& web, const OneSet& s);

bool is_even(const WebGraph& web, const OneSet& s);

std::vector<CComponent> c_components(const WebGraph& web, const OneSet& s);

// Requires spatial.planar or a linking parity for every c circle.
CoverShadow cover_shadow(const WebGraph& web, const OneSet& s);

struct FoamOneSet {
  std::vector<int> c_facets;
};

std::vector<FoamOneSet> enumerate_foam_onesets(const FoamSkeleton& foam);

// The tetrahedral-point consequence: exactly 2 of the 6 facet slots are c
// and the two c facets share no seam at that point. Asserted on results of
// enumerate_foam_onesets; exposed for tests.
bool tetra_consequence_holds(const FoamSkeleton& foam, const FoamOneSet& s);

}  // namespace wf
