#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wf {

// A parse or validation failure. `id` is the offending vertex/edge id when
// known, `offset` the byte offset of that id in the source document (or of
// the syntax error), -1 if unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::string id = {}, long offset = -1);
  std::string id;
  long offset = -1;
};

struct SpatialTags {
  bool planar = false;
  std::optional<std::string> family;  // handcuff | twisted_handcuff | ...
  // braid_closure parameters, present iff family == "braid_closure"
  std::optional<int> braid_strands;
  std::optional<std::string> braid_word;
  // (c-circle edge id, r-cycle index) -> linking parity mod 2
  std::map<std::pair<std::string, int>, int> linking_parity;
};

// Trivalent spatial graph. Vertices own three ordered half-edge slots;
// segment edges have two ends bound to (vertex, slot) pairs, circle edges
// have none. Immutable after construction.
class WebGraph {
 public:
  enum class EdgeKind { Segment, Circle };

  struct End {
    int vertex = -1;  // index into vertices()
    int slot = -1;    // 0..2
  };

  struct Edge {
    std::string id;
    EdgeKind kind = EdgeKind::Segment;
    std::vector<End> ends;  // size 2 for segments, 0 for circles
  };

  WebGraph() = default;
  WebGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
           std::optional<SpatialTags> spatial = std::nullopt);

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<SpatialTags>& spatial() const { return spatial_; }

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int vertex_index(const std::string& id) const;  // -1 if absent
  int edge_index(const std::string& id) const;    // -1 if absent

  // slot_edge(v, k): index of the edge bound to slot k of vertex v, and
  // which of its ends (0 or 1) sits there. -1 when the slot is unbound
  // (only possible on invalid graphs).
  int slot_edge(int v, int k) const { return slots_[v][k].first; }
  int slot_end(int v, int k) const { return slots_[v][k].second; }

  bool is_loop(int e) const;  // segment with both ends at one vertex

  // Empty iff all invariants hold; one message per violation.
  std::vector<std::string> validate() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::optional<SpatialTags> spatial_;
  // per vertex, per slot: (edge index, end index)
  std::vector<std::array<std::pair<int, int>, 3>> slots_;
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> edge_lookup_;
};

struct FoamSkeleton {
  struct Seam {
    std::string id;
    std::vector<int> facets;  // exactly 3 facet indices, with multiplicity
  };
  struct TetraPoint {
    std::string id;
    std::vector<int> seams;   // exactly 4
    std::vector<int> facets;  // exactly 6 facet slots, with multiplicity
  };

  std::vector<std::string> facet_ids;
  std::vector<Seam> seams;
  std::vector<TetraPoint> tetra_points;

  int facet_index(const std::string& id) const;
  std::vector<std::string> validate() const;
};

// JSON text schema, see README. Throws ParseError with id + byte offset.
WebGraph parse_web(const std::string& text);
FoamSkeleton parse_foam(const std::string& text);

// Canonical serialization; parse_web(serialize_web(w)) round-trips
// byte-exactly on canonical documents.
std::string serialize_web(const WebGraph& web);

}  // namespace wf
