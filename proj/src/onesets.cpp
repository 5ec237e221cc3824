#include "wf/onesets.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace wf {

namespace {

// Colour state during the vertex-by-vertex search.
enum Colour : char { Unset = 0, R = 1, C = 2 };

void search(const WebGraph& web, int v, std::vector<char>& colour,
            std::vector<int>& c_so_far, std::vector<std::vector<int>>& out) {
  const int nv = web.vertex_count();
  if (v == nv) {
    out.push_back(c_so_far);
    return;
  }
  // Pick the c slot for vertex v; the other two slots go r.
  for (int k = 0; k < 3; ++k) {
    int ec = web.slot_edge(v, k);
    if (ec < 0) return;  // invalid web
    if (web.is_loop(ec)) continue;  // c-loops forbidden
    if (colour[ec] == R) continue;
    bool ok = true;
    std::vector<std::pair<int, char>> touched;
    auto set_colour = [&](int e, char c) {
      if (colour[e] == Unset) {
        touched.push_back({e, colour[e]});
        colour[e] = c;
        return true;
      }
      return colour[e] == c;
    };
    if (!set_colour(ec, C)) ok = false;
    for (int j = 0; ok && j < 3; ++j) {
      if (j == k) continue;
      int er = web.slot_edge(v, j);
      if (er == ec) { ok = false; break; }  // c edge reappearing as r
      if (!set_colour(er, R)) ok = false;
    }
    if (ok) {
      // Push ec only on the Unset -> C transition so a shared c segment
      // appears once, not once per endpoint.
      bool pushed = !touched.empty() && touched.front().first == ec;
      if (pushed) c_so_far.push_back(ec);
      search(web, v + 1, colour, c_so_far, out);
      if (pushed) c_so_far.pop_back();
    }
    for (auto it = touched.rbegin(); it != touched.rend(); ++it)
      colour[it->first] = it->second;
  }
}

}  // namespace

std::vector<OneSet> enumerate_onesets(const WebGraph& web) {
  const int ne = web.edge_count();
  std::vector<int> circles;
  for (int e = 0; e < ne; ++e)
    if (web.edges()[e].kind == WebGraph::EdgeKind::Circle) circles.push_back(e);

  std::vector<std::vector<int>> vertex_part;
  std::vector<char> colour(ne, Unset);
  std::vector<int> acc;
  search(web, 0, colour, acc, vertex_part);

  // Circle edges are unconstrained: each subset of circles may be c.
  std::vector<std::vector<int>> results;
  const int nc = static_cast<int>(circles.size());
  for (const auto& base : vertex_part) {
    for (long long mask = 0; mask < (1LL << nc); ++mask) {
      std::vector<int> cs = base;
      for (int i = 0; i < nc; ++i)
        if (mask >> i & 1) cs.push_back(circles[i]);
      std::sort(cs.begin(), cs.end());
      results.push_back(std::move(cs));
    }
  }
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());

  std::vector<OneSet> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(OneSet{std::move(r)});
  return out;
}

bool is_oneset(const WebGraph& web, const std::vector<int>& c_edges) {
  std::vector<char> is_c(web.edge_count(), 0);
  for (int e : c_edges) {
    if (e < 0 || e >= web.edge_count())
      throw std::invalid_argument("unknown edge index " + std::to_string(e));
    is_c[e] = 1;
  }
  for (int e = 0; e < web.edge_count(); ++e)
    if (is_c[e] && web.is_loop(e)) return false;
  for (int v = 0; v < web.vertex_count(); ++v) {
    int c_slots = 0;
    for (int k = 0; k < 3; ++k) {
      int e = web.slot_edge(v, k);
      if (e < 0) return false;
      if (is_c[e]) ++c_slots;
    }
    if (c_slots != 1) return false;
  }
  return true;
}

bool is_oneset(const WebGraph& web, const std::vector<std::string>& c_ids) {
  std::vector<int> idx;
  for (const auto& id : c_ids) {
    int e = web.edge_index(id);
    if (e < 0) throw std::invalid_argument("unknown edge id " + id);
    idx.push_back(e);
  }
  return is_oneset(web, idx);
}

RCycleDecomposition r_cycles(const WebGraph& web, const OneSet& s) {
  RCycleDecomposition out;
  const int ne = web.edge_count();
  std::vector<char> is_c(ne, 0);
  for (int e : s.c_edges) is_c[e] = 1;

  out.cycle_of_edge.assign(ne, -1);

  // r circle edges are their own cycles.
  for (int e = 0; e < ne; ++e)
    if (!is_c[e] && web.edges()[e].kind == WebGraph::EdgeKind::Circle) {
      out.cycle_of_edge[e] = out.n();
      out.cycles.push_back({e});
      out.cycle_vertices.push_back({});
      out.c_endpoint_count.push_back(0);
    }

  // At each vertex the two r slots pair the two r half-edges; trace.
  std::vector<char> used_half(2 * ne, 0);  // (edge, end) pairs
  auto half = [&](int e, int end) { return 2 * e + end; };
  for (int e0 = 0; e0 < ne; ++e0) {
    if (is_c[e0] || web.edges()[e0].kind != WebGraph::EdgeKind::Segment)
      continue;
    for (int start_end = 0; start_end < 2; ++start_end) {
      if (used_half[half(e0, start_end)]) continue;
      std::vector<int> cyc;
      std::set<int> verts;
      int e = e0, arriving = start_end;
      do {
        cyc.push_back(e);
        used_half[half(e, 0)] = used_half[half(e, 1)] = 1;
        // Walk out of the arriving end's vertex through its other r slot.
        const auto& end = web.edges()[e].ends[arriving];
        verts.insert(end.vertex);
        int next_e = -1, next_end = -1;
        for (int k = 0; k < 3; ++k) {
          int f = web.slot_edge(end.vertex, k);
          if (is_c[f]) continue;
          if (f == e && web.slot_end(end.vertex, k) == arriving) continue;
          next_e = f;
          next_end = web.slot_end(end.vertex, k);
          break;
        }
        assert(next_e >= 0);
        e = next_e;
        arriving = 1 - next_end;  // leave through next_end, arrive at other
      } while (!(e == e0 && arriving == start_end));
      int ci = out.n();
      for (int f : cyc)
        if (out.cycle_of_edge[f] < 0) out.cycle_of_edge[f] = ci;
      int endpoints = static_cast<int>(verts.size());
      out.cycles.push_back(std::move(cyc));
      out.cycle_vertices.push_back({verts.begin(), verts.end()});
      out.c_endpoint_count.push_back(endpoints);
      break;  // both ends of e0 consumed
    }
  }
  return out;
}

bool is_even(const WebGraph& web, const OneSet& s) {
  RCycleDecomposition d = r_cycles(web, s);
  return std::all_of(d.c_endpoint_count.begin(), d.c_endpoint_count.end(),
                     [](int c) { return c % 2 == 0; });
}

std::vector<CComponent> c_components(const WebGraph& web, const OneSet& s) {
  std::vector<CComponent> out;
  for (int e : s.c_edges) {
    CComponent comp;
    comp.edge = e;
    if (web.edges()[e].kind == WebGraph::EdgeKind::Circle) {
      comp.circle = true;
    } else {
      comp.endpoints = {web.edges()[e].ends[0].vertex,
                        web.edges()[e].ends[1].vertex};
    }
    out.push_back(comp);
  }
  return out;
}

CoverShadow cover_shadow(const WebGraph& web, const OneSet& s) {
  CoverShadow out;
  RCycleDecomposition d = r_cycles(web, s);
  out.b1 = d.n() - 1;
  out.even = is_even(web, s);

  bool planar = web.spatial() && web.spatial()->planar;
  for (const CComponent& comp : c_components(web, s)) {
    LiftedComponent lift;
    lift.c_edge = comp.edge;
    if (!comp.circle) {
      lift.kind = LiftKind::InvariantCircle;
    } else {
      int parity = 0;
      if (planar) {
        parity = 0;  // planar diagrams: all linking parities vanish
      } else {
        const std::string& id = web.edges()[comp.edge].id;
        bool found = false;
        if (web.spatial()) {
          for (int cyc = 0; cyc < d.n(); ++cyc) {
            auto it = web.spatial()->linking_parity.find({id, cyc});
            if (it != web.spatial()->linking_parity.end()) {
              parity ^= it->second & 1;
              found = true;
            }
          }
        }
        if (!found)
          throw std::invalid_argument("missing linking data for c-circle " +
                                      id + " on a non-planar web");
      }
      lift.kind = parity % 2 == 0 ? LiftKind::SwappedPair
                                  : LiftKind::SingleWrappingCircle;
    }
    out.lifted_c.push_back(lift);
  }
  out.naive_spinc_count = 1LL << out.lifted_c.size();
  return out;
}

std::vector<FoamOneSet> enumerate_foam_onesets(const FoamSkeleton& foam) {
  const int nf = static_cast<int>(foam.facet_ids.size());
  std::vector<FoamOneSet> out;
  if (nf > 30) throw std::invalid_argument("foam too large to enumerate");
  for (long long mask = 0; mask < (1LL << nf); ++mask) {
    bool ok = true;
    for (const auto& seam : foam.seams) {
      int c = 0;
      for (int f : seam.facets) c += (mask >> f) & 1;
      if (c != 1) { ok = false; break; }
    }
    if (!ok) continue;
    FoamOneSet s;
    for (int f = 0; f < nf; ++f)
      if (mask >> f & 1) s.c_facets.push_back(f);
    // The tetrahedral constraint is a consequence, asserted not pruned.
    assert(tetra_consequence_holds(foam, s));
    out.push_back(std::move(s));
  }
  return out;
}

bool tetra_consequence_holds(const FoamSkeleton& foam, const FoamOneSet& s) {
  std::set<int> c(s.c_facets.begin(), s.c_facets.end());
  for (const auto& tp : foam.tetra_points) {
    int c_slots = 0;
    std::set<int> c_here;
    for (int f : tp.facets)
      if (c.count(f)) { ++c_slots; c_here.insert(f); }
    if (c_slots != 2 || c_here.size() != 2) return false;
    // The two c facets may not meet along a seam at this point.
    for (int si : tp.seams) {
      const auto& seam = foam.seams[si];
      int both = 0;
      for (int f : seam.facets)
        if (c_here.count(f)) ++both;
      if (both >= 2) return false;
    }
  }
  return true;
}

}  // namespace wf
