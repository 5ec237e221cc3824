#include "wf/catalogue.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wf {

namespace {

int count_circles(const WebGraph& web) {
  int n = 0;
  for (const auto& e : web.edges())
    if (e.kind == WebGraph::EdgeKind::Circle) ++n;
  return n;
}

bool is_simple(const WebGraph& web) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : web.edges()) {
    if (e.kind == WebGraph::EdgeKind::Circle) return false;
    int a = e.ends[0].vertex, b = e.ends[1].vertex;
    if (a == b) return false;
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

std::vector<std::set<int>> adjacency(const WebGraph& web) {
  std::vector<std::set<int>> adj(web.vertex_count());
  for (const auto& e : web.edges()) {
    if (e.kind == WebGraph::EdgeKind::Circle) continue;
    adj[e.ends[0].vertex].insert(e.ends[1].vertex);
    adj[e.ends[1].vertex].insert(e.ends[0].vertex);
  }
  return adj;
}

bool is_k4(const WebGraph& web) {
  if (web.vertex_count() != 4 || web.edge_count() != 6 || !is_simple(web))
    return false;
  auto adj = adjacency(web);
  for (int v = 0; v < 4; ++v)
    if (adj[v].size() != 3) return false;
  return true;
}

// The (3,5)-Moore-graph characterization: cubic, simple, 10 vertices,
// adjacent vertices share no neighbour, nonadjacent share exactly one.
bool is_petersen(const WebGraph& web) {
  if (web.vertex_count() != 10 || web.edge_count() != 15 || !is_simple(web))
    return false;
  auto adj = adjacency(web);
  for (int v = 0; v < 10; ++v)
    if (adj[v].size() != 3) return false;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) {
      int common = 0;
      for (int x : adj[a])
        if (adj[b].count(x)) ++common;
      if (common != (adj[a].count(b) ? 0 : 1)) return false;
    }
  return true;
}

// Two vertex-disjoint equal-length cycles joined by a perfect matching.
bool has_prism_structure(const WebGraph& web) {
  if (web.vertex_count() == 0 || web.vertex_count() % 2 != 0) return false;
  if (count_circles(web) > 0) return false;
  for (const OneSet& s : enumerate_onesets(web))
    if (classify_oneset(web, s) == OneSetType::RungMatching) return true;
  return false;
}

bool is_handcuff_structure(const WebGraph& web) {
  if (web.vertex_count() != 2 || web.edge_count() != 3) return false;
  int loops = 0, plain = 0;
  for (int e = 0; e < 3; ++e) {
    if (web.edges()[e].kind == WebGraph::EdgeKind::Circle) return false;
    if (web.is_loop(e)) ++loops;
    else ++plain;
  }
  return loops == 2 && plain == 1;
}

bool is_theta_structure(const WebGraph& web, int circles_allowed) {
  if (web.vertex_count() != 2 || count_circles(web) != circles_allowed ||
      web.edge_count() != 3 + circles_allowed)
    return false;
  for (const auto& e : web.edges()) {
    if (e.kind == WebGraph::EdgeKind::Circle) continue;
    if (e.ends[0].vertex == e.ends[1].vertex) return false;
  }
  return true;
}

std::vector<int> bridges(const WebGraph& web) {
  int nv = web.vertex_count();
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<int> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    bool skipped_parent = false;
    for (int k = 0; k < 3; ++k) {
      int e = web.slot_edge(v, k);
      if (web.is_loop(e)) continue;
      if (e == parent_edge && !skipped_parent) {
        skipped_parent = true;
        continue;
      }
      const auto& ed = web.edges()[e];
      int w = ed.ends[0].vertex == v && ed.ends[0].slot == k ? ed.ends[1].vertex
                                                             : ed.ends[0].vertex;
      if (disc[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < nv; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

[[noreturn]] void tag_contradiction(const std::string& tag,
                                    const std::string& structure) {
  throw std::invalid_argument("family tag '" + tag +
                              "' contradicts the structure (" + structure +
                              ")");
}

HomologyAnswer towers(const std::string& flavour, int count, ModuleShape shape,
                      std::vector<int> offsets, int spinc, int naive,
                      const std::string& provenance) {
  HomologyAnswer a;
  a.flavour = flavour;
  a.known = true;
  a.spinc_count = spinc;
  a.naive_spinc_count = naive;
  if (offsets.empty()) offsets.assign(count, 0);
  for (int i = 0; i < count; ++i)
    a.total.summands.push_back({shape, offsets[i % offsets.size()]});
  a.total_rank = shape == ModuleShape::Finite
                     ? std::to_string(count)
                     : std::string("infinite (tower)");
  a.provenance = provenance;
  return a;
}

HomologyAnswer zero_answer(const std::string& flavour, int naive,
                           const std::string& provenance) {
  HomologyAnswer a;
  a.flavour = flavour;
  a.known = true;
  a.zero = true;
  a.naive_spinc_count = naive;
  a.total_rank = "0";
  a.provenance = provenance;
  return a;
}

HomologyAnswer unknown_answer(const std::string& flavour, int naive) {
  HomologyAnswer a;
  a.flavour = flavour;
  a.known = false;
  a.naive_spinc_count = naive;
  a.total_rank = "unknown";
  a.provenance = "not tabulated";
  return a;
}

// Rank of the cone of the dot operator on one truncated up-tower,
// measured away from the truncation end. Always 1; computed, not assumed.
int cone_rank_per_tower() {
  const int len = 8;
  Complex tower;
  tower.d = GF2Matrix(len, len);
  tower.gradings.resize(len);
  for (int i = 0; i < len; ++i) tower.gradings[i] = i;
  GF2Matrix shift(len, len);
  for (int i = 1; i < len; ++i) shift.set(i - 1, i, true);
  Complex cone = mapping_cone(tower, shift, -1);
  auto dims = homology(cone, -1, len - 2);
  int total = 0;
  for (auto [g, d] : dims) total += d;
  return total;
}

}  // namespace

std::string family_name(const FamilyId& f) {
  switch (f.family) {
    case Family::Unknot: return "unknot";
    case Family::Unlink: return "unlink(" + std::to_string(f.n) + ")";
    case Family::Theta: return "theta";
    case Family::ThetaPlusUnknot: return "theta_plus_unknot";
    case Family::Tetrahedron: return "tetrahedron";
    case Family::Prism: return "prism(" + std::to_string(f.n) + ")";
    case Family::Handcuff: return "handcuff";
    case Family::TwistedHandcuff: return "twisted_handcuff";
    case Family::HopfHandcuff: return "hopf_handcuff";
    case Family::BraidClosure:
      return "braid_closure(" + std::to_string(f.n) + ")";
    case Family::PetersenEmbedding: return "petersen_embedding";
    case Family::Unknown: return "unknown";
  }
  return "unknown";
}

FamilyId recognize(const WebGraph& web) {
  const std::string tag =
      web.spatial() && web.spatial()->family ? *web.spatial()->family : "";
  auto check_tag = [&](std::initializer_list<const char*> allowed,
                       const std::string& structure) {
    if (tag.empty()) return;
    for (const char* a : allowed)
      if (tag == a) return;
    tag_contradiction(tag, structure);
  };

  int circles = count_circles(web);
  if (web.vertex_count() == 0 && circles > 0) {
    check_tag({"unknot", "unlink"}, "vertex-free circles");
    return circles == 1 ? FamilyId{Family::Unknot, 1}
                        : FamilyId{Family::Unlink, circles};
  }
  if (is_theta_structure(web, 0)) {
    check_tag({"theta"}, "theta");
    return {Family::Theta, 0};
  }
  if (is_theta_structure(web, 1)) {
    check_tag({"theta_plus_unknot"}, "theta plus circle");
    return {Family::ThetaPlusUnknot, 0};
  }
  if (is_handcuff_structure(web)) {
    if (tag == "twisted_handcuff") return {Family::TwistedHandcuff, 1};
    if (tag == "hopf_handcuff") return {Family::HopfHandcuff, 1};
    check_tag({"handcuff", "prism"}, "handcuff");
    return {Family::Handcuff, 1};
  }
  if (is_k4(web)) {
    check_tag({"tetrahedron"}, "K4");
    return {Family::Tetrahedron, 0};
  }
  if (is_petersen(web)) {
    check_tag({"braid_closure"}, "Petersen incidence");
    return {Family::PetersenEmbedding, 5};
  }
  if (has_prism_structure(web)) {
    int n = web.vertex_count() / 2;
    if (tag == "braid_closure") {
      int strands = web.spatial()->braid_strands.value_or(n);
      if (strands != n) tag_contradiction(tag, "prism on 2n vertices");
      return {Family::BraidClosure, n};
    }
    check_tag({"prism"}, "prism");
    return {Family::Prism, n};
  }
  if (!tag.empty()) tag_contradiction(tag, "no matching structure");
  return {Family::Unknown, 0};
}

OneSetType classify_oneset(const WebGraph& web, const OneSet& s) {
  RCycleDecomposition d = r_cycles(web, s);
  if (d.n() == 1) return OneSetType::RingType;
  if (d.n() != 2) return OneSetType::Other;
  const auto& va = d.cycle_vertices[0];
  const auto& vb = d.cycle_vertices[1];
  if (va.size() != vb.size() || va.empty()) return OneSetType::Other;
  std::set<int> sa(va.begin(), va.end());
  std::set<int> sb(vb.begin(), vb.end());
  if (sa.size() + sb.size() != static_cast<size_t>(web.vertex_count()))
    return OneSetType::Other;
  for (int e : s.c_edges) {
    if (web.edges()[e].kind == WebGraph::EdgeKind::Circle)
      return OneSetType::Other;
    int x = web.edges()[e].ends[0].vertex, y = web.edges()[e].ends[1].vertex;
    bool crossing = (sa.count(x) && sb.count(y)) || (sb.count(x) && sa.count(y));
    if (!crossing) return OneSetType::Other;
  }
  return OneSetType::RungMatching;
}

HomologyAnswer homology(const WebGraph& web, const OneSet& s,
                        const std::string& flavour) {
  if (!is_oneset(web, s.c_edges))
    throw std::invalid_argument("not a 1-set of this web");
  FamilyId fam = recognize(web);
  int naive = static_cast<int>(cover_shadow(web, s).naive_spinc_count);
  RCycleDecomposition rc = r_cycles(web, s);

  switch (fam.family) {
    case Family::Unknot:
      if (s.c_edges.empty()) {
        if (flavour == "check")
          return towers("check", 1, ModuleShape::TowerUp, {0}, 1, naive,
                        "tabulated: F2[v^-1,v]/F2[v]");
        if (flavour == "hat")
          return towers("hat", 1, ModuleShape::TowerDown, {0}, 1, naive,
                        "tabulated: F2[v]");
        if (flavour == "bar")
          return towers("bar", 1, ModuleShape::BiTower, {0}, 1, naive,
                        "tabulated: F2[v^-1,v]");
        return unknown_answer(flavour, naive);
      }
      if (flavour == "hat")
        return towers("hat", naive, ModuleShape::TowerDownU, {0}, naive, naive,
                      "tabulated: F2[U] per isotropy class, deg U = -2");
      return unknown_answer(flavour, naive);
    case Family::Unlink: {
      int n = fam.n;
      int k = n - static_cast<int>(s.c_edges.size());
      if (flavour != "hat") return unknown_answer(flavour, naive);
      if (k == 0)
        return towers("hat", naive, ModuleShape::TowerDownU, {0}, naive, naive,
                      "tabulated: F2[U] per isotropy class");
      // Lambda[x_1..x_{k-1}] (x) F2[v] per each of 2^{n-k} classes.
      std::vector<int> offsets;
      for (int mask = 0; mask < (1 << (k - 1)); ++mask)
        offsets.push_back(-__builtin_popcount(mask));
      std::sort(offsets.rbegin(), offsets.rend());
      int spinc = 1 << (n - k);
      HomologyAnswer a =
          towers("hat", 0, ModuleShape::TowerDown, {}, spinc, naive,
                 "tabulated: Lambda[x_1..x_{k-1}] (x) F2[v] per class, "
                 "deg x_i = -1");
      for (int c = 0; c < spinc; ++c)
        for (int off : offsets)
          a.total.summands.push_back({ModuleShape::TowerDown, off});
      a.total_rank = "infinite (tower)";
      return a;
    }
    case Family::Theta:
      if (flavour == "hat")
        return towers("hat", 2, ModuleShape::TowerDown, {0}, 2, naive,
                      "tabulated: F2[v] per each of two isotropy classes");
      return unknown_answer(flavour, naive);
    case Family::ThetaPlusUnknot: {
      bool circle_is_r = true;
      for (int e : s.c_edges)
        if (web.edges()[e].kind == WebGraph::EdgeKind::Circle)
          circle_is_r = false;
      if (circle_is_r && flavour == "check")
        return towers("check", 2, ModuleShape::TowerUp, {0, -1}, 2, naive,
                      "tabulated: F2[x]/x^2 (x) F2[v^-1,v]/F2[v]");
      return unknown_answer(flavour, naive);
    }
    case Family::Tetrahedron: {
      if (flavour != "hat") return unknown_answer(flavour, naive);
      HomologyAnswer a =
          towers("hat", 2, ModuleShape::TowerDown, {0}, 2, naive,
                 "tabulated: F2[v]^{+2}, one tower per isotropy class");
      a.discrepancy = a.spinc_count != a.naive_spinc_count;
      return a;
    }
    case Family::Handcuff:
      return zero_answer(flavour, naive, "tabulated: 0 (embedded bridge)");
    case Family::TwistedHandcuff:
      return zero_answer(flavour, naive,
                         "tabulated: 0 (arc meets the separating sphere "
                         "three times)");
    case Family::HopfHandcuff:
      if (flavour == "hat")
        return towers("hat", 4, ModuleShape::TowerDown, {0}, 4, naive,
                      "tabulated: F2[v]^{+4}, four torsion classes");
      return unknown_answer(flavour, naive);
    case Family::Prism: {
      OneSetType t = classify_oneset(web, s);
      int n = fam.n;
      if (t == OneSetType::RungMatching) {
        if (n == 2 || n == 4) {
          if (flavour == "hat")
            return towers("hat", 2, ModuleShape::TowerDown, {0, -1}, 1, naive,
                          "tabulated: F2[v] + F2[v]<-1>, unique torsion "
                          "class");
          return unknown_answer(flavour, naive);
        }
        if (n == 3) {
          if (flavour == "hat" || flavour == "reduced")
            return zero_answer(flavour, naive,
                               "tabulated: 0 (c-edges meet a separating "
                               "sphere three times)");
          return unknown_answer(flavour, naive);
        }
        if (n == 5 && flavour == "reduced")
          return towers("reduced", 2, ModuleShape::Finite, {0}, 1, naive,
                        "tabulated: F2 + F2, two irreducible generators");
        return unknown_answer(flavour, naive);
      }
      if (t == OneSetType::RingType && (n == 2 || n == 3 || n == 4) &&
          flavour == "hat")
        return towers("hat", 2, ModuleShape::TowerDown, {0}, 2, naive,
                      "tabulated: F2[v]^{+2}, one tower per isotropy class");
      return unknown_answer(flavour, naive);
    }
    case Family::BraidClosure:
    case Family::PetersenEmbedding: {
      bool rung = classify_oneset(web, s) == OneSetType::RungMatching;
      bool odd_big = fam.n % 2 == 1 && fam.n >= 5;
      if (rung && odd_big && flavour == "reduced")
        return towers("reduced", 2, ModuleShape::Finite, {0}, 1, naive,
                      "tabulated: F2 + F2, adjunction-top class");
      return unknown_answer(flavour, naive);
    }
    case Family::Unknown:
      return unknown_answer(flavour, naive);
  }
  return unknown_answer(flavour, naive);
}

FramedRankResult framed_rank(const WebGraph& web,
                             const std::string& basepoint_edge,
                             bool restrict_spinc) {
  int base = web.edge_index(basepoint_edge);
  if (base < 0)
    throw std::invalid_argument("unknown basepoint edge " + basepoint_edge);
  FamilyId fam = recognize(web);
  bool tower_model = fam.family == Family::Unknot ||
                     fam.family == Family::Unlink ||
                     fam.family == Family::ThetaPlusUnknot;
  if (!tower_model)
    return {0, "no tabulated tower model for family " + family_name(fam)};

  std::vector<OneSet> based;
  for (const OneSet& s : enumerate_onesets(web))
    if (std::find(s.c_edges.begin(), s.c_edges.end(), base) ==
        s.c_edges.end())
      based.push_back(s);
  if (based.empty()) return {0, "no based 1-set"};

  const int per_tower = cone_rank_per_tower();
  long long total = 0;
  for (const OneSet& s : based) {
    CoverShadow cs = cover_shadow(web, s);
    long long spinc = restrict_spinc ? 1 : cs.naive_spinc_count;
    long long towers = 1LL << (r_cycles(web, s).n() - 1);
    total += spinc * towers * per_tower;
  }
  return {total, ""};
}

VanishingVerdict vanishing_check(const WebGraph& web, const OneSet& s) {
  if (!is_oneset(web, s.c_edges))
    throw std::invalid_argument("not a 1-set of this web");
  FamilyId fam{Family::Unknown, 0};
  try {
    fam = recognize(web);
  } catch (const std::invalid_argument&) {
    // contradictory tags: fall back to the structure-free rules
  }

  bool planar = web.spatial() && web.spatial()->planar;
  if (planar && !bridges(web).empty())
    return {VanishingVerdict::V::Zero, VanishingRule::Bridge, -1};

  if (fam.family == Family::TwistedHandcuff)
    return {VanishingVerdict::V::Zero, VanishingRule::ThreePoint, -1};

  OneSetType t = classify_oneset(web, s);
  if (fam.family == Family::Prism && fam.n == 3 &&
      t == OneSetType::RungMatching)
    return {VanishingVerdict::V::Zero, VanishingRule::ThreePoint, -1};

  bool closure_like = fam.family == Family::PetersenEmbedding ||
                      ((fam.family == Family::Prism ||
                        fam.family == Family::BraidClosure) &&
                       fam.n % 2 == 1 && fam.n >= 5);
  if (closure_like && t == OneSetType::RungMatching)
    return {VanishingVerdict::V::Nonzero, VanishingRule::Excision, 2};

  return {VanishingVerdict::V::Unknown, VanishingRule::None, -1};
}

}  // namespace wf
