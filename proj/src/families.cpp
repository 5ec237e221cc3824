#include "wf/families.hpp"

#include <stdexcept>

namespace wf {

namespace {

WebGraph::Edge seg(const std::string& id, int v1, int s1, int v2, int s2) {
  WebGraph::Edge e;
  e.id = id;
  e.ends = {{v1, s1}, {v2, s2}};
  return e;
}

WebGraph::Edge circ(const std::string& id) {
  WebGraph::Edge e;
  e.id = id;
  e.kind = WebGraph::EdgeKind::Circle;
  return e;
}

std::string num_id(const std::string& prefix, int i) {
  return prefix + std::to_string(i);
}

WebGraph handcuff_with_tags(SpatialTags tags) {
  std::vector<std::string> vids{"v1", "v2"};
  std::vector<WebGraph::Edge> edges{
      seg("l1", 0, 0, 0, 1),  // loop at v1
      seg("l2", 1, 0, 1, 1),  // loop at v2
      seg("m1", 0, 2, 1, 2),  // the bridge
  };
  return WebGraph(vids, edges, tags);
}

}  // namespace

WebGraph make_unknot() { return make_unlink(1); }

WebGraph make_unlink(int n) {
  if (n < 1) throw std::invalid_argument("unlink needs n >= 1");
  std::vector<WebGraph::Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back(circ(num_id("c", i)));
  SpatialTags tags;
  tags.planar = true;
  tags.family = n == 1 ? "unknot" : "unlink";
  return WebGraph({}, edges, tags);
}

WebGraph make_theta() {
  SpatialTags tags;
  tags.planar = true;
  tags.family = "theta";
  return WebGraph({"v1", "v2"},
                  {seg("e1", 0, 0, 1, 0), seg("e2", 0, 1, 1, 1),
                   seg("e3", 0, 2, 1, 2)},
                  tags);
}

WebGraph make_theta_plus_unknot() {
  SpatialTags tags;
  tags.planar = true;
  tags.family = "theta_plus_unknot";
  return WebGraph({"v1", "v2"},
                  {circ("c1"), seg("e1", 0, 0, 1, 0), seg("e2", 0, 1, 1, 1),
                   seg("e3", 0, 2, 1, 2)},
                  tags);
}

WebGraph make_tetrahedron() {
  SpatialTags tags;
  tags.planar = true;
  tags.family = "tetrahedron";
  // K4 on v1..v4; slots assigned in order of appearance per vertex.
  return WebGraph({"v1", "v2", "v3", "v4"},
                  {
                      seg("e12", 0, 0, 1, 0),
                      seg("e13", 0, 1, 2, 0),
                      seg("e14", 0, 2, 3, 0),
                      seg("e23", 1, 1, 2, 1),
                      seg("e24", 1, 2, 3, 1),
                      seg("e34", 2, 2, 3, 2),
                  },
                  tags);
}

WebGraph make_prism(int n) {
  if (n < 1) throw std::invalid_argument("prism needs n >= 1");
  if (n == 1) {
    SpatialTags tags;
    tags.planar = true;
    tags.family = "handcuff";
    return handcuff_with_tags(tags);
  }
  SpatialTags tags;
  tags.planar = true;
  tags.family = "prism";
  std::vector<std::string> vids;
  for (int i = 1; i <= n; ++i) vids.push_back(num_id("a", i));
  for (int i = 1; i <= n; ++i) vids.push_back(num_id("b", i));
  auto a = [&](int i) { return i % n; };          // outer cycle vertex
  auto b = [&](int i) { return n + i % n; };      // inner cycle vertex
  std::vector<WebGraph::Edge> edges;
  // Cycle edges occupy slots 0 and 1, rungs slot 2. For n = 2 the two
  // cycle edges between the same pair are parallel edges.
  for (int i = 0; i < n; ++i)
    edges.push_back(seg(num_id("oa", i + 1), a(i), 1, a(i + 1), 0));
  for (int i = 0; i < n; ++i)
    edges.push_back(seg(num_id("ob", i + 1), b(i), 1, b(i + 1), 0));
  for (int i = 0; i < n; ++i)
    edges.push_back(seg(num_id("r", i + 1), a(i), 2, b(i), 2));
  return WebGraph(vids, edges, tags);
}

WebGraph make_handcuff() { return make_prism(1); }

WebGraph make_twisted_handcuff() {
  SpatialTags tags;
  tags.planar = false;
  tags.family = "twisted_handcuff";
  return handcuff_with_tags(tags);
}

WebGraph make_hopf_handcuff() {
  SpatialTags tags;
  tags.planar = false;
  tags.family = "hopf_handcuff";
  return handcuff_with_tags(tags);
}

WebGraph make_petersen() {
  SpatialTags tags;
  tags.planar = false;
  tags.family = "braid_closure";
  tags.braid_strands = 5;
  tags.braid_word = "(s1 s2 s3 s4)^2";
  // Outer 5-cycle o1..o5, inner pentagram i1..i5, spokes s1..s5.
  std::vector<std::string> vids;
  for (int i = 1; i <= 5; ++i) vids.push_back(num_id("o", i));
  for (int i = 1; i <= 5; ++i) vids.push_back(num_id("i", i));
  std::vector<WebGraph::Edge> edges;
  for (int i = 0; i < 5; ++i)
    edges.push_back(seg(num_id("co", i + 1), i, 1, (i + 1) % 5, 0));
  for (int i = 0; i < 5; ++i)
    edges.push_back(seg(num_id("ci", i + 1), 5 + i, 1, 5 + (i + 2) % 5, 0));
  for (int i = 0; i < 5; ++i)
    edges.push_back(seg(num_id("sp", i + 1), i, 2, 5 + i, 2));
  return WebGraph(vids, edges, tags);
}

}  // namespace wf
