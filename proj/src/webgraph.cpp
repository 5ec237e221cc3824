#include "wf/webgraph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wf {

using json = nlohmann::json;

ParseError::ParseError(const std::string& msg, std::string id_, long offset_)
    : std::runtime_error(msg), id(std::move(id_)), offset(offset_) {}

namespace {

// Byte offset of the quoted id literal in the document, for error messages.
long locate(const std::string& text, const std::string& id) {
  auto pos = text.find("\"" + id + "\"");
  return pos == std::string::npos ? -1 : static_cast<long>(pos);
}

[[noreturn]] void fail(const std::string& text, const std::string& msg,
                       const std::string& id) {
  std::ostringstream os;
  os << msg << " (id " << id << ", byte offset " << locate(text, id) << ")";
  throw ParseError(os.str(), id, locate(text, id));
}

}  // namespace

WebGraph::WebGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                   std::optional<SpatialTags> spatial)
    : vertex_ids_(std::move(vertex_ids)),
      edges_(std::move(edges)),
      spatial_(std::move(spatial)) {
  // Canonical ordering: vertices and edges sorted lexicographically by id.
  std::vector<int> vperm(vertex_ids_.size());
  for (size_t i = 0; i < vperm.size(); ++i) vperm[i] = static_cast<int>(i);
  std::sort(vperm.begin(), vperm.end(), [&](int a, int b) {
    return vertex_ids_[a] < vertex_ids_[b];
  });
  std::vector<int> vwhere(vperm.size());
  for (size_t i = 0; i < vperm.size(); ++i) vwhere[vperm[i]] = static_cast<int>(i);
  std::vector<std::string> vsorted;
  vsorted.reserve(vertex_ids_.size());
  for (int i : vperm) vsorted.push_back(vertex_ids_[i]);
  vertex_ids_ = std::move(vsorted);
  for (auto& e : edges_)
    for (auto& end : e.ends)
      if (end.vertex >= 0 && end.vertex < static_cast<int>(vwhere.size()))
        end.vertex = vwhere[end.vertex];
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });

  for (int i = 0; i < vertex_count(); ++i) vertex_lookup_[vertex_ids_[i]] = i;
  for (int i = 0; i < edge_count(); ++i) edge_lookup_[edges_[i].id] = i;

  slots_.assign(vertex_ids_.size(), {std::pair{-1, -1}, {-1, -1}, {-1, -1}});
  for (int e = 0; e < edge_count(); ++e) {
    for (int k = 0; k < static_cast<int>(edges_[e].ends.size()); ++k) {
      const End& end = edges_[e].ends[k];
      if (end.vertex >= 0 && end.vertex < vertex_count() && end.slot >= 0 &&
          end.slot < 3 && slots_[end.vertex][end.slot].first == -1)
        slots_[end.vertex][end.slot] = {e, k};
    }
  }
}

int WebGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int WebGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

bool WebGraph::is_loop(int e) const {
  const Edge& ed = edges_[e];
  return ed.kind == EdgeKind::Segment && ed.ends.size() == 2 &&
         ed.ends[0].vertex == ed.ends[1].vertex;
}

std::vector<std::string> WebGraph::validate() const {
  std::vector<std::string> out;
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.kind == EdgeKind::Circle) {
      if (!ed.ends.empty())
        out.push_back("circle " + ed.id + ": has attachment");
      continue;
    }
    if (ed.ends.size() != 2) {
      out.push_back("edge " + ed.id + ": " + std::to_string(ed.ends.size()) +
                    " end" + (ed.ends.size() == 1 ? "" : "s"));
      continue;
    }
    for (const End& end : ed.ends) {
      if (end.vertex < 0 || end.vertex >= vertex_count())
        out.push_back("edge " + ed.id + ": dangling end");
      else if (end.slot < 0 || end.slot > 2)
        out.push_back("edge " + ed.id + ": slot out of range");
    }
    if (ed.ends.size() == 2 && ed.ends[0].vertex == ed.ends[1].vertex &&
        ed.ends[0].slot == ed.ends[1].slot)
      out.push_back("edge " + ed.id + ": both ends in one slot");
  }
  for (int v = 0; v < vertex_count(); ++v) {
    for (int k = 0; k < 3; ++k) {
      int bound = 0;
      for (int e = 0; e < edge_count(); ++e)
        for (const End& end : edges_[e].ends)
          if (end.vertex == v && end.slot == k) ++bound;
      if (bound != 1)
        out.push_back("vertex " + vertex_ids_[v] + " slot " +
                      std::to_string(k) + ": " + std::to_string(bound) +
                      " edge ends");
    }
  }
  return out;
}

int FoamSkeleton::facet_index(const std::string& id) const {
  auto it = std::find(facet_ids.begin(), facet_ids.end(), id);
  return it == facet_ids.end() ? -1
                               : static_cast<int>(it - facet_ids.begin());
}

std::vector<std::string> FoamSkeleton::validate() const {
  std::vector<std::string> out;
  for (const auto& s : seams)
    if (s.facets.size() != 3)
      out.push_back("seam " + s.id + ": " + std::to_string(s.facets.size()) +
                    " facet slots");
  for (const auto& t : tetra_points) {
    if (t.seams.size() != 4)
      out.push_back("tetra point " + t.id + ": " +
                    std::to_string(t.seams.size()) + " seams");
    if (t.facets.size() != 6)
      out.push_back("tetra point " + t.id + ": " +
                    std::to_string(t.facets.size()) + " facet slots");
  }
  return out;
}

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError("malformed document: " + std::string(err.what()), {},
                     static_cast<long>(err.byte));
  }
}

}  // namespace

WebGraph parse_web(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("malformed document: not an object");

  std::vector<std::string> vids;
  std::map<std::string, int> vindex;
  for (const auto& v : doc.value("vertices", json::array())) {
    std::string id = v.at("id").get<std::string>();
    if (vindex.count(id)) fail(text, "duplicate id", id);
    vindex[id] = static_cast<int>(vids.size());
    vids.push_back(id);
  }

  std::vector<WebGraph::Edge> edges;
  std::map<std::string, bool> seen_edge;
  for (const auto& e : doc.value("edges", json::array())) {
    WebGraph::Edge edge;
    edge.id = e.at("id").get<std::string>();
    if (vindex.count(edge.id) || seen_edge.count(edge.id))
      fail(text, "duplicate id", edge.id);
    seen_edge[edge.id] = true;
    const json& ends = e.at("ends");
    edge.kind = ends.empty() ? WebGraph::EdgeKind::Circle
                             : WebGraph::EdgeKind::Segment;
    for (const auto& end : ends) {
      std::string vid = end.at(0).get<std::string>();
      int slot = end.at(1).get<int>();
      auto it = vindex.find(vid);
      if (it == vindex.end()) fail(text, "dangling edge end", edge.id);
      if (slot < 0 || slot > 2) fail(text, "vertex arity", vid);
      edge.ends.push_back({it->second, slot});
    }
    if (edge.kind == WebGraph::EdgeKind::Segment && edge.ends.size() != 2)
      fail(text, "segment edge needs 2 ends", edge.id);
    edges.push_back(std::move(edge));
  }

  std::optional<SpatialTags> spatial;
  if (doc.contains("spatial")) {
    const json& sp = doc.at("spatial");
    SpatialTags tags;
    tags.planar = sp.value("planar", false);
    if (sp.contains("family")) tags.family = sp.at("family").get<std::string>();
    if (sp.contains("braid_strands"))
      tags.braid_strands = sp.at("braid_strands").get<int>();
    if (sp.contains("braid_word"))
      tags.braid_word = sp.at("braid_word").get<std::string>();
    if (sp.contains("linking_parity"))
      for (const auto& lp : sp.at("linking_parity"))
        tags.linking_parity[{lp.at(0).get<std::string>(),
                             lp.at(1).get<int>()}] = lp.at(2).get<int>();
    spatial = std::move(tags);
  }

  WebGraph web(std::move(vids), std::move(edges), std::move(spatial));

  // Structural invariants are hard errors at parse time.
  for (const std::string& d : web.validate()) {
    auto sp = d.find(' ');
    auto colon = d.find(':');
    std::string id = d.substr(sp + 1, colon - sp - 1);
    id = id.substr(0, id.find(' '));
    if (d.rfind("vertex", 0) == 0 && d.find("edge ends") != std::string::npos)
      fail(text, "vertex arity", id);
    fail(text, d.substr(colon + 2), id);
  }
  return web;
}

FoamSkeleton parse_foam(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("malformed document: not an object");

  FoamSkeleton foam;
  for (const auto& f : doc.value("facets", json::array()))
    foam.facet_ids.push_back(f.at("id").get<std::string>());
  std::sort(foam.facet_ids.begin(), foam.facet_ids.end());
  std::map<std::string, int> sindex;
  for (const auto& s : doc.value("seams", json::array())) {
    FoamSkeleton::Seam seam;
    seam.id = s.at("id").get<std::string>();
    for (const auto& f : s.at("facets")) {
      int fi = foam.facet_index(f.get<std::string>());
      if (fi < 0) fail(text, "unknown facet", seam.id);
      seam.facets.push_back(fi);
    }
    if (seam.facets.size() != 3) fail(text, "seam needs 3 facet slots", seam.id);
    sindex[seam.id] = static_cast<int>(foam.seams.size());
    foam.seams.push_back(std::move(seam));
  }
  for (const auto& t : doc.value("tetra_points", json::array())) {
    FoamSkeleton::TetraPoint tp;
    tp.id = t.at("id").get<std::string>();
    for (const auto& s : t.at("seams")) {
      auto it = sindex.find(s.get<std::string>());
      if (it == sindex.end()) fail(text, "unknown seam", tp.id);
      tp.seams.push_back(it->second);
    }
    for (const auto& f : t.at("facets")) {
      int fi = foam.facet_index(f.get<std::string>());
      if (fi < 0) fail(text, "unknown facet", tp.id);
      tp.facets.push_back(fi);
    }
    if (tp.seams.size() != 4)
      fail(text, "tetra point needs 4 seams", tp.id);
    if (tp.facets.size() != 6)
      fail(text, "tetra point needs 6 facet slots", tp.id);
    foam.tetra_points.push_back(std::move(tp));
  }
  return foam;
}

std::string serialize_web(const WebGraph& web) {
  json doc = json::object();
  doc["edges"] = json::array();
  for (const auto& e : web.edges()) {
    json ends = json::array();
    for (const auto& end : e.ends)
      ends.push_back(json::array({web.vertex_ids()[end.vertex], end.slot}));
    doc["edges"].push_back({{"ends", ends}, {"id", e.id}});
  }
  doc["vertices"] = json::array();
  for (const auto& v : web.vertex_ids())
    doc["vertices"].push_back({{"id", v}});
  if (web.spatial()) {
    const SpatialTags& tags = *web.spatial();
    json sp = json::object();
    sp["planar"] = tags.planar;
    if (tags.family) sp["family"] = *tags.family;
    if (tags.braid_strands) sp["braid_strands"] = *tags.braid_strands;
    if (tags.braid_word) sp["braid_word"] = *tags.braid_word;
    if (!tags.linking_parity.empty()) {
      json lp = json::array();
      for (const auto& [key, parity] : tags.linking_parity)
        lp.push_back(json::array({key.first, key.second, parity}));
      sp["linking_parity"] = lp;
    }
    doc["spatial"] = sp;
  }
  return doc.dump();
}

}  // namespace wf
