#include "wf/tait.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "wf/onesets.hpp"

namespace wf {

namespace {

long long pow3(int n) {
  long long r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

// Backtracking over segment edges in a BFS-ish order with forward checking:
// a partial colouring is abandoned as soon as some vertex sees a repeat.
long long count_segments(const WebGraph& web, const std::vector<int>& segs) {
  const int ne = web.edge_count();
  std::vector<int> colour(ne, -1);

  // Order segments so each new edge tends to share a vertex with earlier
  // ones: repeated sweeps picking edges adjacent to the coloured region.
  std::vector<int> order;
  std::vector<char> placed(ne, 0), touched(web.vertex_count(), 0);
  std::vector<int> pool = segs;
  while (order.size() < segs.size()) {
    int pick = -1;
    for (int e : pool) {
      if (placed[e]) continue;
      bool adj = touched[web.edges()[e].ends[0].vertex] ||
                 touched[web.edges()[e].ends[1].vertex];
      if (adj || pick < 0) {
        pick = e;
        if (adj) break;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    touched[web.edges()[pick].ends[0].vertex] = 1;
    touched[web.edges()[pick].ends[1].vertex] = 1;
  }

  auto conflicts = [&](int e) {
    for (const auto& end : web.edges()[e].ends)
      for (int k = 0; k < 3; ++k) {
        int f = web.slot_edge(end.vertex, k);
        if (f != e && colour[f] == colour[e]) return true;
      }
    return false;
  };
  auto rec = [&](auto&& self, size_t depth) -> long long {
    if (depth == order.size()) return 1;
    int e = order[depth];
    long long total = 0;
    for (int c = 0; c < 3; ++c) {
      colour[e] = c;
      if (!conflicts(e)) total += self(self, depth + 1);
    }
    colour[e] = -1;
    return total;
  };
  return rec(rec, 0);
}

}  // namespace

long long count_tait(const WebGraph& web) {
  int circles = 0;
  std::vector<int> segs;
  for (int e = 0; e < web.edge_count(); ++e) {
    if (web.edges()[e].kind == WebGraph::EdgeKind::Circle)
      ++circles;
    else if (web.is_loop(e))
      return 0;
    else
      segs.push_back(e);
  }
  return count_segments(web, segs) * pow3(circles);
}

long long count_tait_oracle(const WebGraph& web) {
  const int ne = web.edge_count();
  if (ne > 18)
    throw std::invalid_argument("oracle limited to 18 edges, got " +
                                std::to_string(ne));
  long long total = 0;
  std::vector<int> colour(ne, 0);
  long long assignments = pow3(ne);
  for (long long a = 0; a < assignments; ++a) {
    long long x = a;
    for (int e = 0; e < ne; ++e) {
      colour[e] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (int v = 0; ok && v < web.vertex_count(); ++v) {
      int c0 = colour[web.slot_edge(v, 0)];
      int c1 = colour[web.slot_edge(v, 1)];
      int c2 = colour[web.slot_edge(v, 2)];
      ok = c0 != c1 && c0 != c2 && c1 != c2;
    }
    if (ok) ++total;
  }
  return total;
}

TaitReport verify_identity(const WebGraph& web) {
  TaitReport rep;
  rep.tait_count = count_tait(web);
  auto onesets = enumerate_onesets(web);
  for (int i = 0; i < static_cast<int>(onesets.size()); ++i) {
    if (!is_even(web, onesets[i])) continue;
    int n = r_cycles(web, onesets[i]).n();
    rep.even_onesets.push_back({i, n});
    rep.identity_rhs += 1LL << n;
  }
  rep.ok = rep.tait_count == rep.identity_rhs;
  return rep;
}

std::vector<WebGraph> random_cubic_multigraphs(int max_vertices,
                                               std::uint64_t seed, int count) {
  if (max_vertices < 2 || max_vertices > 12)
    throw std::invalid_argument("max_vertices must be in [2, 12], got " +
                                std::to_string(max_vertices));
  if (max_vertices % 2 != 0)
    throw std::invalid_argument(
        "cubic graphs need an even vertex count, got max_vertices = " +
        std::to_string(max_vertices));
  if (count < 0) throw std::invalid_argument("count must be nonnegative");

  std::mt19937_64 rng(seed);
  std::vector<int> sizes;
  for (int n = 2; n <= max_vertices; n += 2) sizes.push_back(n);
  std::uniform_int_distribution<int> pick_size(
      0, static_cast<int>(sizes.size()) - 1);

  std::vector<WebGraph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = sizes[pick_size(rng)];
    // Configuration model: match the 3n half-edge stubs uniformly.
    std::vector<int> stubs(3 * n);
    std::iota(stubs.begin(), stubs.end(), 0);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::vector<std::string> vids;
    for (int v = 0; v < n; ++v) vids.push_back("v" + std::to_string(v + 1));
    std::vector<WebGraph::Edge> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      WebGraph::Edge e;
      e.id = "e" + std::to_string(i / 2 + 1);
      e.ends = {{stubs[i] / 3, stubs[i] % 3}, {stubs[i + 1] / 3, stubs[i + 1] % 3}};
      edges.push_back(std::move(e));
    }
    WebGraph g(vids, edges);
    if (!g.validate().empty()) continue;

    // Connectivity check.
    std::vector<char> seen(n, 0);
    std::vector<int> bfs{0};
    seen[0] = 1;
    while (!bfs.empty()) {
      int v = bfs.back();
      bfs.pop_back();
      for (int k = 0; k < 3; ++k) {
        const auto& e = g.edges()[g.slot_edge(v, k)];
        for (const auto& end : e.ends)
          if (!seen[end.vertex]) {
            seen[end.vertex] = 1;
            bfs.push_back(end.vertex);
          }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wf
