#pragma once
// Finite metric graphs with exact half integer edge lengths. Lengths are
// stored doubled (Half), so distances stay in integer arithmetic end to end;
// -1 marks an unreachable vertex in raw distance rows.

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bicorn/common.hpp"

namespace bicorn {

struct GraphEdge {
  int u = 0;
  int v = 0;
  Half len = 2;
};

struct MetricGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::string> label;  // optional; parallel to vertices when nonempty
};

inline void add_edge(MetricGraph& g, int u, int v, Half len = 2) {
  g.edges.push_back({u, v, len});
}

inline std::string vertex_name(const MetricGraph& g, int v) {
  if (v >= 0 && v < (int)g.label.size() && !g.label[v].empty()) return g.label[v];
  return "v" + std::to_string(v);
}

namespace detail {

inline std::vector<std::vector<std::pair<int, Half>>> adjacency(const MetricGraph& g) {
  std::vector<std::vector<std::pair<int, Half>>> nbr(g.vertex_count);
  for (const GraphEdge& e : g.edges) {
    nbr[e.u].push_back({e.v, e.len});
    nbr[e.v].push_back({e.u, e.len});
  }
  return nbr;
}

}  // namespace detail

inline void validate_graph(const MetricGraph& g) {
  require(g.vertex_count > 0, errc::bad_input, "graph has no vertices");
  require(g.label.empty() || (int)g.label.size() == g.vertex_count, errc::bad_input,
          "label table does not match the vertex count");
  for (const GraphEdge& e : g.edges) {
    require(e.u >= 0 && e.u < g.vertex_count && e.v >= 0 && e.v < g.vertex_count,
            errc::bad_input, "edge endpoint out of range");
    require(e.u != e.v, errc::bad_input, "self loop at " + vertex_name(g, e.u));
    require(e.len > 0, errc::bad_input, "edge length must be positive");
  }
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  auto nbr = detail::adjacency(g);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, len] : nbr[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  for (int v = 0; v < g.vertex_count; ++v)
    require(seen[v], errc::disconnected, vertex_name(g, v) + " is unreachable");
}

// multi-source shortest paths; row[v] = -1 where unreachable
inline std::vector<Half> dijkstra_row(const MetricGraph& g, const std::vector<int>& sources) {
  require(!sources.empty(), errc::bad_input, "no sources");
  auto nbr = detail::adjacency(g);
  std::vector<Half> dist(g.vertex_count, -1);
  using Item = std::pair<Half, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int s : sources) {
    require(s >= 0 && s < g.vertex_count, errc::bad_input, "source out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      heap.push({0, s});
    }
  }
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (auto [y, len] : nbr[x]) {
      Half nd = d + len;
      if (dist[y] == -1 || nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

inline Half distance(const MetricGraph& g, int u, int v) {
  Half d = dijkstra_row(g, {u})[v];
  require(d >= 0, errc::disconnected,
          vertex_name(g, v) + " is unreachable from " + vertex_name(g, u));
  return d;
}

// The union of all geodesics from src to dst, as the subgraph of edges that
// realize the distance; geodesics are counted by vertex itinerary.
struct GeodesicDag {
  int src = 0;
  int dst = 0;
  Half total = 0;
  std::vector<char> on_geodesic;
  std::vector<std::vector<int>> succ;
  long long count = 0;
};

inline GeodesicDag geodesic_dag(const MetricGraph& g, int src, int dst) {
  std::vector<Half> du = dijkstra_row(g, {src});
  std::vector<Half> dv = dijkstra_row(g, {dst});
  require(du[dst] >= 0, errc::disconnected,
          vertex_name(g, dst) + " is unreachable from " + vertex_name(g, src));
  GeodesicDag dag;
  dag.src = src;
  dag.dst = dst;
  dag.total = du[dst];
  dag.on_geodesic.assign(g.vertex_count, 0);
  dag.succ.assign(g.vertex_count, {});
  for (int x = 0; x < g.vertex_count; ++x)
    if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == dag.total) dag.on_geodesic[x] = 1;
  for (const GraphEdge& e : g.edges)
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
      if (dag.on_geodesic[x] && dag.on_geodesic[y] && du[x] + e.len == du[y])
        dag.succ[x].push_back(y);
  std::vector<int> order;
  for (int x = 0; x < g.vertex_count; ++x)
    if (dag.on_geodesic[x]) {
      std::sort(dag.succ[x].begin(), dag.succ[x].end());
      dag.succ[x].erase(std::unique(dag.succ[x].begin(), dag.succ[x].end()), dag.succ[x].end());
      order.push_back(x);
    }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return du[a] < du[b]; });
  const long long cap = 1LL << 62;
  std::vector<long long> cnt(g.vertex_count, 0);
  cnt[src] = 1;
  for (int x : order)
    for (int y : dag.succ[x]) cnt[y] = std::min(cap, cnt[y] + cnt[x]);
  dag.count = cnt[dst];
  return dag;
}

struct GraphAutomorphism {
  std::vector<int> image;  // -1 where undefined
  bool partial = false;
};

inline void validate_automorphism(const MetricGraph& g, const GraphAutomorphism& f) {
  require((int)f.image.size() == g.vertex_count, errc::bad_input,
          "automorphism table does not match the vertex count");
  std::vector<char> hit(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v) {
    int w = f.image[v];
    if (w == -1) {
      require(f.partial, errc::bad_input, "total automorphism is undefined at " + vertex_name(g, v));
      continue;
    }
    require(w >= 0 && w < g.vertex_count, errc::bad_input, "image out of range");
    require(!hit[w], errc::bad_input, "automorphism repeats the image " + vertex_name(g, w));
    hit[w] = 1;
  }
  std::set<std::tuple<int, int, Half>> present;
  for (const GraphEdge& e : g.edges)
    present.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.len});
  for (const GraphEdge& e : g.edges) {
    int a = f.image[e.u], b = f.image[e.v];
    if (a == -1 || b == -1) continue;
    require(present.count({std::min(a, b), std::max(a, b), e.len}) > 0, errc::bad_input,
            "automorphism breaks the edge " + vertex_name(g, e.u) + "-" + vertex_name(g, e.v));
  }
}

}  // namespace bicorn
