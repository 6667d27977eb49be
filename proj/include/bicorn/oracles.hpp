#pragma once
// Brute force re-implementations used to cross check the fast paths. These are
// deliberately separate code: the matcher enumerates every perfect matching
// with no pruning, and the delta oracle runs over Floyd-Warshall distances
// instead of Dijkstra rows. Both the unit tests and the acceptance suite lean
// on them, so they live with the library.

#include <functional>
#include <utility>
#include <vector>

#include "bicorn/metricgraph.hpp"
#include "bicorn/pairing.hpp"

namespace bicorn::oracles {

inline long long naive_pairing_count(const CurvePair& cp) {
  PairIndex ix = index_pair(cp);
  int n = ix.n();
  std::vector<std::pair<int, int>> chords;
  std::vector<char> used(n, 0);
  long long count = 0;
  auto interleave = [&](int a1, int b1, int a2, int b2, int nn) {
    auto between = [&](int x, int lo, int hi) {
      int span = (hi - lo + nn) % nn;
      int off = (x - lo + nn) % nn;
      return off > 0 && off < span;
    };
    return between(a2, a1, b1) != between(b2, a1, b1);
  };
  std::function<void()> rec = [&]() {
    int u = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        u = i;
        break;
      }
    if (u < 0) {
      for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
          auto [x1, y1] = chords[i];
          auto [x2, y2] = chords[j];
          if (interleave(ix.a_pos[x1], ix.a_pos[y1], ix.a_pos[x2], ix.a_pos[y2], n)) return;
          if (interleave(ix.b_pos[x1], ix.b_pos[y1], ix.b_pos[x2], ix.b_pos[y2], n)) return;
        }
      for (auto& [x, y] : chords)
        if (ix.sgn[x] == ix.sgn[y]) return;
      ++count;
      return;
    }
    used[u] = 1;
    for (int v = u + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      chords.emplace_back(u, v);
      rec();
      chords.pop_back();
      used[v] = 0;
    }
    used[u] = 0;
  };
  if (n % 2) return 0;
  rec();
  return count;
}

// all pairs distances on a connected graph, doubled units
inline std::vector<std::vector<Half>> floyd_warshall(const MetricGraph& g) {
  const Half inf = 1LL << 60;
  int n = g.vertex_count;
  std::vector<std::vector<Half>> d(n, std::vector<Half>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const GraphEdge& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.len);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.len);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Quarter delta_brute(const MetricGraph& g) {
  auto d = floyd_warshall(g);
  int n = g.vertex_count;
  Quarter best = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          Half s1 = d[a][b] + d[c][e];
          Half s2 = d[a][c] + d[b][e];
          Half s3 = d[a][e] + d[b][c];
          Half hi = s1, mid = s2;
          if (mid > hi) std::swap(hi, mid);
          if (s3 > hi) {
            mid = hi;
            hi = s3;
          } else if (s3 > mid) {
            mid = s3;
          }
          if (hi - mid > best) best = hi - mid;
        }
  return best;
}

}  // namespace bicorn::oracles
