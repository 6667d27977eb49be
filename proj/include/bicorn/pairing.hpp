#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bicorn/common.hpp"
#include "bicorn/curvepair.hpp"

namespace bicorn {

// A perfect matching of the intersection points by chords, required to be
// unlinked on a's circle and on b's circle simultaneously, and to pair
// crossings of opposite sign so the matched points can cancel.
struct Pairing {
  std::vector<std::pair<int, int>> chords;  // vertex labels
};

struct PairingReport {
  std::optional<Pairing> pairing;  // first one in search order, if any
  long long count = 0;             // all simultaneously unlinked pairings
};

namespace detail {

inline bool chords_interleave(int u1, int v1, int u2, int v2, int n) {
  // positions on one circle; chord 1 separates chord 2
  auto inside = [&](int x, int lo, int hi) {
    // strictly between lo and hi walking forward
    int span = (hi - lo + n) % n;
    int off = (x - lo + n) % n;
    return off > 0 && off < span;
  };
  return inside(u2, u1, v1) != inside(v2, u1, v1);
}

inline void pairing_search(const PairIndex& ix, std::vector<int>& match, int done,
                           std::vector<std::pair<int, int>>& stack, PairingReport& out) {
  int n = ix.n();
  if (done == n) {
    ++out.count;
    if (!out.pairing) {
      Pairing p;
      for (auto& [x, y] : stack) p.chords.emplace_back(ix.labels[x], ix.labels[y]);
      out.pairing = std::move(p);
    }
    return;
  }
  int first = -1;
  for (int p = 0; p < n; ++p)
    if (match[ix.a_order[p]] < 0) {
      first = p;
      break;
    }
  int u = ix.a_order[first];
  for (int q = first + 1; q < n; ++q) {
    int v = ix.a_order[q];
    if (match[v] >= 0) continue;
    if (ix.sgn[u] == ix.sgn[v]) continue;  // only opposite signs cancel
    bool ok = true;
    for (auto& [x, y] : stack) {
      if (chords_interleave(ix.a_pos[x], ix.a_pos[y], ix.a_pos[u], ix.a_pos[v], n) ||
          chords_interleave(ix.b_pos[x], ix.b_pos[y], ix.b_pos[u], ix.b_pos[v], n)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    match[u] = v;
    match[v] = u;
    stack.emplace_back(u, v);
    pairing_search(ix, match, done + 2, stack, out);
    stack.pop_back();
    match[u] = -1;
    match[v] = -1;
  }
}

}  // namespace detail

// Exhaustive search for simultaneously unlinked pairings. Bigon
// configurations are legal input; they are where pairings live.
inline PairingReport casson_long_pairing(const CurvePair& cp, int max_vertices = 16) {
  int n = cp.count();
  require(n % 2 == 0, errc::odd_intersection, "no perfect matching on an odd vertex set");
  require(n <= max_vertices, errc::too_large,
          "pairing search capped at " + std::to_string(max_vertices) + " vertices");
  PairingReport out;
  if (n == 0) {
    out.pairing = Pairing{};
    out.count = 1;
    return out;
  }
  PairIndex ix = validate_curve_pair(cp, /*allow_bigons=*/true);
  std::vector<int> match(n, -1);
  std::vector<std::pair<int, int>> stack;
  detail::pairing_search(ix, match, 0, stack, out);
  return out;
}

}  // namespace bicorn
