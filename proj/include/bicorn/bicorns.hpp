#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "bicorn/common.hpp"
#include "bicorn/curvepair.hpp"
#include "bicorn/surgery.hpp"

namespace bicorn {

// A bicorn c_i = a_i ∪ b_i: an arc of a and an arc of b sharing both
// endpoints, meeting at two corners. The companion pair (c_i, b) is kept
// unreduced; its crossings are the intersections interior to a_i, listed in
// order along a, and the closing edge of c_i (through b_i) is the wrap edge
// of the stored cycle.
struct Bicorn {
  std::vector<int> a_arc;  // labels walked forward along a, endpoints included
  std::vector<int> b_arc;  // labels walked forward along b, endpoints included
  CurvePair with_b;        // (c_i, b), unreduced
  bool non_degenerate = false;
  bool disjoint_from_previous = false;
};

struct BicornSequence {
  CurvePair base;
  std::vector<Bicorn> bicorns;
  bool completed = false;  // final curve disjoint from b; otherwise the
                           // iteration stopped with no returning arc
};

namespace detail {

// walk of the original b from u forward to w, endpoints included
inline std::vector<int> b_walk(const CurvePair& base, const PairIndex& bx, int u, int w) {
  int n = bx.n();
  std::vector<int> path{u};
  int p = bx.b_pos[bx.dense.at(u)];
  do {
    p = cyc_next(p, n);
    path.push_back(base.b_cycle[p]);
  } while (base.b_cycle[p] != w);
  return path;
}

// some non-rectangular face must show an a-edge avoiding the window
inline bool window_nondegenerate(const PairIndex& bx, const FaceCensus& bfc,
                                 const std::vector<int>& a_arc) {
  int n = bx.n();
  std::vector<char> inside(n, 0);
  int p0 = bx.a_pos[bx.dense.at(a_arc.front())];
  for (size_t k = 0; k + 1 < a_arc.size(); ++k) inside[(p0 + (int)k) % n] = 1;
  for (int f = 0; f < (int)bfc.faces.size(); ++f) {
    if (bfc.face_class(f) != FaceClass::other) continue;
    for (int d : bfc.faces[f].darts) {
      int kind = dart_kind(d);
      if (dart_is_b(kind)) continue;
      int v = dart_vertex(d);
      int e = kind == dart_a_out ? bx.a_pos[v] : cyc_prev(bx.a_pos[v], n);
      if (!inside[e]) return true;
    }
  }
  return false;
}

// unreduced pair (c, b) for the window whose interior labels are given in
// order along a; signs and b order restrict from the source pair
inline CurvePair window_pair(const CurvePair& src, const std::vector<int>& interior,
                             int ambient_genus) {
  CurvePair nu;
  nu.a_cycle = interior;
  std::set<int> keep(interior.begin(), interior.end());
  for (int v : src.b_cycle)
    if (keep.count(v)) nu.b_cycle.push_back(v);
  for (int v : interior) nu.sign[v] = src.sign.at(v);
  if (nu.count() >= 1) {
    PairIndex nix = index_pair(nu);
    nu.genus = face_census(nu, nix).derived_genus;
  } else {
    nu.genus = ambient_genus;
  }
  return nu;
}

}  // namespace detail

// Iterated returning-arc surgery that never reduces away bigons, keeping
// each c_{i+1} a bicorn with a_{i+1} inside a_i. Stops when the current
// curve misses b entirely; if a later step has no returning arc the partial
// sequence is returned with completed = false.
inline BicornSequence nested_bicorn_sequence(const CurvePair& cp) {
  PairIndex bx = validate_curve_pair(cp);
  require(bx.n() >= 1, errc::no_intersections, "bicorns need intersections");
  FaceCensus bfc = face_census(cp, bx);
  int n = bx.n();

  // an a-edge on a non-rectangular face anchors the construction: the first
  // window is the piece avoiding it, so the complement keeps such a face
  int alpha = -1;
  for (int f = 0; f < (int)bfc.faces.size() && alpha < 0; ++f) {
    if (bfc.face_class(f) != FaceClass::other) continue;
    int best = n;
    for (int d : bfc.faces[f].darts) {
      int kind = dart_kind(d);
      if (dart_is_b(kind)) continue;
      int v = dart_vertex(d);
      int e = kind == dart_a_out ? bx.a_pos[v] : cyc_prev(bx.a_pos[v], n);
      best = std::min(best, e);
    }
    alpha = best;  // faces alternate a and b darts, so an a-edge exists
  }
  require(alpha >= 0, errc::no_non_rectangular_face, "all faces are rectangles");

  BicornSequence seq;
  seq.base = cp;

  const InnermostArc* first = nullptr;
  std::vector<InnermostArc> arcs = innermost_arcs(cp, bx);
  for (const InnermostArc& arc : arcs)
    if (arc.returning) {
      first = &arc;
      break;
    }
  require(first != nullptr, errc::no_returning_arc_for_bicorn, "b has no returning arc");

  int pa = bx.a_pos[bx.dense.at(first->start)];
  int qa = bx.a_pos[bx.dense.at(first->end)];
  auto left_has = [&](int e) { return (e - pa + n) % n < (qa - pa + n) % n; };
  int from = pa, to = qa;
  if (left_has(alpha)) std::swap(from, to);

  Bicorn b1;
  for (int p = from;; p = cyc_next(p, n)) {
    b1.a_arc.push_back(cp.a_cycle[p]);
    if (p == to) break;
  }
  b1.b_arc = detail::b_walk(cp, bx, first->start, first->end);
  std::vector<int> interior(b1.a_arc.begin() + 1, b1.a_arc.end() - 1);
  b1.with_b = detail::window_pair(cp, interior, cp.genus);
  b1.non_degenerate = detail::window_nondegenerate(bx, bfc, b1.a_arc);
  b1.disjoint_from_previous = true;  // returning arc pushes c_1 off a
  seq.bicorns.push_back(std::move(b1));

  for (;;) {
    const CurvePair cur = seq.bicorns.back().with_b;
    int m = cur.count();
    if (m == 0) {
      seq.completed = true;
      return seq;
    }
    PairIndex ix = index_pair(cur);
    const InnermostArc* pick = nullptr;
    std::vector<InnermostArc> cand = innermost_arcs(cur, ix);
    for (const InnermostArc& arc : cand)
      if (arc.returning) {
        pick = &arc;
        break;
      }
    if (!pick) return seq;  // outside the guaranteed regime
    // returning arcs never close up at a single crossing
    int pu = ix.a_pos[ix.dense.at(pick->start)];
    int qu = ix.a_pos[ix.dense.at(pick->end)];
    auto piece_has = [&](int e) { return (e - pu + m) % m < (qu - pu + m) % m; };
    int from2 = pu, to2 = qu;
    if (piece_has(m - 1)) std::swap(from2, to2);  // avoid the closing edge

    Bicorn nxt;
    for (int p = from2;; p = cyc_next(p, m)) {
      nxt.a_arc.push_back(cur.a_cycle[p]);
      if (p == to2) break;
    }
    nxt.b_arc = detail::b_walk(cp, bx, pick->start, pick->end);
    std::vector<int> inner(nxt.a_arc.begin() + 1, nxt.a_arc.end() - 1);
    nxt.with_b = detail::window_pair(cur, inner, cp.genus);
    nxt.non_degenerate = detail::window_nondegenerate(bx, bfc, nxt.a_arc);
    nxt.disjoint_from_previous = true;
    require(nxt.with_b.count() < m, errc::strategy_stuck, "bicorn step failed to shrink");
    seq.bicorns.push_back(std::move(nxt));
  }
}

}  // namespace bicorn
