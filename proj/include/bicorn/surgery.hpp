#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bicorn/common.hpp"
#include "bicorn/curvepair.hpp"

namespace bicorn {

// One arc of b cut off by consecutive intersections along b. Every such arc is
// innermost in this encoding; it is returning when both ends hang on the same
// side of a.
struct InnermostArc {
  int index = -1;  // edge from b_cycle[index] to b_cycle[index + 1]
  int start = -1;  // vertex labels
  int end = -1;
  ArcSide side_out = ArcSide::left;  // side at start
  ArcSide side_in = ArcSide::left;   // side at end
  bool returning = false;
};

inline std::vector<InnermostArc> innermost_arcs(const CurvePair& cp, const PairIndex& ix) {
  int n = ix.n();
  std::vector<InnermostArc> arcs;
  for (int p = 0; p < n; ++p) {
    InnermostArc arc;
    arc.index = p;
    int u = ix.b_order[p], w = ix.b_order[cyc_next(p, n)];
    arc.start = ix.labels[u];
    arc.end = ix.labels[w];
    arc.side_out = side_of_b_dart(ix, dart_id(u, dart_b_out));
    arc.side_in = side_of_b_dart(ix, dart_id(w, dart_b_in));
    arc.returning = arc.side_out == arc.side_in;
    arcs.push_back(arc);
  }
  return arcs;
}

inline std::vector<InnermostArc> returning_arcs(const CurvePair& cp) {
  require(cp.count() >= 1, errc::no_intersections, "no arcs without intersections");
  PairIndex ix = index_pair(cp);
  std::vector<InnermostArc> out;
  for (const InnermostArc& arc : innermost_arcs(cp, ix))
    if (arc.returning) out.push_back(arc);
  return out;
}

// The two arcs of a cut off by the ends of a b-arc. left_piece runs forward
// along a from the b-arc's start vertex to its end vertex.
enum class PieceChoice { left_piece, right_piece };

inline const char* piece_name(PieceChoice c) {
  return c == PieceChoice::left_piece ? "left_piece" : "right_piece";
}

// Interior vertices of the chosen piece, dense, in order along a.
inline std::vector<int> piece_interior(const PairIndex& ix, const InnermostArc& arc,
                                       PieceChoice choice) {
  int n = ix.n();
  int pa = ix.a_pos[ix.dense.at(arc.start)];
  int qa = ix.a_pos[ix.dense.at(arc.end)];
  if (choice == PieceChoice::right_piece) std::swap(pa, qa);
  std::vector<int> interior;
  if (pa == qa) return interior;  // trivial piece
  for (int p = cyc_next(pa, n); p != qa; p = cyc_next(p, n)) interior.push_back(ix.a_order[p]);
  return interior;
}

// Whether the cycle made of the chosen a-piece and the b-arc bounds a disc in
// the capped surface: solved over GF(2) on the face lattice, then by the Euler
// characteristic of each complementary side.
inline bool surgered_curve_inessential(const CurvePair& cp, const PairIndex& ix,
                                       const FaceCensus& fc, const InnermostArc& arc,
                                       PieceChoice choice) {
  int n = ix.n();
  // edges 0..n-1 along a by tail position, n..2n-1 along b
  auto edge_of = [&](int d) {
    int v = dart_vertex(d);
    switch (dart_kind(d)) {
      case dart_a_out: return ix.a_pos[v];
      case dart_a_in: return cyc_prev(ix.a_pos[v], n);
      case dart_b_out: return n + ix.b_pos[v];
      default: return n + cyc_prev(ix.b_pos[v], n);
    }
  };
  int fcount = (int)fc.faces.size();
  std::vector<uint64_t> boundary(fcount, 0);
  for (int f = 0; f < fcount; ++f)
    for (int d : fc.faces[f].darts) boundary[f] ^= uint64_t(1) << edge_of(d);
  uint64_t gamma = uint64_t(1) << (n + arc.index);
  {
    int pa = ix.a_pos[ix.dense.at(arc.start)];
    int qa = ix.a_pos[ix.dense.at(arc.end)];
    if (choice == PieceChoice::right_piece) std::swap(pa, qa);
    for (int p = pa; p != qa; p = cyc_next(p, n)) gamma ^= uint64_t(1) << p;
  }
  // xor basis over faces, keyed by highest set bit
  uint64_t basis_vec[64] = {0}, basis_combo[64] = {0};
  for (int f = 0; f < fcount; ++f) {
    uint64_t vec = boundary[f], key = uint64_t(1) << f;
    for (int bit = 63; bit >= 0 && vec; --bit) {
      if (!(vec >> bit & 1)) continue;
      if (!basis_vec[bit]) {
        basis_vec[bit] = vec;
        basis_combo[bit] = key;
        vec = 0;
        break;
      }
      vec ^= basis_vec[bit];
      key ^= basis_combo[bit];
    }
  }
  uint64_t need = gamma, combo = 0;
  for (int bit = 63; bit >= 0 && need; --bit) {
    if (!(need >> bit & 1)) continue;
    if (!basis_vec[bit]) return false;  // nonseparating, hence essential
    need ^= basis_vec[bit];
    combo ^= basis_combo[bit];
  }
  // chi of one side of the cut
  auto side_chi = [&](uint64_t faces) {
    std::vector<char> edge_in(2 * n, 0), vert_in(n, 0);
    int fcnt = 0;
    for (int f = 0; f < fcount; ++f) {
      if (!(faces >> f & 1)) continue;
      ++fcnt;
      for (int d : fc.faces[f].darts) edge_in[edge_of(d)] = 1;
    }
    int ecnt = 0;
    for (int e = 0; e < 2 * n; ++e) {
      if (!edge_in[e]) continue;
      ++ecnt;
      int tail = e < n ? ix.a_order[e] : ix.b_order[e - n];
      int head = e < n ? ix.a_order[cyc_next(e, n)] : ix.b_order[cyc_next(e - n, n)];
      vert_in[tail] = vert_in[head] = 1;
    }
    int vcnt = 0;
    for (char c : vert_in) vcnt += c;
    return vcnt - ecnt + fcnt;
  };
  uint64_t all = fcount == 64 ? ~uint64_t(0) : (uint64_t(1) << fcount) - 1;
  return side_chi(combo) == 1 || side_chi(all & ~combo) == 1;
}

struct SurgeryResult {
  CurvePair pair;            // (c, b) after bigon reduction
  CurvePair unreduced;       // (c, b) as constructed
  std::vector<int> piece;    // interior vertex labels of the chosen a-piece
  int raw_crossings = 0;     // crossings of c with b before reduction
  bool disjoint_from_a = false;
  bool inessential = false;  // c bounds a disc in the capped surface
};

// Surgery along one innermost arc: c follows the chosen piece of a and closes
// up along the arc. A returning arc pushes off both curves; a crossing arc
// forces one fresh crossing with b on the way back. With a single
// intersection both choices collapse to the arc itself.
inline SurgeryResult surger_along(const CurvePair& cp, const InnermostArc& arc,
                                  PieceChoice choice) {
  PairIndex ix = validate_curve_pair(cp, /*allow_bigons=*/true);
  int n = ix.n();
  require(n >= 1, errc::no_intersections, "surgery needs intersections");
  require(arc.index >= 0 && arc.index < n, errc::bad_input, "arc index out of range");
  require(cp.b_cycle[arc.index] == arc.start &&
              cp.b_cycle[cyc_next(arc.index, n)] == arc.end,
          errc::bad_input, "arc does not match the pair");
  FaceCensus fc = face_census(cp, ix);

  SurgeryResult out;
  if (arc.start == arc.end) choice = PieceChoice::left_piece;  // both sides trivial
  std::vector<int> interior = piece_interior(ix, arc, choice);
  for (int v : interior) out.piece.push_back(ix.labels[v]);
  out.disjoint_from_a = arc.returning;
  // a crossing arc forces one fresh crossing, except when the piece is a
  // point and c closes up beside the arc
  bool fresh = !arc.returning && arc.start != arc.end;
  out.raw_crossings = (int)interior.size() + (fresh ? 1 : 0);
  out.inessential = surgered_curve_inessential(cp, ix, fc, arc, choice);

  std::vector<char> keep(n, 0);
  for (int v : interior) keep[v] = 1;
  CurvePair nu;
  for (int v : interior) nu.a_cycle.push_back(ix.labels[v]);
  int star = -1;
  if (fresh) {
    star = ix.labels.back() + 1;
    nu.a_cycle.push_back(star);
  }
  for (int p = 0; p < n; ++p) {
    int v = ix.b_order[p];
    if (keep[v]) nu.b_cycle.push_back(ix.labels[v]);
    if (p == arc.index && star >= 0) nu.b_cycle.push_back(star);
  }
  for (int v : interior) nu.sign[ix.labels[v]] = ix.sgn[v];
  if (star >= 0) nu.sign[star] = arc.side_out == ArcSide::left ? 1 : -1;
  if (nu.count() >= 1) {
    PairIndex nix = index_pair(nu);
    nu.genus = face_census(nu, nix).derived_genus;
  } else {
    nu.genus = cp.genus;
  }
  out.unreduced = nu;
  ReduceResult red = reduce_to_minimal_position(nu);
  out.pair = red.pair;
  require(out.pair.count() < n, errc::strategy_stuck, "surgery failed to reduce crossings");
  return out;
}

// The public operation insists on a returning arc, which is what makes the
// new curve disjoint from a.
inline SurgeryResult arc_surgery(const CurvePair& cp, const InnermostArc& arc,
                                 PieceChoice choice) {
  require(arc.returning, errc::not_returning, "arc ends on opposite sides of a");
  return surger_along(cp, arc, choice);
}

struct SurgeryStep {
  InnermostArc arc;
  PieceChoice choice = PieceChoice::left_piece;
  SurgeryResult result;
};

struct SurgerySequence {
  std::vector<CurvePair> curves_with_b;  // pairs (c_k, b); front is the input
  std::vector<SurgeryStep> steps;

  int length() const { return (int)steps.size(); }
};

// Greedy strategy: smallest arc index along b, returning arcs preferred,
// then the piece with fewer interior vertices (ties to left_piece).
inline SurgerySequence curve_surgery_sequence(const CurvePair& cp) {
  PairIndex ix0 = validate_curve_pair(cp);
  (void)ix0;
  SurgerySequence seq;
  seq.curves_with_b.push_back(cp);
  CurvePair cur = cp;
  while (cur.count() >= 1) {
    PairIndex ix = index_pair(cur);
    std::vector<InnermostArc> arcs = innermost_arcs(cur, ix);
    const InnermostArc* pick = nullptr;
    for (const InnermostArc& a : arcs)
      if (a.returning) {
        pick = &a;
        break;
      }
    if (!pick) pick = &arcs.front();
    require(pick != nullptr, errc::strategy_stuck, "no arc available");
    auto left = piece_interior(ix, *pick, PieceChoice::left_piece);
    auto right = piece_interior(ix, *pick, PieceChoice::right_piece);
    PieceChoice choice =
        right.size() < left.size() ? PieceChoice::right_piece : PieceChoice::left_piece;
    SurgeryStep step;
    step.arc = *pick;
    step.choice = choice;
    step.result = surger_along(cur, *pick, choice);
    cur = step.result.pair;
    seq.curves_with_b.push_back(cur);
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

}  // namespace bicorn
