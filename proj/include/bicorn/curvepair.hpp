#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bicorn/common.hpp"

namespace bicorn {

// A pair of simple closed curves on a closed oriented surface, in general
// position, encoded as the rotation system of the 4-valent union graph.
// Each intersection appears exactly once on each cycle; the per-vertex
// rotation alternates a,b,a,b and is summarised by a crossing sign:
//   +1  counterclockwise order (a_out, b_out, a_in, b_in)
//   -1  counterclockwise order (a_out, b_in, a_in, b_out)
struct CurvePair {
  std::vector<int> a_cycle;  // vertex labels in order along a
  std::vector<int> b_cycle;  // vertex labels in order along b
  std::map<int, int> sign;   // label -> +1 / -1
  int genus = 1;             // derived when intersections exist, declared otherwise

  int count() const { return (int)a_cycle.size(); }
};

enum class ArcSide : uint8_t { left = 0, right = 1 };

inline const char* side_name(ArcSide s) { return s == ArcSide::left ? "left" : "right"; }

// Dart kinds at a vertex; "out" points along the curve orientation.
enum : int { dart_a_out = 0, dart_a_in = 1, dart_b_out = 2, dart_b_in = 3 };

inline bool dart_is_b(int kind) { return kind == dart_b_out || kind == dart_b_in; }

// Dense indexing plus cycle positions for one pair.
struct PairIndex {
  std::vector<int> labels;        // dense -> label, sorted
  std::map<int, int> dense;       // label -> dense
  std::vector<int> a_order;       // position -> dense
  std::vector<int> b_order;
  std::vector<int> a_pos;         // dense -> position
  std::vector<int> b_pos;
  std::vector<int> sgn;           // dense -> sign

  int n() const { return (int)labels.size(); }
};

inline PairIndex index_pair(const CurvePair& cp) {
  PairIndex ix;
  ix.labels.assign(cp.a_cycle.begin(), cp.a_cycle.end());
  std::sort(ix.labels.begin(), ix.labels.end());
  require(std::adjacent_find(ix.labels.begin(), ix.labels.end()) == ix.labels.end(),
          errc::disconnected_curve, "a_cycle repeats a vertex");
  for (int i = 0; i < (int)ix.labels.size(); ++i) ix.dense[ix.labels[i]] = i;
  require(cp.b_cycle.size() == cp.a_cycle.size(), errc::disconnected_curve,
          "a_cycle and b_cycle disagree on the vertex set");
  int n = ix.n();
  ix.a_order.resize(n);
  ix.b_order.resize(n);
  ix.a_pos.assign(n, -1);
  ix.b_pos.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    auto it = ix.dense.find(cp.a_cycle[p]);
    require(it != ix.dense.end(), errc::disconnected_curve, "unknown vertex in a_cycle");
    ix.a_order[p] = it->second;
    ix.a_pos[it->second] = p;
  }
  for (int p = 0; p < n; ++p) {
    auto it = ix.dense.find(cp.b_cycle[p]);
    require(it != ix.dense.end(), errc::disconnected_curve, "unknown vertex in b_cycle");
    require(ix.b_pos[it->second] < 0, errc::disconnected_curve, "b_cycle repeats a vertex");
    ix.b_order[p] = it->second;
    ix.b_pos[it->second] = p;
  }
  ix.sgn.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    auto it = cp.sign.find(ix.labels[i]);
    require(it != cp.sign.end() && (it->second == 1 || it->second == -1),
            errc::non_alternating_rotation, "missing or bad sign at vertex " +
                std::to_string(ix.labels[i]));
    ix.sgn[i] = it->second;
  }
  return ix;
}

// Dart ids: 4 * dense + kind.
inline int dart_id(int dense, int kind) { return 4 * dense + kind; }
inline int dart_vertex(int d) { return d / 4; }
inline int dart_kind(int d) { return d % 4; }

inline int cyc_next(int p, int n) { return p + 1 == n ? 0 : p + 1; }
inline int cyc_prev(int p, int n) { return p == 0 ? n - 1 : p - 1; }

// Opposite dart of the same edge.
inline int dart_rev(const PairIndex& ix, int d) {
  int v = dart_vertex(d), n = ix.n();
  switch (dart_kind(d)) {
    case dart_a_out: return dart_id(ix.a_order[cyc_next(ix.a_pos[v], n)], dart_a_in);
    case dart_a_in: return dart_id(ix.a_order[cyc_prev(ix.a_pos[v], n)], dart_a_out);
    case dart_b_out: return dart_id(ix.b_order[cyc_next(ix.b_pos[v], n)], dart_b_in);
    default: return dart_id(ix.b_order[cyc_prev(ix.b_pos[v], n)], dart_b_out);
  }
}

// Counterclockwise successor in the rotation at the dart's vertex.
inline int dart_rot_next(const PairIndex& ix, int d) {
  static const int plus_tab[4] = {/*a_out*/ dart_b_out, /*a_in*/ dart_b_in,
                                  /*b_out*/ dart_a_in, /*b_in*/ dart_a_out};
  static const int minus_tab[4] = {/*a_out*/ dart_b_in, /*a_in*/ dart_b_out,
                                   /*b_out*/ dart_a_out, /*b_in*/ dart_a_in};
  int v = dart_vertex(d);
  int k = dart_kind(d);
  return dart_id(v, ix.sgn[v] > 0 ? plus_tab[k] : minus_tab[k]);
}

// Side of a with a b-dart on it; the surface orientation makes this global.
inline ArcSide side_of_b_dart(const PairIndex& ix, int d) {
  int v = dart_vertex(d);
  bool out = dart_kind(d) == dart_b_out;
  if (ix.sgn[v] > 0) return out ? ArcSide::left : ArcSide::right;
  return out ? ArcSide::right : ArcSide::left;
}

struct Face {
  std::vector<int> darts;  // trace order
  int degree() const { return (int)darts.size(); }
};

enum class FaceClass { bigon, rectangle, other };

struct FaceCensus {
  std::vector<Face> faces;
  std::vector<int> face_of;  // dart -> face id
  int bigons = 0;
  int rectangles = 0;
  int derived_genus = 0;

  FaceClass face_class(int f) const {
    int d = faces[f].degree();
    if (d == 2) return FaceClass::bigon;
    if (d == 4) return FaceClass::rectangle;
    return FaceClass::other;
  }
};

// Faces of the capped surface determined by the rotation system.
inline FaceCensus face_census(const CurvePair& cp, const PairIndex& ix) {
  int n = ix.n();
  require(n >= 1, errc::no_intersections, "face census needs intersections");
  FaceCensus fc;
  fc.face_of.assign(4 * n, -1);
  for (int d0 = 0; d0 < 4 * n; ++d0) {
    if (fc.face_of[d0] >= 0) continue;
    Face f;
    int d = d0;
    do {
      fc.face_of[d] = (int)fc.faces.size();
      f.darts.push_back(d);
      d = dart_rot_next(ix, dart_rev(ix, d));
    } while (d != d0);
    fc.faces.push_back(std::move(f));
  }
  for (int i = 0; i < (int)fc.faces.size(); ++i) {
    if (fc.face_class(i) == FaceClass::bigon) ++fc.bigons;
    if (fc.face_class(i) == FaceClass::rectangle) ++fc.rectangles;
  }
  int euler_defect = 2 + n - (int)fc.faces.size();  // 2 - chi, with E = 2V
  require(euler_defect >= 0 && euler_defect % 2 == 0, errc::euler_mismatch,
          "rotation system has no closed orientable filling");
  fc.derived_genus = euler_defect / 2;
  return fc;
}

// Full validation; bigons are rejected unless allowed (pre-reduction input).
inline PairIndex validate_curve_pair(const CurvePair& cp, bool allow_bigons = false) {
  PairIndex ix = index_pair(cp);
  if (ix.n() == 0) {
    require(cp.genus >= 0, errc::euler_mismatch, "negative genus");
    return ix;
  }
  FaceCensus fc = face_census(cp, ix);
  require(fc.derived_genus == cp.genus, errc::euler_mismatch,
          "declared genus " + std::to_string(cp.genus) + " but faces give " +
              std::to_string(fc.derived_genus));
  if (!allow_bigons) {
    for (int f = 0; f < (int)fc.faces.size(); ++f)
      require(fc.face_class(f) != FaceClass::bigon, errc::bigon_present,
              "face " + std::to_string(f) + " is a bigon");
  }
  return ix;
}

// Raw description as read from an instance file.
struct RawCurvePair {
  std::vector<int> vertices;
  std::vector<int> a_cycle;
  std::vector<int> b_cycle;
  std::map<int, std::vector<std::string>> rotations;  // ccw dart tokens
  std::optional<int> genus;
};

inline int rotation_sign(const std::vector<std::string>& toks, int vertex_label) {
  require(toks.size() == 4, errc::non_alternating_rotation,
          "rotation at vertex " + std::to_string(vertex_label) + " must list 4 darts");
  auto kind_of = [&](const std::string& t) {
    if (t == "a_out") return dart_a_out;
    if (t == "a_in") return dart_a_in;
    if (t == "b_out") return dart_b_out;
    if (t == "b_in") return dart_b_in;
    fail(errc::non_alternating_rotation,
         "unknown dart token '" + t + "' at vertex " + std::to_string(vertex_label));
  };
  int at = -1;
  std::set<int> seen;
  std::vector<int> kinds;
  for (int i = 0; i < 4; ++i) {
    int k = kind_of(toks[i]);
    require(seen.insert(k).second, errc::non_alternating_rotation,
            "repeated dart at vertex " + std::to_string(vertex_label));
    kinds.push_back(k);
    if (k == dart_a_out) at = i;
  }
  // normalise to start at a_out
  std::vector<int> r;
  for (int i = 0; i < 4; ++i) r.push_back(kinds[(at + i) % 4]);
  if (r[1] == dart_b_out && r[2] == dart_a_in && r[3] == dart_b_in) return 1;
  if (r[1] == dart_b_in && r[2] == dart_a_in && r[3] == dart_b_out) return -1;
  fail(errc::non_alternating_rotation,
       "rotation at vertex " + std::to_string(vertex_label) + " does not alternate a,b,a,b");
}

inline CurvePair build_curve_pair(const RawCurvePair& raw, bool allow_bigons = false) {
  CurvePair cp;
  cp.a_cycle = raw.a_cycle;
  cp.b_cycle = raw.b_cycle;
  std::set<int> declared(raw.vertices.begin(), raw.vertices.end());
  require(declared.size() == raw.vertices.size(), errc::disconnected_curve,
          "vertex list repeats a label");
  require(declared.size() == raw.a_cycle.size(), errc::disconnected_curve,
          "a_cycle must visit every declared vertex exactly once");
  for (int v : raw.a_cycle)
    require(declared.count(v), errc::disconnected_curve,
            "a_cycle visits undeclared vertex " + std::to_string(v));
  if (raw.vertices.empty()) {
    require(raw.genus.has_value() && *raw.genus >= 1, errc::euler_mismatch,
            "disjoint pair needs a declared genus >= 1");
    cp.genus = *raw.genus;
    return cp;
  }
  for (int v : raw.vertices) {
    auto it = raw.rotations.find(v);
    require(it != raw.rotations.end(), errc::non_alternating_rotation,
            "missing rotation at vertex " + std::to_string(v));
    cp.sign[v] = rotation_sign(it->second, v);
  }
  PairIndex ix = index_pair(cp);
  FaceCensus fc = face_census(cp, ix);
  if (raw.genus.has_value())
    require(*raw.genus == fc.derived_genus, errc::euler_mismatch,
            "declared genus " + std::to_string(*raw.genus) + " but faces give " +
                std::to_string(fc.derived_genus));
  cp.genus = fc.derived_genus;
  if (!allow_bigons) {
    for (int f = 0; f < (int)fc.faces.size(); ++f)
      require(fc.face_class(f) != FaceClass::bigon, errc::bigon_present,
              "face " + std::to_string(f) + " is a bigon");
  }
  return cp;
}

struct ReduceResult {
  CurvePair pair;
  int bigons_removed = 0;
};

// Repeatedly deletes the two crossings of a bigon face and resmooths.
inline ReduceResult reduce_to_minimal_position(const CurvePair& cp) {
  ReduceResult out;
  out.pair = cp;
  for (;;) {
    if (out.pair.count() == 0) return out;
    PairIndex ix = index_pair(out.pair);
    FaceCensus fc = face_census(out.pair, ix);
    int bigon = -1;
    for (int f = 0; f < (int)fc.faces.size(); ++f)
      if (fc.face_class(f) == FaceClass::bigon) {
        bigon = f;
        break;
      }
    if (bigon < 0) return out;
    const Face& f = fc.faces[bigon];
    int da = f.darts[0], db = f.darts[1];
    if (dart_is_b(dart_kind(da))) std::swap(da, db);
    require(!dart_is_b(dart_kind(da)) && dart_is_b(dart_kind(db)),
            errc::non_orientable_smoothing, "bigon face without one a-side and one b-side");
    auto edge_ends = [&](int d) {
      int u = dart_vertex(d), w = dart_vertex(dart_rev(ix, d));
      return std::pair<int, int>(std::min(u, w), std::max(u, w));
    };
    auto ea = edge_ends(da), eb = edge_ends(db);
    require(ea == eb, errc::non_orientable_smoothing, "bigon sides disagree on endpoints");
    require(ea.first != ea.second, errc::non_orientable_smoothing,
            "degenerate bigon at a single crossing");
    int p = ix.labels[ea.first], q = ix.labels[ea.second];
    auto drop = [&](std::vector<int>& cyc) {
      cyc.erase(std::remove_if(cyc.begin(), cyc.end(), [&](int v) { return v == p || v == q; }),
                cyc.end());
    };
    drop(out.pair.a_cycle);
    drop(out.pair.b_cycle);
    out.pair.sign.erase(p);
    out.pair.sign.erase(q);
    ++out.bigons_removed;
    if (out.pair.count() >= 1) {
      PairIndex ix2 = index_pair(out.pair);
      out.pair.genus = face_census(out.pair, ix2).derived_genus;
    }
    // a pair reduced to disjoint curves keeps the genus it had
  }
}

// Geometric intersection number: crossings after bigon reduction.
inline int geometric_intersection_number(const CurvePair& cp) {
  return reduce_to_minimal_position(cp).pair.count();
}

}  // namespace bicorn
