#pragma once
// Train tracks as ribbon objects. A switch holds two ordered side lists of
// branch ends; reading side 0 then side 1 gives the full counterclockwise
// rotation at the switch. Complement faces are traced as for curve pairs,
// with a cusp wherever two consecutive ends share a side; crossing a tip
// between the sides is smooth.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "bicorn/common.hpp"

namespace bicorn {

// Branch ends are tokens 2*branch + which; traversal darts reuse the same
// packing, dart 2*b+0 running end 0 -> end 1.
inline int end_token(int branch, int which) { return 2 * branch + which; }
inline int end_branch(int token) { return token / 2; }
inline int end_which(int token) { return token % 2; }

inline int branch_dart(int branch, int dir) { return 2 * branch + dir; }
inline int tdart_branch(int d) { return d / 2; }
inline int tdart_dir(int d) { return d % 2; }
inline int tdart_tail_token(int d) { return end_token(tdart_branch(d), tdart_dir(d)); }
inline int tdart_head_token(int d) { return end_token(tdart_branch(d), 1 - tdart_dir(d)); }

struct TrackSwitch {
  std::array<std::vector<int>, 2> side;

  int valence() const { return (int)(side[0].size() + side[1].size()); }
};

struct TrainTrack {
  int genus = 0;  // declared ambient genus
  int branch_count = 0;
  std::vector<TrackSwitch> switches;
};

// Same shape, bigons and monogons tolerated until collapse.
struct PreTrack {
  TrainTrack data;
  bool single_switch = false;
};

struct EndSeat {
  int sw = -1;
  int side = -1;
  int pos = -1;
};

struct TrackIndex {
  std::vector<EndSeat> seat;                // per end token
  std::vector<std::vector<int>> rotation;   // per switch: side 0 ++ side 1
  std::vector<int> rot_pos;                 // per end token: index into its rotation
  std::vector<int> split_at;                // per switch: |side 0|

  int branches() const { return (int)seat.size() / 2; }
};

inline TrackIndex build_track_index(const TrainTrack& t) {
  require(t.branch_count >= 1, errc::bad_input, "track has no branches");
  require(!t.switches.empty(), errc::bad_input, "track has no switches");
  TrackIndex ix;
  ix.seat.assign(2 * t.branch_count, EndSeat{});
  ix.rot_pos.assign(2 * t.branch_count, -1);
  ix.rotation.resize(t.switches.size());
  ix.split_at.resize(t.switches.size());
  for (int s = 0; s < (int)t.switches.size(); ++s) {
    const TrackSwitch& sw = t.switches[s];
    ix.split_at[s] = (int)sw.side[0].size();
    for (int j = 0; j < 2; ++j) {
      for (int p = 0; p < (int)sw.side[j].size(); ++p) {
        int tok = sw.side[j][p];
        require(tok >= 0 && tok < 2 * t.branch_count, errc::bad_input,
                "branch end token out of range");
        require(ix.seat[tok].sw < 0, errc::bad_input, "branch end seated twice");
        ix.seat[tok] = EndSeat{s, j, p};
        ix.rot_pos[tok] = (int)ix.rotation[s].size();
        ix.rotation[s].push_back(tok);
      }
    }
  }
  for (int tok = 0; tok < 2 * t.branch_count; ++tok)
    require(ix.seat[tok].sw >= 0, errc::bad_input, "branch end not seated");
  return ix;
}

struct TrackFace {
  std::vector<int> darts;  // arriving darts in trace order
  int cusps = 0;

  int degree() const { return (int)darts.size(); }
};

struct TrackFaceCensus {
  std::vector<TrackFace> faces;
  int derived_genus = 0;
};

// Face trace for a connected track: follow an arriving dart, turn to the next
// end counterclockwise, leave through it. The corner is a cusp iff no tip is
// crossed.
inline TrackFaceCensus track_face_census(const TrainTrack& t, const TrackIndex& ix) {
  int nd = 2 * t.branch_count;
  std::vector<char> seen(nd, 0);
  TrackFaceCensus out;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (seen[d0]) continue;
    TrackFace face;
    int d = d0;
    do {
      seen[d] = 1;
      face.darts.push_back(d);
      int tok = tdart_head_token(d);
      const EndSeat& at = ix.seat[tok];
      const std::vector<int>& rot = ix.rotation[at.sw];
      int i = ix.rot_pos[tok];
      int j = (i + 1) % (int)rot.size();
      int cut = ix.split_at[at.sw];
      bool same_side = (i < cut) == (j < cut);
      if (same_side) face.cusps += 1;
      int tok2 = rot[j];
      d = branch_dart(end_branch(tok2), end_which(tok2) == 0 ? 0 : 1);
    } while (d != d0);
    out.faces.push_back(std::move(face));
  }
  int chi = (int)t.switches.size() - t.branch_count + (int)out.faces.size();
  require((2 - chi) % 2 == 0 && chi <= 2, errc::euler_mismatch,
          "track face trace gives Euler characteristic " + std::to_string(chi));
  out.derived_genus = (2 - chi) / 2;
  return out;
}

inline bool track_connected(const TrainTrack& t, const TrackIndex& ix) {
  int s = (int)t.switches.size();
  std::vector<int> root(s);
  std::iota(root.begin(), root.end(), 0);
  std::vector<int>* r = &root;
  auto find = [&](int v) {
    while ((*r)[v] != v) v = (*r)[v] = (*r)[(*r)[v]];
    return v;
  };
  for (int b = 0; b < t.branch_count; ++b) {
    int x = find(ix.seat[end_token(b, 0)].sw);
    int y = find(ix.seat[end_token(b, 1)].sw);
    if (x != y) root[x] = y;
  }
  int c = 0;
  for (int v = 0; v < s; ++v)
    if (find(v) == v) ++c;
  return c == 1;
}

struct TrackReport {
  TrainTrack track;
  TrackIndex index;
  TrackFaceCensus census;
};

// A complement face capped into the derived-genus surface is a disc; discs
// with fewer than three cusps are forbidden unless the declared genus can
// hide them. One handle lets a single circuit bound positive genus, and one
// handle joins two circuits into an annulus, legal once any cusp breaks the
// smooth boundary; k >= 3 circuits share one region for k - 1 handles. On
// the torus a two-cusp disc is legal outright: total index there is zero,
// so bigons cannot be avoided.
inline TrackReport validate_track(const TrainTrack& t) {
  TrackIndex ix = build_track_index(t);
  require(track_connected(t, ix), errc::disconnected, "train track is not connected");
  for (int s = 0; s < (int)t.switches.size(); ++s) {
    const TrackSwitch& sw = t.switches[s];
    require(!sw.side[0].empty() && !sw.side[1].empty(), errc::empty_side,
            "switch " + std::to_string(s) + " has an empty side");
    require(sw.valence() >= 3, errc::valence_two_switch,
            "switch " + std::to_string(s) + " has valence " + std::to_string(sw.valence()));
  }
  TrackFaceCensus fc = track_face_census(t, ix);
  require(t.genus >= fc.derived_genus, errc::euler_mismatch,
          "declared genus " + std::to_string(t.genus) + " below derived " +
              std::to_string(fc.derived_genus));
  int handles = t.genus - fc.derived_genus;
  std::vector<int> bad;  // face ids needing a handle, fewest cusps first
  for (int f = 0; f < (int)fc.faces.size(); ++f) {
    int c = fc.faces[f].cusps;
    if (c >= 3) continue;
    if (c == 2 && t.genus == 1) continue;
    bad.push_back(f);
  }
  std::stable_sort(bad.begin(), bad.end(),
                   [&](int x, int y) { return fc.faces[x].cusps < fc.faces[y].cusps; });
  int m = (int)bad.size();
  int cost = m;  // handles for the cheapest grouping of the bad circuits
  if (m >= 3) cost = m - 1;
  if (m == 2 && fc.faces[bad[0]].cusps + fc.faces[bad[1]].cusps >= 1) cost = 1;
  if (cost > handles) {
    int f = bad[std::min(handles, m - 1)];  // a face the surplus cannot absorb
    int c = fc.faces[f].cusps;
    std::string what = "complement face of degree " + std::to_string(fc.faces[f].degree()) +
                       " with " + std::to_string(c) + " cusp" + (c == 1 ? "" : "s");
    fail(c == 2 ? errc::bigon_face : errc::monogon_face, what);
  }
  return TrackReport{t, std::move(ix), std::move(fc)};
}

// Weights are nonnegative rationals on branches; a loop with both ends on one
// side counts twice there.
using WeightVector = std::vector<Rat>;

inline bool check_switch_equality(const TrainTrack& t, const WeightVector& w) {
  require((int)w.size() == t.branch_count, errc::missing_branch_weight,
          "expected " + std::to_string(t.branch_count) + " branch weights, got " +
              std::to_string(w.size()));
  for (const Rat& x : w)
    require(!(x < Rat(0)), errc::negative_entry, "negative branch weight " + x.str());
  for (const TrackSwitch& sw : t.switches) {
    Rat sum[2] = {Rat(0), Rat(0)};
    for (int j = 0; j < 2; ++j)
      for (int tok : sw.side[j]) sum[j] = sum[j] + w[end_branch(tok)];
    if (sum[0] != sum[1]) return false;
  }
  return true;
}

inline bool switch_equal_int(const TrainTrack& t, const std::vector<int>& w) {
  for (const TrackSwitch& sw : t.switches) {
    long long sum[2] = {0, 0};
    for (int j = 0; j < 2; ++j)
      for (int tok : sw.side[j]) sum[j] += w[end_branch(tok)];
    if (sum[0] != sum[1]) return false;
  }
  return true;
}

// Strand model of an integral weight vector. Within a side, strand slots run
// in list order; the two side expansions at a switch pair up reversed, and the
// two ends of a branch see its bundle in opposite order. Orbits of the strand
// successor come in direction pairs, so components = orbits / 2.
inline int carried_components(const TrainTrack& t, const TrackIndex& ix,
                              const std::vector<int>& w) {
  require((int)w.size() == t.branch_count, errc::missing_branch_weight,
          "weight vector size mismatch");
  for (int x : w) require(x >= 0, errc::negative_entry, "negative branch weight");
  require(switch_equal_int(t, w), errc::bad_input, "weights violate a switch equality");

  std::vector<int> offset(2 * t.branch_count, 0);  // strand offset of each end token
  int nsw = (int)t.switches.size();
  std::vector<std::array<std::vector<int>, 2>> slot_token(nsw);
  for (int s = 0; s < nsw; ++s) {
    for (int j = 0; j < 2; ++j) {
      int at = 0;
      for (int tok : t.switches[s].side[j]) {
        offset[tok] = at;
        for (int k = 0; k < w[end_branch(tok)]; ++k) slot_token[s][j].push_back(tok);
        at += w[end_branch(tok)];
      }
    }
  }

  std::vector<int> base(t.branch_count + 1, 0);
  for (int b = 0; b < t.branch_count; ++b) base[b + 1] = base[b] + w[b];
  int strands = base[t.branch_count];
  if (strands == 0) return 0;

  auto advance = [&](int state) {
    int dir = state & 1;
    int sid = state >> 1;
    int b = (int)(std::upper_bound(base.begin(), base.end(), sid) - base.begin()) - 1;
    int slot = sid - base[b];
    int arrive = dir == 0 ? 1 : 0;
    int tok = end_token(b, arrive);
    int local = arrive == 0 ? slot : w[b] - 1 - slot;
    const EndSeat& at = ix.seat[tok];
    int width = (int)slot_token[at.sw][at.side].size();
    int partner = width - 1 - (offset[tok] + local);
    int tok2 = slot_token[at.sw][1 - at.side][partner];
    int local2 = partner - offset[tok2];
    int b2 = end_branch(tok2);
    int slot2 = end_which(tok2) == 0 ? local2 : w[b2] - 1 - local2;
    int dir2 = end_which(tok2) == 0 ? 0 : 1;
    return ((base[b2] + slot2) << 1) | dir2;
  };

  std::vector<char> seen(2 * strands, 0);
  int orbits = 0;
  for (int s0 = 0; s0 < 2 * strands; ++s0) {
    if (seen[s0]) continue;
    ++orbits;
    int s = s0;
    do {
      seen[s] = 1;
      s = advance(s);
    } while (s != s0);
  }
  require(orbits % 2 == 0, errc::bad_input, "strand orbits must pair by direction");
  return orbits / 2;
}

// Vertex cycles: integral weight vectors with entries at most two that close
// into a single carried curve and generate an extreme ray of the weight cone.
// Extremality at this scale: no smaller nonzero switch-equal vector fits
// under the candidate.
inline std::vector<std::vector<int>> vertex_cycles(const TrainTrack& t) {
  TrackIndex ix = build_track_index(t);
  int nb = t.branch_count;
  require(nb <= 12, errc::too_large, "vertex cycle enumeration capped at 12 branches");
  std::vector<std::vector<int>> cone;  // all nonzero switch-equal vectors <= 2
  std::vector<int> w(nb, 0);
  for (;;) {
    int k = 0;
    while (k < nb && w[k] == 2) w[k++] = 0;
    if (k == nb) break;
    w[k] += 1;
    if (switch_equal_int(t, w)) cone.push_back(w);
  }
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& cand : cone) {
    if (carried_components(t, ix, cand) != 1) continue;
    bool extreme = true;
    for (const std::vector<int>& u : cone) {
      if (u == cand) continue;
      bool below = true;
      for (int b = 0; b < nb && below; ++b) below = u[b] <= cand[b];
      if (below) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A curve in the combined embedding: transverse passes through switch points,
// transverse crossings over branch interiors, and a closed route run parallel
// to the track between them.
struct CurveOnTrack {
  std::vector<int> switch_passes;
  std::vector<int> branch_crossings;
  std::vector<int> parallel_route;  // traversal darts
};

inline bool is_switch_dual(const CurveOnTrack& c, const TrainTrack& t) {
  TrackIndex ix = build_track_index(t);
  for (int s : c.switch_passes)
    require(s >= 0 && s < (int)t.switches.size(), errc::embedding_mismatch,
            "switch pass out of range");
  for (int b : c.branch_crossings)
    require(b >= 0 && b < t.branch_count, errc::embedding_mismatch,
            "branch crossing out of range");
  require(!c.parallel_route.empty(), errc::embedding_mismatch, "parallel route is empty");
  for (int d : c.parallel_route)
    require(d >= 0 && d < 2 * t.branch_count, errc::embedding_mismatch,
            "route dart out of range");
  for (size_t i = 0; i + 1 < c.parallel_route.size(); ++i) {
    int head = ix.seat[tdart_head_token(c.parallel_route[i])].sw;
    int tail = ix.seat[tdart_tail_token(c.parallel_route[i + 1])].sw;
    require(head == tail, errc::embedding_mismatch, "parallel route does not compose");
  }
  if (c.switch_passes.size() != 1) return false;
  int s = c.switch_passes[0];
  require(ix.seat[tdart_tail_token(c.parallel_route.front())].sw == s &&
              ix.seat[tdart_head_token(c.parallel_route.back())].sw == s,
          errc::embedding_mismatch, "parallel route does not close at the passed switch");
  if (!c.branch_crossings.empty()) return false;
  // at an interior visit the curve swings past the switch point between the
  // branches it shadows; unless their seats are adjacent in the rotation it
  // sweeps over other germs and picks up crossings
  const std::vector<int>& rot = ix.rotation[s];
  int nrot = (int)rot.size();
  for (size_t i = 0; i + 1 < c.parallel_route.size(); ++i) {
    int h = tdart_head_token(c.parallel_route[i]);
    int u = tdart_tail_token(c.parallel_route[i + 1]);
    if (h == u) return false;  // doubling back crosses the shadowed germ
    int ph = ix.rot_pos[h], pu = ix.rot_pos[u];
    if ((ph + 1) % nrot != pu && (pu + 1) % nrot != ph) return false;
  }
  // the transverse pass runs along the switch tangent, entering and leaving
  // through the two gaps where the rotation changes sides; the route must
  // shadow branches flanking distinct gaps
  auto gaps = [&](int tok) {
    const EndSeat& st = ix.seat[tok];
    int len = (int)t.switches[s].side[st.side].size();
    int g = 0;  // bit 1: the wrap gap, bit 2: the gap between the sides
    if (st.pos == (st.side == 0 ? 0 : len - 1)) g |= 1;
    if (st.pos == (st.side == 0 ? len - 1 : 0)) g |= 2;
    return g;
  };
  int gt = gaps(tdart_tail_token(c.parallel_route.front()));
  int gh = gaps(tdart_head_token(c.parallel_route.back()));
  return gt != 0 && gh != 0 && !(gt == gh && gt != 3);
}

// Certificate that sigma is carried by tau: each sigma branch follows a
// directed path of tau branches, each sigma switch sits over a tau switch.
struct RouteMap {
  std::vector<int> switch_image;
  std::vector<std::vector<int>> branch_route;  // darts in tau, listed end 0 -> end 1
};

inline bool verify_carrying(const TrainTrack& sigma, const TrainTrack& tau,
                            const RouteMap& m) {
  TrackIndex sx = build_track_index(sigma);
  TrackIndex tx = build_track_index(tau);
  require((int)m.switch_image.size() == (int)sigma.switches.size(), errc::broken_route,
          "switch image size mismatch");
  require((int)m.branch_route.size() == sigma.branch_count, errc::broken_route,
          "branch route size mismatch");
  for (int s : m.switch_image)
    require(s >= 0 && s < (int)tau.switches.size(), errc::broken_route,
            "switch image out of range");
  for (int b = 0; b < sigma.branch_count; ++b) {
    const std::vector<int>& route = m.branch_route[b];
    for (int d : route)
      require(d >= 0 && d < 2 * tau.branch_count, errc::broken_route,
              "route dart out of range on branch " + std::to_string(b));
    for (size_t i = 0; i + 1 < route.size(); ++i)
      require(tx.seat[tdart_head_token(route[i])].sw ==
                  tx.seat[tdart_tail_token(route[i + 1])].sw,
              errc::broken_route, "route does not compose on branch " + std::to_string(b));
    int from = m.switch_image[sx.seat[end_token(b, 0)].sw];
    int to = m.switch_image[sx.seat[end_token(b, 1)].sw];
    if (route.empty()) {
      if (from != to) return false;
      continue;
    }
    if (tx.seat[tdart_tail_token(route.front())].sw != from) return false;
    if (tx.seat[tdart_head_token(route.back())].sw != to) return false;
    for (size_t i = 0; i + 1 < route.size(); ++i) {
      int in_side = tx.seat[tdart_head_token(route[i])].side;
      int out_side = tx.seat[tdart_tail_token(route[i + 1])].side;
      if (in_side == out_side) return false;  // illegal turn
    }
  }
  // tangential consistency: germs of one sigma side share a tau side, and the
  // two sides use the two different tau sides
  for (int s = 0; s < (int)sigma.switches.size(); ++s) {
    int germ[2] = {-1, -1};
    for (int j = 0; j < 2; ++j) {
      for (int tok : sigma.switches[s].side[j]) {
        const std::vector<int>& route = m.branch_route[end_branch(tok)];
        if (route.empty()) continue;
        int side = end_which(tok) == 0 ? tx.seat[tdart_tail_token(route.front())].side
                                       : tx.seat[tdart_head_token(route.back())].side;
        if (germ[j] < 0) germ[j] = side;
        if (germ[j] != side) return false;
      }
    }
    if (germ[0] >= 0 && germ[1] >= 0 && germ[0] == germ[1]) return false;
  }
  return true;
}

inline std::vector<int> push_forward(const TrainTrack& sigma, const TrainTrack& tau,
                                     const RouteMap& m, const std::vector<int>& w) {
  require((int)w.size() == sigma.branch_count, errc::missing_branch_weight,
          "weight vector size mismatch");
  std::vector<int> out(tau.branch_count, 0);
  for (int b = 0; b < sigma.branch_count; ++b)
    for (int d : m.branch_route[b]) out[tdart_branch(d)] += w[b];
  return out;
}

// Canonical form under switch renumbering, per-switch side swaps, and branch
// relabeling; orientation-preserving only. Small tracks only, by design.
inline std::string canonical_track_form(const TrainTrack& t) {
  build_track_index(t);  // structural sanity
  int nsw = (int)t.switches.size();
  require(nsw <= 7, errc::too_large, "canonical form capped at 7 switches");
  std::vector<int> order(nsw);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  do {
    for (int mask = 0; mask < (1 << nsw); ++mask) {
      std::vector<int> branch_name(t.branch_count, -1);
      std::vector<int> end_flip(t.branch_count, 0);
      int next_name = 0;
      std::string s = "g" + std::to_string(t.genus) + "|";
      for (int k = 0; k < nsw; ++k) {
        const TrackSwitch& sw = t.switches[order[k]];
        int swap = (mask >> k) & 1;
        for (int j = 0; j < 2; ++j) {
          s += j == 0 ? "(" : ")(";
          for (int tok : sw.side[j ^ swap]) {
            int b = end_branch(tok);
            if (branch_name[b] < 0) {
              branch_name[b] = next_name++;
              end_flip[b] = end_which(tok);
            }
            s += std::to_string(branch_name[b]);
            s += end_which(tok) == end_flip[b] ? '+' : '-';
            s += ',';
          }
        }
        s += ");";
      }
      if (best.empty() || s < best) best = std::move(s);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool tracks_isomorphic(const TrainTrack& a, const TrainTrack& b) {
  if (a.genus != b.genus || a.branch_count != b.branch_count ||
      a.switches.size() != b.switches.size())
    return false;
  return canonical_track_form(a) == canonical_track_form(b);
}

}  // namespace bicorn
