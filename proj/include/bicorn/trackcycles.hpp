#pragma once
// Unions of carried curves. Each weight vector is realized as parallel
// strands in the tie neighborhood; strands of one curve never cross, strands
// of different curves cross inside switch discs where their chords
// interleave. The union is a four-valent ribbon graph whose face census
// decides filling, so no minimal position argument is needed: extra crossing
// pairs only add disk faces and leave the derived genus alone.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "bicorn/common.hpp"
#include "bicorn/traintrack.hpp"

namespace bicorn {

struct OverlayReport {
  int crossings = 0;
  int edges = 0;
  int faces = 0;
  int derived_genus = 0;  // zero when the union has no crossings at all
  bool connected = false;
  bool filling = false;
};

namespace detail {

// ccw order of nonzero integer direction vectors, no two parallel
inline bool angular_less(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
  auto half = [](const std::array<long long, 2>& v) {
    return v[1] < 0 || (v[1] == 0 && v[0] < 0) ? 1 : 0;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace detail

// Overlay of several carried curves given by nonnegative switch-equal weight
// vectors. Strand blocks are stacked by list index along every branch; chord
// endpoints live on the convex curve t -> (t, t^2), so crossing order along a
// chord and the rotation at a crossing are exact integer arithmetic.
inline OverlayReport overlay_carried(const TrainTrack& t,
                                     const std::vector<std::vector<int>>& cycles) {
  TrackIndex ix = build_track_index(t);
  int nb = t.branch_count;
  int nc = (int)cycles.size();
  for (const std::vector<int>& w : cycles) {
    require((int)w.size() == nb, errc::missing_branch_weight, "overlay weight size mismatch");
    for (int x : w) require(x >= 0, errc::negative_entry, "overlay weight negative");
    require(switch_equal_int(t, w), errc::bad_input, "overlay weight breaks switch equality");
  }
  std::vector<std::vector<int>> off(nc, std::vector<int>(nb, 0));
  std::vector<int> width(nb, 0);
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < nc; ++k) {
      off[k][b] = width[b];
      width[b] += cycles[k][b];
    }

  struct Strand {
    int cycle, branch, which, slot;  // slot is intrinsic to the branch tie
  };
  struct Chord {
    int cycle, p0, p1;                    // circle positions, side 0 and side 1
    std::vector<std::pair<Rat, int>> hits;  // crossings ordered along the chord by x
  };
  int nsw = (int)t.switches.size();
  std::vector<std::vector<Strand>> circle(nsw);
  std::vector<std::vector<Chord>> chords(nsw);
  std::vector<std::vector<std::array<std::vector<int>, 2>>> kpos(nsw);  // [s][k][side]
  std::vector<std::map<int, int>> token_base(nsw);
  std::vector<std::vector<std::vector<int>>> chord_of(nsw);  // [s][k][q]
  for (int s = 0; s < nsw; ++s) {
    kpos[s].resize(nc);
    for (int side = 0; side < 2; ++side)
      for (int tok : t.switches[s].side[side]) {
        int b = end_branch(tok), which = end_which(tok);
        token_base[s][tok] = (int)circle[s].size();
        for (int q = 0; q < width[b]; ++q) {
          int slot = which == 0 ? q : width[b] - 1 - q;
          int k = 0;
          while (!(off[k][b] <= slot && slot < off[k][b] + cycles[k][b])) ++k;
          kpos[s][k][side].push_back((int)circle[s].size());
          circle[s].push_back(Strand{k, b, which, slot});
        }
      }
    chord_of[s].resize(nc);
    for (int k = 0; k < nc; ++k) {
      int kw = (int)kpos[s][k][0].size();
      require(kw == (int)kpos[s][k][1].size(), errc::bad_input, "side widths disagree");
      chord_of[s][k].resize(kw);
      for (int q = 0; q < kw; ++q) {
        chord_of[s][k][q] = (int)chords[s].size();
        chords[s].push_back(Chord{k, kpos[s][k][0][q], kpos[s][k][1][kw - 1 - q], {}});
      }
    }
  }

  struct Crossing {
    int sw;
    Rat x, y;
  };
  std::vector<Crossing> crossings;
  long long final_shift = 0;
  for (long long shift = 0;; ++shift) {
    require(shift < 8, errc::too_large, "degenerate chord configuration");
    final_shift = shift;
    crossings.clear();
    bool clean = true;
    for (int s = 0; s < nsw && clean; ++s) {
      for (Chord& c : chords[s]) c.hits.clear();
      auto tparam = [&](int p) { return (long long)p + shift; };
      for (size_t i = 0; i < chords[s].size() && clean; ++i)
        for (size_t j = i + 1; j < chords[s].size() && clean; ++j) {
          Chord& ci = chords[s][i];
          Chord& cj = chords[s][j];
          if (ci.cycle == cj.cycle) continue;
          auto [lo, hi] = std::minmax(ci.p0, ci.p1);
          bool in0 = lo < cj.p0 && cj.p0 < hi;
          bool in1 = lo < cj.p1 && cj.p1 < hi;
          if (in0 == in1) continue;
          long long a1 = tparam(ci.p0), b1 = tparam(ci.p1);
          long long a2 = tparam(cj.p0), b2 = tparam(cj.p1);
          Rat x = Rat(a1 * b1 - a2 * b2, a1 + b1 - a2 - b2);
          Rat y = Rat(a1 + b1) * x - Rat(a1 * b1);
          int id = (int)crossings.size();
          crossings.push_back(Crossing{s, x, y});
          ci.hits.emplace_back(x, id);
          cj.hits.emplace_back(x, id);
        }
      for (Chord& c : chords[s]) {
        std::sort(c.hits.begin(), c.hits.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i + 1 < c.hits.size(); ++i)
          if (c.hits[i].first == c.hits[i + 1].first) clean = false;
      }
    }
    if (clean) break;
  }
  int V = (int)crossings.size();

  // walk every curve, stringing edges between consecutive crossings
  struct End {
    int dart;
    std::array<long long, 2> dir;
  };
  std::vector<std::vector<End>> at(V);
  int n_edges = 0;
  int free_orbits = 0;
  int orbits = 0;
  std::vector<int> uf(V);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  for (int k = 0; k < nc; ++k) {
    std::vector<int> base(nb + 1, 0);
    for (int b = 0; b < nb; ++b) base[b + 1] = base[b] + 2 * cycles[k][b];
    std::vector<char> seen(base[nb], 0);
    for (int b0 = 0; b0 < nb; ++b0)
      for (int d0 = 0; d0 < 2; ++d0)
        for (int l0 = 0; l0 < cycles[k][b0]; ++l0) {
          if (seen[base[b0] + d0 * cycles[k][b0] + l0]) continue;
          ++orbits;
          struct Visit {
            int crossing;
            std::array<long long, 2> dir;
          };
          std::vector<Visit> visits;
          int b = b0, dir = d0, l = l0;
          do {
            seen[base[b] + dir * cycles[k][b] + l] = 1;
            seen[base[b] + (1 - dir) * cycles[k][b] + l] = 1;  // one pass per strand
            int arrive = dir == 0 ? 1 : 0;
            int tok = end_token(b, arrive);
            const EndSeat& seat = ix.seat[tok];
            int s = seat.sw, side = seat.side;
            int slot = off[k][b] + l;
            int tokpos = arrive == 0 ? slot : width[b] - 1 - slot;
            int cpos = token_base[s][tok] + tokpos;
            const std::vector<int>& kp = kpos[s][k][side];
            int kq = (int)(std::lower_bound(kp.begin(), kp.end(), cpos) - kp.begin());
            int kw = (int)kp.size();
            int q = side == 0 ? kq : kw - 1 - kq;
            const Chord& ch = chords[s][chord_of[s][k][q]];
            int entry = side == 0 ? ch.p0 : ch.p1;
            int ex = side == 0 ? ch.p1 : ch.p0;
            long long dt = ex - entry;
            std::array<long long, 2> dvec = {dt, dt * (ex + entry + 2 * final_shift)};
            if (entry < ex)
              for (const auto& h : ch.hits) visits.push_back(Visit{h.second, dvec});
            else
              for (auto it = ch.hits.rbegin(); it != ch.hits.rend(); ++it)
                visits.push_back(Visit{it->second, dvec});
            const Strand& out = circle[s][ex];
            b = out.branch;
            dir = out.which == 0 ? 0 : 1;
            l = out.slot - off[k][b];
          } while (b != b0 || dir != d0 || l != l0);
          if (visits.empty()) {
            ++free_orbits;
            continue;
          }
          for (size_t i = 0; i < visits.size(); ++i) {
            const Visit& from = visits[i];
            const Visit& to = visits[(i + 1) % visits.size()];
            int e = n_edges++;
            at[from.crossing].push_back(End{2 * e, from.dir});
            at[to.crossing].push_back(End{2 * e + 1, {-to.dir[0], -to.dir[1]}});
            uf[find(from.crossing)] = find(to.crossing);
          }
        }
  }

  OverlayReport rep;
  rep.crossings = V;
  rep.edges = n_edges;
  if (V == 0) return rep;
  require(n_edges == 2 * V, errc::bad_input, "overlay is not four-valent");

  std::vector<int> ring_next(2 * n_edges, -1);
  for (int v = 0; v < V; ++v) {
    require((int)at[v].size() == 4, errc::bad_input, "overlay crossing valence");
    std::sort(at[v].begin(), at[v].end(),
              [](const End& a, const End& b) { return detail::angular_less(a.dir, b.dir); });
    for (int i = 0; i < 4; ++i) ring_next[at[v][i].dart] = at[v][(i + 1) % 4].dart;
  }
  std::vector<char> traced(2 * n_edges, 0);
  int F = 0;
  for (int d0 = 0; d0 < 2 * n_edges; ++d0) {
    if (traced[d0]) continue;
    ++F;
    int d = d0;
    do {
      traced[d] = 1;
      d = ring_next[d ^ 1];
    } while (d != d0);
  }
  rep.faces = F;
  int chi = V - n_edges + F;
  require(chi % 2 == 0, errc::bad_input, "overlay euler parity");
  rep.derived_genus = (2 - chi) / 2;
  bool one_class = true;
  for (int v = 0; v < V; ++v) one_class = one_class && find(v) == find(0);
  rep.connected = one_class && free_orbits == 0;
  rep.filling = rep.connected && rep.derived_genus == t.genus;
  return rep;
}

struct RecurrenceReport {
  bool recurrent = false;
  std::optional<bool> transversely_recurrent;  // unknown without dual witnesses
  bool large = false;
  bool filling = false;
};

inline RecurrenceReport recurrence_report(const TrainTrack& t,
                                          const std::vector<CurveOnTrack>& duals = {}) {
  TrackReport rep = validate_track(t);
  std::vector<std::vector<int>> vcs = vertex_cycles(t);
  RecurrenceReport out;
  std::vector<long long> total(t.branch_count, 0);
  for (const std::vector<int>& w : vcs)
    for (int b = 0; b < t.branch_count; ++b) total[b] += w[b];
  out.recurrent = !vcs.empty();
  for (long long x : total) out.recurrent = out.recurrent && x > 0;
  out.large = rep.census.derived_genus == t.genus;
  out.filling = overlay_carried(t, vcs).filling;
  if (!duals.empty()) {
    std::vector<char> covered(t.branch_count, 0);
    for (const CurveOnTrack& c : duals) {
      for (int b : c.branch_crossings) {
        require(b >= 0 && b < t.branch_count, errc::embedding_mismatch,
                "dual crossing out of range");
        covered[b] = 1;
      }
      for (int s : c.switch_passes) {
        require(s >= 0 && s < (int)t.switches.size(), errc::embedding_mismatch,
                "dual pass out of range");
        for (int side = 0; side < 2; ++side)
          for (int tok : t.switches[s].side[side]) covered[end_branch(tok)] = 1;
      }
    }
    bool all = true;
    for (char c : covered) all = all && c;
    out.transversely_recurrent = all;
  }
  return out;
}

}  // namespace bicorn
