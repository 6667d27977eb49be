#pragma once

// From a bicorn to a one-switch train track: discard a outside the bicorn's
// a-arc, collapse the arc to a point, smooth the crossings along it, then
// collapse the bigons left between parallel b-segments. The collapsed track
// carries every later track of a nested sequence, and the bicorn itself
// rides just off the track, crossing it once at the switch.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bicorn/bicorns.hpp"
#include "bicorn/traintrack.hpp"

namespace bicorn {

struct BicornPreTrack {
  PreTrack pre;
  std::vector<int> arc;                    // the collapsed a-arc, in order along a
  std::vector<int> cuts;                   // the same labels in order along b
  std::vector<std::vector<int>> interior;  // per branch: crossings strictly inside
};

// Branch j runs from cuts[j] forward along b to the next cut. Side 0 of the
// switch holds the ends leaving the left of the arc, in descending arc
// position; side 1 the right-leaving ends, ascending. Read in that order the
// two sides are the counterclockwise rotation around the collapsed point.
inline BicornPreTrack pretrack_from_bicorn(const CurvePair& cp, const std::vector<int>& a_arc) {
  require(!a_arc.empty(), errc::empty_arc, "bicorn a-arc has no crossings");
  PairIndex ix = index_pair(cp);
  int n = ix.n();
  int m = (int)a_arc.size();
  std::map<int, int> apos;
  for (int k = 0; k < m; ++k) {
    require(ix.dense.count(a_arc[k]) > 0, errc::bad_input,
            "a-arc label " + std::to_string(a_arc[k]) + " is not a crossing");
    require(apos.emplace(a_arc[k], k).second, errc::bad_input,
            "a-arc repeats crossing " + std::to_string(a_arc[k]));
  }
  for (int k = 0; k + 1 < m; ++k) {
    int d = ix.dense.at(a_arc[k]);
    int nxt = ix.a_order[cyc_next(ix.a_pos[d], n)];
    require(ix.labels[nxt] == a_arc[k + 1], errc::bad_input, "a-arc is not contiguous along a");
  }

  BicornPreTrack out;
  out.arc = a_arc;
  for (int p = 0; p < n; ++p) {
    int lab = ix.labels[ix.b_order[p]];
    if (apos.count(lab)) out.cuts.push_back(lab);
  }
  std::map<int, int> cpos;
  for (int j = 0; j < m; ++j) cpos[out.cuts[j]] = j;
  out.interior.resize(m);
  for (int j = 0; j < m; ++j) {
    int p = ix.b_pos[ix.dense.at(out.cuts[j])];
    for (int q = cyc_next(p, n);; q = cyc_next(q, n)) {
      int lab = ix.labels[ix.b_order[q]];
      if (apos.count(lab)) break;
      out.interior[j].push_back(lab);
    }
  }

  TrainTrack tt;
  tt.genus = cp.genus;
  tt.branch_count = m;
  tt.switches.resize(1);
  // the out dart starts branch cpos[lab], the in dart ends the one before
  auto token_at = [&](int lab, bool outgoing) {
    int j = cpos.at(lab);
    return outgoing ? end_token(j, 0) : end_token((j - 1 + m) % m, 1);
  };
  auto out_is_left = [&](int lab) {
    int d = ix.dense.at(lab);
    return side_of_b_dart(ix, dart_id(d, dart_b_out)) == ArcSide::left;
  };
  for (int k = m - 1; k >= 0; --k)
    tt.switches[0].side[0].push_back(token_at(a_arc[k], out_is_left(a_arc[k])));
  for (int k = 0; k < m; ++k)
    tt.switches[0].side[1].push_back(token_at(a_arc[k], !out_is_left(a_arc[k])));
  out.pre = PreTrack{std::move(tt), true};
  return out;
}

struct CollapseResult {
  TrainTrack track;
  RouteMap onto_track;        // carries the pre-track on its collapse
  std::vector<int> rep;       // pre branch -> track branch
  std::vector<char> flip;     // pre end 0 rides rep end flip
  std::vector<int> survivor;  // track branch -> the pre branch keeping its seats
};

// Merge parallel branches while any two-cusp bigon face remains, first face
// in trace order first; the smaller branch id keeps its seats. The merges
// are a carrying of the pre-track on the result. Anything the final
// validation rejects signals a degenerate bicorn.
inline CollapseResult bigon_collapse(const PreTrack& p) {
  require(p.single_switch && p.data.switches.size() == 1, errc::bad_input,
          "collapse expects a one-switch pre-track");
  int m0 = p.data.branch_count;
  TrainTrack cur = p.data;
  std::vector<int> rep(m0);
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<char> flip(m0, 0);
  std::vector<int> owner(m0);
  std::iota(owner.begin(), owner.end(), 0);
  for (;;) {
    TrackIndex ix = build_track_index(cur);
    TrackFaceCensus fc = track_face_census(cur, ix);
    int d1 = -1, d2 = -1;
    for (const TrackFace& f : fc.faces)
      if (f.degree() == 2 && f.cusps == 2) {
        d1 = f.darts[0];
        d2 = f.darts[1];
        break;
      }
    if (d1 < 0) break;
    int b1 = tdart_branch(d1), b2 = tdart_branch(d2);
    require(b1 != b2, errc::collapse_failed,
            "branch " + std::to_string(owner[b1]) + " bounds a bigon with itself");
    int keep = std::min(b1, b2), drop = std::max(b1, b2);
    // the face runs up one strand and down the other, so equal trace
    // directions mean the branches are antialigned
    char rel = tdart_dir(d1) == tdart_dir(d2) ? 1 : 0;
    std::vector<int> nid(cur.branch_count, -1);
    int nb = 0;
    for (int b = 0; b < cur.branch_count; ++b)
      if (b != drop) nid[b] = nb++;
    TrainTrack nxt;
    nxt.genus = cur.genus;
    nxt.branch_count = nb;
    nxt.switches.resize(1);
    for (int s = 0; s < 2; ++s)
      for (int tok : cur.switches[0].side[s]) {
        int b = end_branch(tok);
        if (b == drop) continue;
        nxt.switches[0].side[s].push_back(end_token(nid[b], end_which(tok)));
      }
    std::vector<int> owner2(nb);
    for (int b = 0; b < cur.branch_count; ++b)
      if (b != drop) owner2[nid[b]] = owner[b];
    for (int i = 0; i < m0; ++i) {
      if (rep[i] == drop) {
        rep[i] = keep;
        flip[i] = flip[i] ^ rel;
      }
      rep[i] = nid[rep[i]];
    }
    cur = std::move(nxt);
    owner = std::move(owner2);
  }
  try {
    validate_track(cur);
  } catch (const error& e) {
    fail(errc::collapse_failed, std::string("collapsed track is invalid: ") + e.what());
  }
  CollapseResult out;
  out.onto_track.switch_image = {0};
  out.onto_track.branch_route.resize(m0);
  for (int i = 0; i < m0; ++i)
    out.onto_track.branch_route[i] = {branch_dart(rep[i], flip[i] ? 1 : 0)};
  out.track = std::move(cur);
  out.rep = std::move(rep);
  out.flip = std::move(flip);
  out.survivor = std::move(owner);
  return out;
}

// The bicorn pushed off its own track: the closing b-arc leaves b_start and
// runs forward along b to the other arc endpoint, so it is a single
// pre-track branch; the curve shadows its merge image and closes with one
// transverse pass through the switch, along the collapsed arc.
inline CurveOnTrack bicorn_curve_on_track(const BicornPreTrack& p, const CollapseResult& c,
                                          int b_start) {
  int m = (int)p.cuts.size();
  require(b_start == p.arc.front() || b_start == p.arc.back(), errc::embedding_mismatch,
          "closing arc must leave an endpoint of the collapsed arc");
  int j = -1;
  for (int k = 0; k < m; ++k)
    if (p.cuts[k] == b_start) j = k;
  int other = b_start == p.arc.front() ? p.arc.back() : p.arc.front();
  require(p.cuts[(j + 1) % m] == other, errc::embedding_mismatch,
          "closing b-arc crosses the collapsed arc");
  CurveOnTrack out;
  out.switch_passes = {0};
  out.parallel_route = {branch_dart(c.rep[j], c.flip[j] ? 1 : 0)};
  return out;
}

struct PipelineStage {
  BicornPreTrack pre;
  CollapseResult collapsed;
  CurveOnTrack curve;
  bool dual = false;
};

inline PipelineStage pipeline_stage(const CurvePair& cp, const Bicorn& bc) {
  PipelineStage st;
  st.pre = pretrack_from_bicorn(cp, bc.a_arc);
  st.collapsed = bigon_collapse(st.pre.pre);
  st.curve = bicorn_curve_on_track(st.pre, st.collapsed, bc.b_arc.front());
  st.dual = is_switch_dual(st.curve, st.collapsed.track);
  return st;
}

// The natural carrying of a finer stage on a coarser one: a fine branch is a
// run of coarse b-segments, because the fine cuts are a subset of the coarse
// cuts; each segment then rides its merge image. Routes follow the seat
// holder of each fine branch, which never flipped.
inline RouteMap nested_route_map(const BicornPreTrack& fine, const CollapseResult& fine_col,
                                 const BicornPreTrack& coarse, const CollapseResult& coarse_col) {
  int mc = (int)coarse.cuts.size();
  std::map<int, int> cidx;
  for (int j = 0; j < mc; ++j) cidx[coarse.cuts[j]] = j;
  RouteMap rm;
  rm.switch_image = {0};
  int nb = fine_col.track.branch_count;
  rm.branch_route.resize(nb);
  for (int B = 0; B < nb; ++B) {
    int r = fine_col.survivor[B];
    int v0 = fine.cuts[r];
    int v1 = fine.cuts[(r + 1) % (int)fine.cuts.size()];
    require(cidx.count(v0) > 0 && cidx.count(v1) > 0, errc::bad_input,
            "fine cuts are not nested in the coarse cuts");
    int j = cidx.at(v0);
    int steps = 0;
    do {
      require(++steps <= mc, errc::bad_input, "fine branch does not close over the coarse cuts");
      rm.branch_route[B].push_back(
          branch_dart(coarse_col.rep[j], coarse_col.flip[j] ? 1 : 0));
      j = (j + 1) % mc;
    } while (coarse.cuts[j] != v1);
  }
  return rm;
}

inline RouteMap nested_route_map(const PipelineStage& fine, const PipelineStage& coarse) {
  return nested_route_map(fine.pre, fine.collapsed, coarse.pre, coarse.collapsed);
}

struct PipelineRun {
  std::vector<PipelineStage> stages;
  std::vector<RouteMap> nesting;  // stage k+1 carried on stage k
  int attempted = 0;
  std::string halted;  // first stage failure, empty when all collapsed
};

inline PipelineRun run_pipeline(const CurvePair& cp, const std::vector<Bicorn>& bicorns) {
  PipelineRun run;
  for (const Bicorn& bc : bicorns) {
    ++run.attempted;
    try {
      PipelineStage st = pipeline_stage(cp, bc);
      if (!run.stages.empty()) run.nesting.push_back(nested_route_map(st, run.stages.back()));
      run.stages.push_back(std::move(st));
    } catch (const error& e) {
      run.halted = e.what();
      break;
    }
  }
  return run;
}

}  // namespace bicorn
