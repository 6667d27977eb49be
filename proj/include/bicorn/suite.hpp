#pragma once
// The acceptance suite: ten executable criteria covering surgery, pairing,
// the bicorn pipeline, track moves, electrification, and the model actions,
// plus the shared fixture builders they sweep over. Both the standalone
// acceptance binary and the command line `suite` subcommand compile this.
//
// Criteria 7 to 9 compare against regression files under
// <fixtures>/regression/; freeze mode rewrites those files from the current
// run and is meant to be used once, when bootstrapping a checkout.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bicorn/io.hpp"
#include "bicorn/oracles.hpp"
#include "bicorn/trackmoves.hpp"

namespace bicorn::suite {

// ---------------------------------------------------------------- fixtures

inline MetricGraph path_graph(int n, Half len = 2) {
  MetricGraph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1, len);
  return g;
}

inline MetricGraph cycle_graph(int n, Half len = 2) {
  MetricGraph g = path_graph(n, len);
  add_edge(g, n - 1, 0, len);
  return g;
}

inline MetricGraph star_graph(int legs, int leg_len = 2) {
  MetricGraph g;
  g.vertex_count = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int k = 0; k < leg_len; ++k) {
      int v = g.vertex_count++;
      add_edge(g, prev, v);
      prev = v;
    }
  }
  return g;
}

inline MetricGraph complete_graph(int n, Half len = 2) {
  MetricGraph g;
  g.vertex_count = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) add_edge(g, u, v, len);
  return g;
}

inline MetricGraph grid_graph(int rows, int cols) {
  MetricGraph g;
  g.vertex_count = rows * cols;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) add_edge(g, r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) add_edge(g, r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

// two junctions joined by arcs of one, one and two edges
inline MetricGraph theta_graph() {
  MetricGraph g;
  g.vertex_count = 5;
  add_edge(g, 0, 2);
  add_edge(g, 2, 1);
  add_edge(g, 0, 3);
  add_edge(g, 3, 1);
  add_edge(g, 0, 4);
  add_edge(g, 4, 1);
  add_edge(g, 4, 1);  // doubled arc keeps the theta at five vertices
  return g;
}

inline MetricGraph random_tree(int n, uint64_t seed) {
  Rng rng(seed);
  MetricGraph g;
  g.vertex_count = n;
  for (int v = 1; v < n; ++v) add_edge(g, (int)rng.below((uint64_t)v), v, 1 + (Half)rng.below(4));
  return g;
}

inline MetricGraph random_connected(int n, int extra, uint64_t seed) {
  Rng rng(seed);
  MetricGraph g = random_tree(n, rng.next());
  for (int k = 0; k < extra; ++k) {
    int u = (int)rng.below((uint64_t)n), v = (int)rng.below((uint64_t)n);
    if (u != v) add_edge(g, u, v, 1 + (Half)rng.below(6));
  }
  return g;
}

inline std::vector<MetricGraph> delta_fixture_graphs() {
  return {path_graph(5),
          path_graph(4, 1),
          cycle_graph(6),
          cycle_graph(7),
          cycle_graph(8),
          cycle_graph(5, 3),
          star_graph(4, 2),
          complete_graph(5),
          grid_graph(3, 3),
          theta_graph(),
          random_tree(10, 11),
          random_tree(12, 12),
          random_connected(9, 5, 13),
          random_connected(12, 8, 14)};
}

inline std::vector<std::string> delta_fixture_names() {
  return {"path5",  "path4h", "cycle6", "cycle7", "cycle8", "cycle5x3", "star4",
          "k5",     "grid3",  "theta",  "tree10", "tree12", "web9",     "web12"};
}

inline std::vector<MetricGraph> tree_fixture_graphs() {
  return {path_graph(6), path_graph(5, 1), star_graph(5, 2), random_tree(10, 11),
          random_tree(12, 21)};
}

// a few subset families per graph for the electrification sweep
inline std::vector<SubsetFamily> families_for(const MetricGraph& g, uint64_t seed) {
  Rng rng(seed);
  std::vector<SubsetFamily> out;
  SubsetFamily whole;
  whole.member = {{}};
  for (int v = 0; v < g.vertex_count; ++v) whole.member[0].push_back(v);
  out.push_back(whole);
  SubsetFamily halves;
  halves.member = {{}, {}};
  for (int v = 0; v < g.vertex_count; ++v) halves.member[v % 2].push_back(v);
  out.push_back(halves);
  SubsetFamily random2;
  random2.member = {{}, {}};
  for (int i = 0; i < 2; ++i)
    for (int v = 0; v < g.vertex_count; ++v)
      if (rng.below(3) == 0) random2.member[i].push_back(v);
  for (int i = 0; i < 2; ++i)
    if (random2.member[i].empty())
      random2.member[i].push_back((int)rng.below((uint64_t)g.vertex_count));
  out.push_back(random2);
  return out;
}

// One switch, loops l = 0 and r = 1 interleaved: the standard torus track.
inline TrainTrack torus_track() {
  TrainTrack t;
  t.genus = 1;
  t.branch_count = 2;
  t.switches.resize(1);
  t.switches[0].side[0] = {end_token(0, 0), end_token(1, 0)};
  t.switches[0].side[1] = {end_token(0, 1), end_token(1, 1)};
  return t;
}

// Two trivalent switches, large branch e = 0 against b = 1, c = 2.
inline TrainTrack elementary_track() {
  TrainTrack t;
  t.genus = 1;
  t.branch_count = 3;
  t.switches.resize(2);
  t.switches[0].side[0] = {end_token(0, 0)};
  t.switches[0].side[1] = {end_token(1, 0), end_token(2, 0)};
  t.switches[1].side[0] = {end_token(1, 1), end_token(2, 1)};
  t.switches[1].side[1] = {end_token(0, 1)};
  return t;
}

// One switch, four loops side to side on a genus two surface.
inline TrainTrack genus2_loops() {
  TrainTrack t;
  t.genus = 2;
  t.branch_count = 4;
  t.switches.resize(1);
  for (int b = 0; b < 4; ++b) {
    t.switches[0].side[0].push_back(end_token(b, 0));
    t.switches[0].side[1].push_back(end_token(b, 1));
  }
  return t;
}

// Large branch between trivalent switches with the outer ends gathered on a
// four-valent switch, so the central split survives.
inline TrainTrack saddle_track() {
  TrainTrack t;
  t.genus = 1;
  t.branch_count = 5;
  t.switches.resize(3);
  t.switches[0].side[0] = {end_token(0, 0)};
  t.switches[0].side[1] = {end_token(1, 0), end_token(2, 0)};
  t.switches[1].side[0] = {end_token(0, 1)};
  t.switches[1].side[1] = {end_token(4, 0), end_token(3, 0)};
  t.switches[2].side[0] = {end_token(1, 1), end_token(2, 1)};
  t.switches[2].side[1] = {end_token(3, 1), end_token(4, 1)};
  return t;
}

// Trivalent torus track with a shiftable middle branch.
inline TrainTrack spur_track() {
  TrainTrack t;
  t.genus = 1;
  t.branch_count = 3;
  t.switches.resize(2);
  t.switches[0].side[0] = {end_token(0, 0)};
  t.switches[0].side[1] = {end_token(1, 0), end_token(2, 0)};
  t.switches[1].side[0] = {end_token(2, 1)};
  t.switches[1].side[1] = {end_token(0, 1), end_token(1, 1)};
  return t;
}

inline std::vector<TrainTrack> fixture_tracks() {
  return {torus_track(), elementary_track(), genus2_loops(), saddle_track(), spur_track()};
}

inline CurvePair genus2_i4() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4};
  cp.b_cycle = {1, 2, 4, 3};
  cp.sign[1] = 1;
  cp.sign[2] = 1;
  cp.sign[3] = -1;
  cp.sign[4] = -1;
  cp.genus = 2;
  return cp;
}

inline CurvePair genus2_i6() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4, 5, 6};
  cp.b_cycle = {1, 3, 5, 2, 6, 4};
  for (int v = 1; v <= 6; ++v) cp.sign[v] = v % 2 ? 1 : -1;
  cp.genus = 2;
  return cp;
}

// Uniform pair with a = (1..n), b a permutation fixing the first crossing,
// random signs. Genus is read off the face census.
inline CurvePair random_pair(Rng& rng, int n) {
  CurvePair cp;
  for (int v = 1; v <= n; ++v) cp.a_cycle.push_back(v);
  cp.b_cycle = cp.a_cycle;
  for (int i = n - 1; i >= 2; --i) {
    int j = 1 + (int)rng.below((uint64_t)i);
    std::swap(cp.b_cycle[i], cp.b_cycle[j]);
  }
  for (int v = 1; v <= n; ++v) cp.sign[v] = rng.below(2) ? 1 : -1;
  PairIndex ix = index_pair(cp);
  cp.genus = face_census(cp, ix).derived_genus;
  return cp;
}

// All pairs with n crossings up to relabeling: a = (1..n), b starts at 1.
template <class Fn>
inline void sweep_pairs(int n, Fn&& fn) {
  std::vector<int> rest;
  for (int v = 2; v <= n; ++v) rest.push_back(v);
  std::vector<int> b{1};
  do {
    b.resize(1);
    b.insert(b.end(), rest.begin(), rest.end());
    for (int mask = 0; mask < (1 << n); ++mask) {
      CurvePair cp;
      for (int v = 1; v <= n; ++v) cp.a_cycle.push_back(v);
      cp.b_cycle = b;
      for (int v = 1; v <= n; ++v) cp.sign[v] = (mask >> (v - 1) & 1) ? 1 : -1;
      PairIndex ix = index_pair(cp);
      FaceCensus fc = face_census(cp, ix);
      cp.genus = fc.derived_genus;
      fn(cp, fc);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
}

// Free group ball of radius nine, shared by the separation and drift criteria.
inline const FreeTreeBall& small_ball() {
  static FreeTreeBall b = free_tree_ball(9);
  return b;
}

// Radius ten, shared by the coset separation and loxodromy criteria.
inline const FreeTreeBall& big_ball() {
  static FreeTreeBall b = free_tree_ball(10);
  return b;
}

// Intervals along the a axis: convex, pairwise far, projections spread out.
inline SubsetFamily axis_interval_family(const FreeTreeBall& ball) {
  auto interval = [&](int lo, int hi) {
    std::vector<int> mem;
    for (int k = lo; k <= hi; ++k) {
      std::string w = k < 0 ? std::string((size_t)-k, 'A') : std::string((size_t)k, 'a');
      mem.push_back(ball.index.at(w));
    }
    return mem;
  };
  SubsetFamily ys;
  ys.member = {interval(-9, -6), interval(-3, 0), interval(3, 6)};
  ys.name = {"Z0", "Z1", "Z2"};
  return ys;
}

// The cosets through e, ab, abab, ...: an (L, M) separated chain.
inline SubsetFamily zigzag_coset_family(const FreeTreeBall& ball, int count) {
  std::vector<std::string> translates;
  std::string w;
  for (int i = 0; i < count; ++i) {
    translates.push_back(w);
    w += "ab";
  }
  return coset_family(ball, 'a', translates);
}

// ------------------------------------------------------------- scaffolding

constexpr uint64_t kReferenceSeed = 20260816;

struct SuiteConfig {
  uint64_t seed = kReferenceSeed;   // drives the generated fixture sets
  std::string fixtures_dir = "fixtures";
  std::string filter;               // substring match against criterion names
  bool freeze = false;              // rewrite the regression files
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ran = false;
  bool pass = false;
  long long checks = 0;
  std::string detail;
  double seconds = 0;
};

struct SuiteResult {
  std::vector<CriterionResult> rows;
  bool all_pass = true;
};

struct Checker {
  bool ok = true;
  long long checks = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      if (ok) first = what;
      ok = false;
    }
  }
};

inline std::string regression_path(const SuiteConfig& cfg, const std::string& file) {
  return cfg.fixtures_dir + "/regression/" + file;
}

inline void store_frozen(const SuiteConfig& cfg, const std::string& file,
                         const std::string& text) {
  std::filesystem::create_directories(cfg.fixtures_dir + "/regression");
  write_text_file(regression_path(cfg, file), text);
}

inline Json load_frozen(const SuiteConfig& cfg, const std::string& file) {
  return parse_json(read_text_file(regression_path(cfg, file)));
}

inline Json rat_json(const Rat& r) { return Json{{"num", r.num}, {"den", r.den}}; }

inline Rat rat_from_json(const Json& j) {
  return Rat(j.at("num").get<long long>(), j.at("den").get<long long>());
}

// -------------------------------------------------------------- criterion 1

// Monotone surgery: on generated genus two and three pairs whose greedy
// sequence runs through returning arcs, every step is disjoint from a, drops
// the crossing count strictly, and the sequence ends within count steps.
inline void crit_surgery_monotone(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  int accepted = 0;
  long long tried = 0;
  while (accepted < 200 && tried < 400000) {
    ++tried;
    int n = 4 + 2 * (int)rng.below(5);
    CurvePair cp = random_pair(rng, n);
    PairIndex ix = index_pair(cp);
    FaceCensus fc = face_census(cp, ix);
    if (fc.bigons > 0 || fc.derived_genus < 2 || fc.derived_genus > 3) continue;
    SurgerySequence seq;
    try {
      seq = curve_surgery_sequence(cp);
    } catch (const error&) {
      continue;
    }
    bool all_returning = true;
    for (const SurgeryStep& st : seq.steps)
      if (!st.arc.returning) all_returning = false;
    if (!all_returning) continue;
    ++accepted;
    ck.expect(cp.count() <= 12, "fixture exceeds twelve crossings");
    ck.expect(seq.length() <= cp.count(), "sequence longer than the crossing count");
    int prev = cp.count();
    for (size_t k = 0; k < seq.steps.size(); ++k) {
      ck.expect(seq.steps[k].result.disjoint_from_a, "surgered curve still meets a");
      int cur = seq.curves_with_b[k + 1].count();
      ck.expect(cur < prev, "crossing count failed to drop");
      prev = cur;
    }
    ck.expect(seq.curves_with_b.back().count() == 0, "sequence stopped early");
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck.expect(accepted >= 200, "only " + std::to_string(accepted) + " fixtures accepted");
  ck.expect(dt < 60.0, "over the time budget");
  note = std::to_string(accepted) + " pairs from " + std::to_string(tried) + " draws";
}

// -------------------------------------------------------------- criterion 2

// The pairing matcher agrees with the naive all-matchings oracle, and any
// produced pairing is opposite-signed and unlinked on both circles.
inline void crit_pairing_oracle(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  std::vector<CurvePair> set;
  sweep_pairs(4, [&](const CurvePair& cp, const FaceCensus& fc) {
    if (fc.bigons == 0) set.push_back(cp);
  });
  sweep_pairs(6, [&](const CurvePair& cp, const FaceCensus& fc) {
    if (fc.bigons == 0 && set.size() < 160) set.push_back(cp);
  });
  Rng rng(cfg.seed ^ 0xc2);
  for (int n : {8, 10}) {
    int kept = 0;
    long long tries = 0;
    while (kept < 20 && tries < 20000) {
      ++tries;
      CurvePair cp = random_pair(rng, n);
      PairIndex ix = index_pair(cp);
      if (face_census(cp, ix).bigons > 0) continue;
      set.push_back(cp);
      ++kept;
    }
  }
  ck.expect(set.size() >= 100, "fixture set too small");
  for (const CurvePair& cp : set) {
    PairingReport rep = casson_long_pairing(cp);
    long long naive = oracles::naive_pairing_count(cp);
    ck.expect(rep.count == naive, "matcher count disagrees with the oracle");
    ck.expect((rep.count > 0) == rep.pairing.has_value(), "witness does not match the count");
    if (rep.pairing) {
      PairIndex ix = index_pair(cp);
      int n = ix.n();
      const auto& ch = rep.pairing->chords;
      ck.expect((int)ch.size() * 2 == n, "pairing misses labels");
      for (auto& [x, y] : ch)
        ck.expect(ix.sgn[ix.dense.at(x)] != ix.sgn[ix.dense.at(y)],
                  "paired crossings share a sign");
      auto linked = [&](int u1, int v1, int u2, int v2) {
        auto between = [&](int x, int lo, int hi) {
          int span = (hi - lo + n) % n;
          int off = (x - lo + n) % n;
          return off > 0 && off < span;
        };
        return between(u2, u1, v1) != between(v2, u1, v1);
      };
      for (size_t i = 0; i < ch.size(); ++i)
        for (size_t j = i + 1; j < ch.size(); ++j) {
          int x1 = ix.dense.at(ch[i].first), y1 = ix.dense.at(ch[i].second);
          int x2 = ix.dense.at(ch[j].first), y2 = ix.dense.at(ch[j].second);
          ck.expect(!linked(ix.a_pos[x1], ix.a_pos[y1], ix.a_pos[x2], ix.a_pos[y2]),
                    "chords linked along a");
          ck.expect(!linked(ix.b_pos[x1], ix.b_pos[y1], ix.b_pos[x2], ix.b_pos[y2]),
                    "chords linked along b");
        }
    }
  }
  note = std::to_string(set.size()) + " instances";
}

// -------------------------------------------------------------- criterion 3

// Every non-degenerate bicorn stage collapses to a single-switch valid track
// that the bicorn curve is switch-dual to, and consecutive stages nest.
inline void crit_pipeline_duality(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  int nondeg = 0, merges = 0;
  auto drive = [&](const CurvePair& cp, const FaceCensus& fc) {
    if (fc.bigons > 0 || fc.derived_genus < 1) return;
    try {
      validate_curve_pair(cp);
    } catch (const error&) {
      return;
    }
    BicornSequence seq;
    try {
      seq = nested_bicorn_sequence(cp);
    } catch (const error&) {
      return;  // no usable first window
    }
    PipelineRun run = run_pipeline(cp, seq.bicorns);
    if (!run.halted.empty())
      ck.expect(!seq.bicorns[run.attempted - 1].non_degenerate,
                "pipeline halted on a non-degenerate bicorn");
    for (size_t k = 0; k < run.stages.size(); ++k) {
      const PipelineStage& st = run.stages[k];
      if (st.collapsed.track.branch_count < st.pre.pre.data.branch_count) ++merges;
      ck.expect((int)st.collapsed.track.switches.size() == 1, "collapse left extra switches");
      ck.expect(verify_carrying(st.pre.pre.data, st.collapsed.track, st.collapsed.onto_track),
                "pre-track not carried on its collapse");
      if (seq.bicorns[k].non_degenerate) {
        ++nondeg;
        ck.expect(st.dual, "bicorn curve not switch-dual to its track");
      }
    }
    for (size_t k = 0; k < run.nesting.size(); ++k)
      ck.expect(verify_carrying(run.stages[k + 1].collapsed.track,
                                run.stages[k].collapsed.track, run.nesting[k]),
                "nested stage not carried on the previous one");
  };
  for (int n : {4, 6}) sweep_pairs(n, drive);
  Rng rng(cfg.seed ^ 0xc3);
  long long tries = 0;
  while (nondeg < 100 && tries < 40000) {
    ++tries;
    CurvePair cp = random_pair(rng, 8);
    PairIndex ix = index_pair(cp);
    FaceCensus fc = face_census(cp, ix);
    drive(cp, fc);
  }
  ck.expect(nondeg >= 100, "only " + std::to_string(nondeg) + " non-degenerate stages");
  ck.expect(merges >= 1, "no collapse merged a branch");
  note = std::to_string(nondeg) + " stages, " + std::to_string(merges) + " merges";
}

// -------------------------------------------------------------- criterion 4

// Vertex cycles are switch-equal with entries at most two, and splits and
// shifts preserve switch equality of every pushed-forward cycle weight.
inline void crit_cycles_moves(const SuiteConfig&, Checker& ck, std::string& note) {
  int moves = 0, cycles = 0;
  auto check_cycles = [&](const TrainTrack& t) {
    auto vcs = vertex_cycles(t);
    ck.expect(!vcs.empty(), "track has no vertex cycles");
    for (const auto& vc : vcs) {
      ++cycles;
      ck.expect(switch_equal_int(t, vc), "vertex cycle not switch-equal");
      for (int w : vc) ck.expect(w >= 0 && w <= 2, "cycle entry outside 0..2");
    }
    return vcs;
  };
  auto check_move = [&](const TrainTrack& t, const MoveResult& mr) {
    ++moves;
    validate_track(mr.track);
    ck.expect(verify_carrying(mr.track, t, mr.onto_input), "moved track not carried back");
    auto vcs = vertex_cycles(mr.track);
    for (size_t i = 0; i < vcs.size(); ++i) {
      ck.expect(switch_equal_int(mr.track, vcs[i]), "moved cycle not switch-equal");
      std::vector<int> pf = push_forward(mr.track, t, mr.onto_input, vcs[i]);
      ck.expect(switch_equal_int(t, pf), "push-forward broke switch equality");
      for (size_t j = i + 1; j < vcs.size(); ++j) {
        std::vector<int> sum = vcs[i];
        for (size_t b = 0; b < sum.size(); ++b) sum[b] += vcs[j][b];
        std::vector<int> pfs = push_forward(mr.track, t, mr.onto_input, sum);
        ck.expect(switch_equal_int(t, pfs), "push-forward broke a cycle sum");
      }
    }
  };
  // two generations of moves: the fixtures, then everything they split into
  std::function<void(const TrainTrack&, int)> explore = [&](const TrainTrack& t, int depth) {
    check_cycles(t);
    for (int b = 0; b < t.branch_count; ++b) {
      for (SplitChoice c : {SplitChoice::left, SplitChoice::right, SplitChoice::central}) {
        try {
          MoveResult mr = split(t, b, c);
          check_move(t, mr);
          if (depth < 1) explore(mr.track, depth + 1);
        } catch (const error&) {
        }
      }
      try {
        MoveResult mr = shift(t, b);
        check_move(t, mr);
        if (depth < 1) explore(mr.track, depth + 1);
      } catch (const error&) {
      }
    }
  };
  for (const TrainTrack& t : fixture_tracks()) {
    validate_track(t);
    explore(t, 0);
  }
  ck.expect(moves >= 12, "too few applicable moves");
  note = std::to_string(cycles) + " cycles, " + std::to_string(moves) + " moves";
}

// -------------------------------------------------------------- criterion 5

// Electrification contracts distances pointwise, cones sit half a unit from
// their subsets, and coned subsets have electric diameter at most one.
inline void crit_coarse_contraction(const SuiteConfig&, Checker& ck, std::string& note) {
  int swept = 0;
  auto gs = delta_fixture_graphs();
  for (size_t gi = 0; gi < gs.size(); ++gi) {
    const MetricGraph& g = gs[gi];
    for (const SubsetFamily& ys : families_for(g, fnv1a64("elec" + std::to_string(gi)))) {
      ++swept;
      ElectrifiedGraph e = electrify(g, ys);
      for (size_t k = e.graph.edges.size(); k-- > 0;) {
        const GraphEdge& ed = e.graph.edges[k];
        if (ed.u >= e.base_vertices || ed.v >= e.base_vertices)
          ck.expect(ed.len == 1, "cone edge is not half a unit");
      }
      for (int u = 0; u < g.vertex_count; ++u) {
        std::vector<Half> base = dijkstra_row(g, {u});
        std::vector<Half> elec = dijkstra_row(e.graph, {u});
        for (int v = 0; v < g.vertex_count; ++v)
          ck.expect(elec[v] <= base[v], "electrification stretched a distance");
      }
      for (const auto& mem : e.family.member) {
        for (int m : mem) {
          std::vector<Half> row = dijkstra_row(e.graph, {m});
          for (int m2 : mem) ck.expect(row[m2] <= 2, "coned subset too wide");
        }
      }
    }
  }
  note = std::to_string(swept) + " electrifications";
}

// -------------------------------------------------------------- criterion 6

// The exhaustive four-point delta agrees with the Floyd-Warshall oracle on
// every fixture graph, and trees come out at zero.
inline void crit_coarse_delta(const SuiteConfig&, Checker& ck, std::string& note) {
  auto gs = delta_fixture_graphs();
  for (const MetricGraph& g : gs) {
    DeltaReport rep = delta_four_point(g, DeltaMode::exhaustive);
    ck.expect(rep.delta == oracles::delta_brute(g), "delta disagrees with the oracle");
  }
  for (const MetricGraph& g : tree_fixture_graphs()) {
    DeltaReport rep = delta_four_point(g, DeltaMode::exhaustive);
    ck.expect(rep.delta == 0, "tree with nonzero delta");
  }
  note = std::to_string(gs.size()) + " graphs, " +
         std::to_string(tree_fixture_graphs().size()) + " trees";
}

// -------------------------------------------------------------- criterion 7

// Separated families: the axis family's piecewise geodesic stays within the
// frozen quasigeodesic constants, and the coset chain's electric progress per
// segment stays at or above the frozen slope.
inline void crit_coarse_separated(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  const FreeTreeBall& ball9 = small_ball();
  SubsetFamily axis = axis_interval_family(ball9);
  ElectrifiedGraph e9 = electrify(ball9.graph, axis);
  SeparationReport sep9 = separation_report(ball9.graph, axis.member, e9);
  PathRecord axis_path = piecewise_geodesic(ball9.graph, axis.member);

  const FreeTreeBall& ball10 = big_ball();
  SubsetFamily chain = zigzag_coset_family(ball10, 6);
  ElectrifiedGraph e10 = electrify(ball10.graph, chain);
  SeparationReport sep10 = separation_report(ball10.graph, chain.member, e10);
  PathRecord chain_path = piecewise_geodesic(ball10.graph, chain.member);
  std::vector<Half> row = dijkstra_row(e10.graph, {chain_path.vertices.front()});
  Rat slope(row[chain_path.vertices.back()], (long long)chain.member.size() - 1);

  if (cfg.freeze) {
    Json j;
    j["axis_k"] = rat_json(axis_path.k_star);
    j["axis_c"] = rat_json(axis_path.c_star);
    j["axis_well"] = sep9.well_separated;
    j["axis_elec"] = sep9.elec_separated;
    j["chain_slope"] = rat_json(slope);
    j["chain_well"] = sep10.well_separated;
    j["chain_elec"] = sep10.elec_separated;
    store_frozen(cfg, "separated.json", j.dump(2) + "\n");
    note = "froze k=" + axis_path.k_star.str() + " c=" + axis_path.c_star.str() +
           " slope=" + slope.str();
    return;
  }
  Json j = load_frozen(cfg, "separated.json");
  ck.expect(axis_path.k_star <= rat_from_json(j.at("axis_k")), "axis k above the frozen bound");
  ck.expect(axis_path.c_star <= rat_from_json(j.at("axis_c")), "axis c above the frozen bound");
  ck.expect(sep9.well_separated == j.at("axis_well").get<Half>(), "axis separation moved");
  ck.expect(sep9.elec_separated == j.at("axis_elec").get<Half>(), "axis electric gap moved");
  ck.expect(slope >= rat_from_json(j.at("chain_slope")), "chain slope below the frozen bound");
  ck.expect(sep10.well_separated == j.at("chain_well").get<Half>(), "chain separation moved");
  ck.expect(sep10.elec_separated == j.at("chain_elec").get<Half>(), "chain electric gap moved");
  ck.expect(sep10.well_separated >= 2, "chain not well separated");
  note = "k=" + axis_path.k_star.str() + " c=" + axis_path.c_star.str() +
         " slope=" + slope.str();
}

// -------------------------------------------------------------- criterion 8

// Coning every a coset leaves left multiplication by b loxodromic, with at
// least half the frozen tail slope; a finite rotation stays near zero.
inline void crit_coarse_loxodromy(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  const FreeTreeBall& ball = big_ball();
  SubsetFamily ys = all_cosets(ball, 'a');
  ElectrifiedGraph e = electrify(ball.graph, ys);
  GraphAutomorphism f = extend_to_cones(e, mult_by(ball, "b"));
  TranslationReport tr =
      translation_length(e.graph, f, ball.index.at(""), ball.radius, Rat(1, 2));

  MetricGraph c6 = cycle_graph(6);
  GraphAutomorphism rot;
  for (int v = 0; v < 6; ++v) rot.image.push_back((v + 1) % 6);
  TranslationReport rr = translation_length(c6, rot, 0, 6);

  if (cfg.freeze) {
    Json j;
    j["slope"] = rat_json(tr.tail_slope);
    j["rotation"] = rat_json(rr.tail_slope);
    store_frozen(cfg, "loxodromy.json", j.dump(2) + "\n");
    note = "froze slope=" + tr.tail_slope.str();
    return;
  }
  Json j = load_frozen(cfg, "loxodromy.json");
  Rat frozen = rat_from_json(j.at("slope"));
  ck.expect(tr.tail_slope * Rat(2) >= frozen, "tail slope under half the frozen value");
  ck.expect(tr.tail_slope > Rat(0), "tail slope not positive");
  ck.expect(tr.loxodromic, "coset action lost loxodromy");
  ck.expect(rr.tail_slope <= Rat(1, 20), "rotation slope above one twentieth");
  ck.expect(rr.tail_slope == rat_from_json(j.at("rotation")), "rotation slope moved");
  note = "slope=" + tr.tail_slope.str() + " rotation=" + rr.tail_slope.str();
}

// -------------------------------------------------------------- criterion 9

// The pinned-seed drift run reproduces the frozen curve byte for byte and
// keeps the frozen fraction of trials at linear displacement.
inline WalkSpec reference_walk(const FreeTreeBall& ball) {
  WalkSpec spec;
  for (const char* w : {"a", "A", "b", "B"}) spec.gens.emplace_back(mult_by(ball, w), 1);
  spec.length = 8;
  spec.trials = 200;
  spec.seed = kReferenceSeed;
  return spec;
}

inline void crit_models_drift(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  const FreeTreeBall& ball = small_ball();
  WalkSpec spec = reference_walk(ball);
  DriftReport rep = estimate_drift(ball.graph, spec, ball.index.at(""), Rat(1, 4));
  std::string csv = csv_drift(rep);
  if (cfg.freeze) {
    store_frozen(cfg, "drift.csv", csv);
    Json j;
    j["hits"] = rep.hits;
    j["trials"] = rep.trials;
    store_frozen(cfg, "drift.json", j.dump(2) + "\n");
    note = "froze " + std::to_string(rep.hits) + "/" + std::to_string(rep.trials) + " hits";
    return;
  }
  ck.expect(csv == read_text_file(regression_path(cfg, "drift.csv")),
            "drift curve bytes moved");
  Json j = load_frozen(cfg, "drift.json");
  ck.expect(rep.trials == j.at("trials").get<int>(), "trial count moved");
  ck.expect(rep.hits >= j.at("hits").get<int>(), "too few trials at linear displacement");
  ck.expect(rep.censored == 0, "walk left the ball");
  note = std::to_string(rep.hits) + "/" + std::to_string(rep.trials) + " hits";
}

// ------------------------------------------------------------- criterion 10

// Everything the toolkit emits is a pure function of its inputs: computing
// the whole artifact bundle twice gives identical bytes.
inline std::map<std::string, std::string> artifact_bundle(const SuiteConfig& cfg) {
  std::map<std::string, std::string> out;
  std::string digest = digest64("suite seed=" + std::to_string(cfg.seed));
  std::string head = comment_header(cfg.seed, digest);

  std::vector<std::pair<std::string, DeltaReport>> rows;
  auto gs = delta_fixture_graphs();
  auto names = delta_fixture_names();
  for (size_t i = 0; i < gs.size(); ++i)
    rows.emplace_back(names[i], delta_four_point(gs[i], DeltaMode::exhaustive));
  out["delta.csv"] = head + csv_delta(rows);

  const FreeTreeBall& ball9 = small_ball();
  SubsetFamily axis = axis_interval_family(ball9);
  ElectrifiedGraph e9 = electrify(ball9.graph, axis);
  out["separation.csv"] =
      head + csv_separation("axis", separation_report(ball9.graph, axis.member, e9));
  DriftReport drift = estimate_drift(ball9.graph, reference_walk(ball9),
                                     ball9.index.at(""), Rat(1, 4));
  out["drift.csv"] = head + csv_drift(drift);

  const FreeTreeBall& ball10 = big_ball();
  SubsetFamily cosets = all_cosets(ball10, 'a');
  ElectrifiedGraph e10 = electrify(ball10.graph, cosets);
  GraphAutomorphism f = extend_to_cones(e10, mult_by(ball10, "b"));
  out["translation.csv"] =
      head +
      csv_translation(translation_length(e10.graph, f, ball10.index.at(""), ball10.radius));

  CurvePair cp = genus2_i6();
  BicornSequence seq = nested_bicorn_sequence(cp);
  Json pj;
  pj["meta"] = meta_json(cfg.seed, digest);
  pj["pipeline"] = pipeline_to_json(run_pipeline(cp, seq.bicorns));
  out["pipeline.json"] = pj.dump(2) + "\n";

  Json doc;
  doc["meta"] = meta_json(cfg.seed, digest);
  doc["pair"] = pair_to_json(cp);
  out["pair.json"] = doc.dump(2) + "\n";
  out["track.json"] = track_to_json(saddle_track()).dump(2) + "\n";
  out["theta.dot"] = graph_to_dot(theta_graph());
  out["pair.dot"] = pair_to_dot(genus2_i4());
  return out;
}

inline void crit_suite_deterministic(const SuiteConfig& cfg, Checker& ck, std::string& note) {
  auto one = artifact_bundle(cfg);
  auto two = artifact_bundle(cfg);
  ck.expect(one.size() >= 8, "bundle came up short");
  ck.expect(one.size() == two.size(), "bundle sizes differ between runs");
  for (const auto& [name, bytes] : one) {
    auto it = two.find(name);
    ck.expect(it != two.end(), "second run lost " + name);
    if (it != two.end()) ck.expect(it->second == bytes, name + " bytes differ between runs");
  }
  note = std::to_string(one.size()) + " artifacts";
}

// ----------------------------------------------------------------- driver

using CriterionFn = void (*)(const SuiteConfig&, Checker&, std::string&);

struct CriterionSpec {
  int id;
  const char* name;
  CriterionFn fn;
};

inline const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> table = {
      {1, "surgery-monotone", crit_surgery_monotone},
      {2, "pairing-oracle", crit_pairing_oracle},
      {3, "pipeline-duality", crit_pipeline_duality},
      {4, "cycles-moves", crit_cycles_moves},
      {5, "coarse-contraction", crit_coarse_contraction},
      {6, "coarse-delta", crit_coarse_delta},
      {7, "coarse-separated", crit_coarse_separated},
      {8, "coarse-loxodromy", crit_coarse_loxodromy},
      {9, "models-drift", crit_models_drift},
      {10, "suite-deterministic", crit_suite_deterministic},
  };
  return table;
}

inline SuiteResult run_acceptance(const SuiteConfig& cfg) {
  SuiteResult res;
  for (const CriterionSpec& spec : criteria()) {
    CriterionResult row;
    row.id = spec.id;
    row.name = spec.name;
    if (!cfg.filter.empty() && std::string(spec.name).find(cfg.filter) == std::string::npos) {
      row.detail = "filtered out";
      res.rows.push_back(row);
      continue;
    }
    row.ran = true;
    Checker ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
      spec.fn(cfg, ck, row.detail);
      row.pass = ck.ok;
      if (!ck.ok) row.detail = ck.first;
    } catch (const error& e) {
      row.pass = false;
      row.detail = std::string(errc_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      row.pass = false;
      row.detail = e.what();
    }
    row.checks = ck.checks;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!row.pass) res.all_pass = false;
    res.rows.push_back(row);
  }
  return res;
}

// pass/fail lines for the terminal; the timing stays out of the json summary
inline std::string suite_lines(const SuiteResult& res) {
  std::string out;
  for (const CriterionResult& row : res.rows) {
    char buf[160];
    if (!row.ran) {
      std::snprintf(buf, sizeof buf, "criterion %2d SKIP %-20s\n", row.id, row.name.c_str());
    } else {
      std::snprintf(buf, sizeof buf, "criterion %2d %s %-20s %7.2fs  %s\n", row.id,
                    row.pass ? "PASS" : "FAIL", row.name.c_str(), row.seconds,
                    row.detail.c_str());
    }
    out += buf;
  }
  return out;
}

inline Json suite_summary(const SuiteConfig& cfg, const SuiteResult& res) {
  Json rows = Json::array();
  for (const CriterionResult& row : res.rows) {
    Json r;
    r["id"] = row.id;
    r["name"] = row.name;
    r["ran"] = row.ran;
    r["pass"] = row.pass;
    r["checks"] = row.checks;
    r["detail"] = row.detail;
    rows.push_back(r);
  }
  Json j;
  j["version"] = kVersion;
  j["seed"] = cfg.seed;
  j["criteria"] = rows;
  j["all_pass"] = res.all_pass;
  return j;
}

}  // namespace bicorn::suite
