#pragma once
// Finite model instances: Farey balls with the integral matrix action, free
// group tree balls with coset families, and random walk drift estimation.
// Everything is truncated to a ball with explicit censoring, never wrapped.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bicorn/coarse.hpp"
#include "bicorn/metricgraph.hpp"

namespace bicorn {

// reduced slope; q = 0 only for the point at infinity (1, 0)
struct Slope {
  long long p = 0;
  long long q = 1;
};

inline bool slope_less(const Slope& a, const Slope& b) {
  if (a.q == 0 || b.q == 0) return a.q == 0 && b.q != 0;  // infinity first
  return (__int128)a.p * b.q < (__int128)b.p * a.q;
}

inline std::string slope_name(const Slope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

struct FareyBall {
  MetricGraph graph;
  std::vector<Slope> slope;
  std::map<std::pair<long long, long long>, int> index;
  long long bound = 0;
};

inline FareyBall farey_ball(long long bound) {
  require(bound >= 1, errc::bound_too_small, "need bound >= 1");
  FareyBall ball;
  ball.bound = bound;
  ball.slope.push_back({1, 0});
  for (long long q = 1; q <= bound; ++q)
    for (long long p = -bound; p <= bound; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) ball.slope.push_back({p, q});
  std::sort(ball.slope.begin(), ball.slope.end(), slope_less);
  ball.graph.vertex_count = (int)ball.slope.size();
  for (int v = 0; v < ball.graph.vertex_count; ++v) {
    ball.index[{ball.slope[v].p, ball.slope[v].q}] = v;
    ball.graph.label.push_back(slope_name(ball.slope[v]));
  }
  for (int u = 0; u < ball.graph.vertex_count; ++u)
    for (int v = u + 1; v < ball.graph.vertex_count; ++v) {
      __int128 det = (__int128)ball.slope[u].p * ball.slope[v].q -
                     (__int128)ball.slope[v].p * ball.slope[u].q;
      if (det == 1 || det == -1) add_edge(ball.graph, u, v);
    }
  return ball;
}

// the matrix [[a, b], [c, d]] acting by p/q -> (a p + b q)/(c p + d q),
// undefined where the image leaves the ball
inline GraphAutomorphism mat_action(const FareyBall& ball, const std::array<long long, 4>& m) {
  long long det = m[0] * m[3] - m[1] * m[2];
  require(det == 1 || det == -1, errc::bad_input, "matrix must be unimodular");
  GraphAutomorphism f;
  f.partial = true;
  for (const Slope& s : ball.slope) {
    long long p = m[0] * s.p + m[1] * s.q;
    long long q = m[2] * s.p + m[3] * s.q;
    if (q < 0 || (q == 0 && p < 0)) {
      p = -p;
      q = -q;
    }
    auto it = ball.index.find({p, q});
    f.image.push_back(it == ball.index.end() ? -1 : it->second);
  }
  return f;
}

// reduced words in a, b with inverses written A, B
struct FreeTreeBall {
  MetricGraph graph;
  std::vector<std::string> word;
  std::map<std::string, int> index;
  int radius = 0;
};

namespace detail {

inline char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

inline std::string reduce_word(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline FreeTreeBall free_tree_ball(int radius) {
  require(radius >= 2, errc::bound_too_small, "need radius >= 2");
  FreeTreeBall ball;
  ball.radius = radius;
  const std::string letters = "aAbB";
  ball.word.push_back("");
  ball.index[""] = 0;
  for (size_t head = 0; head < ball.word.size(); ++head) {
    std::string w = ball.word[head];
    if ((int)w.size() == radius) continue;
    for (char c : letters) {
      if (!w.empty() && w.back() == detail::inverse_letter(c)) continue;
      std::string next = w + c;
      int id = (int)ball.word.size();
      ball.word.push_back(next);
      ball.index[next] = id;
      add_edge(ball.graph, (int)head, id);
    }
  }
  ball.graph.vertex_count = (int)ball.word.size();
  ball.graph.label = ball.word;
  ball.graph.label[0] = "e";
  return ball;
}

namespace detail {

// the coset representative: the word with its trailing run of g or G stripped
inline std::string coset_rep(const std::string& w, char g) {
  char gi = inverse_letter(g);
  size_t end = w.size();
  while (end > 0 && (w[end - 1] == g || w[end - 1] == gi)) --end;
  return w.substr(0, end);
}

}  // namespace detail

// every <g>-coset meeting the ball, grouped by stripped representative
inline SubsetFamily all_cosets(const FreeTreeBall& ball, char g) {
  std::map<std::string, std::vector<int>> bucket;
  for (int v = 0; v < ball.graph.vertex_count; ++v)
    bucket[detail::coset_rep(ball.word[v], g)].push_back(v);
  SubsetFamily ys;
  for (auto& [rep, mem] : bucket) {
    ys.name.push_back((rep.empty() ? "e" : rep) + "<" + g + ">");
    ys.member.push_back(mem);
  }
  return ys;
}

// the <g>-axis translated by each listed word
inline SubsetFamily coset_family(const FreeTreeBall& ball, char g,
                                 const std::vector<std::string>& translates) {
  SubsetFamily ys;
  for (const std::string& t : translates) {
    std::string rep = detail::coset_rep(detail::reduce_word(t), g);
    std::vector<int> mem;
    for (int v = 0; v < ball.graph.vertex_count; ++v)
      if (detail::coset_rep(ball.word[v], g) == rep) mem.push_back(v);
    require(!mem.empty(), errc::empty_subset, "translate " + t + " misses the ball");
    ys.name.push_back((rep.empty() ? "e" : rep) + "<" + g + ">");
    ys.member.push_back(mem);
  }
  return ys;
}

// left multiplication by a reduced word, undefined where the ball is left
inline GraphAutomorphism mult_by(const FreeTreeBall& ball, const std::string& w) {
  std::string g = detail::reduce_word(w);
  GraphAutomorphism f;
  f.partial = true;
  for (int v = 0; v < ball.graph.vertex_count; ++v) {
    std::string img = detail::reduce_word(g + ball.word[v]);
    auto it = ball.index.find(img);
    f.image.push_back(it == ball.index.end() ? -1 : it->second);
  }
  return f;
}

// extend a base automorphism over the cone vertices, cone to cone where the
// defined part of a subset lands inside another subset
inline GraphAutomorphism extend_to_cones(const ElectrifiedGraph& e, const GraphAutomorphism& base) {
  GraphAutomorphism f = base;
  f.partial = true;
  f.image.resize(e.graph.vertex_count, -1);
  std::vector<int> owner(e.graph.vertex_count, -1);
  for (int i = 0; i < (int)e.family.member.size(); ++i)
    for (int v : e.family.member[i]) owner[v] = i;
  for (int i = 0; i < (int)e.family.member.size(); ++i) {
    int target = -1;
    bool ok = true;
    for (int v : e.family.member[i]) {
      int w = v < (int)base.image.size() ? base.image[v] : -1;
      if (w == -1) continue;
      int j = owner[w];
      ok = ok && j >= 0 && (target == -1 || target == j);
      if (target == -1) target = j;
    }
    if (ok && target >= 0) f.image[e.cone[i]] = e.cone[target];
  }
  return f;
}

struct WalkSpec {
  std::vector<std::pair<GraphAutomorphism, int>> gens;  // generator, weight
  int length = 1;
  int trials = 1;
  uint64_t seed = 0;
};

struct DriftReport {
  int length = 0;
  int trials = 0;
  std::vector<Rat> mean;       // mean d(x0, w_k x0) / k over surviving trials
  std::vector<int> survivors;  // per step
  int censored = 0;
  Rat threshold{0, 1};
  int hits = 0;  // surviving trials with final displacement >= threshold * length
};

inline DriftReport estimate_drift(const MetricGraph& g, const WalkSpec& spec, int x0,
                                  const Rat& threshold = Rat(0)) {
  require(!spec.gens.empty(), errc::bad_input, "no generators");
  require(spec.length >= 1 && spec.trials >= 1, errc::bad_input, "need positive length and trials");
  require(x0 >= 0 && x0 < g.vertex_count, errc::bad_input, "basepoint out of range");
  long long total = 0;
  for (const auto& [f, w] : spec.gens) {
    require(w > 0, errc::bad_input, "weights must be positive");
    validate_automorphism(g, f);
    total += w;
  }
  std::vector<Half> d0 = dijkstra_row(g, {x0});
  DriftReport rep;
  rep.length = spec.length;
  rep.trials = spec.trials;
  rep.threshold = threshold;
  std::vector<Half> sum(spec.length, 0);
  rep.survivors.assign(spec.length, 0);
  for (int t = 0; t < spec.trials; ++t) {
    Rng rng = Rng(spec.seed).split((uint64_t)t);
    int x = x0;
    for (int k = 0; k < spec.length; ++k) {
      long long r = (long long)rng.below((uint64_t)total);
      size_t pick = 0;
      while (r >= spec.gens[pick].second) r -= spec.gens[pick++].second;
      x = spec.gens[pick].first.image[x];
      if (x == -1) {
        ++rep.censored;
        break;
      }
      require(d0[x] >= 0, errc::disconnected, "walk crosses components");
      sum[k] += d0[x];
      ++rep.survivors[k];
      if (k + 1 == spec.length && (__int128)d0[x] * threshold.den >=
                                      (__int128)2 * threshold.num * spec.length)
        ++rep.hits;
    }
  }
  require(rep.survivors[spec.length - 1] > 0, errc::all_trials_censored,
          "no trial survived to the full length");
  for (int k = 0; k < spec.length; ++k)
    rep.mean.push_back(rep.survivors[k] ? Rat(sum[k], 2LL * rep.survivors[k] * (k + 1)) : Rat(0));
  return rep;
}

}  // namespace bicorn
