#pragma once
// Electrification of metric graphs along subset families, with the coarse
// geometry diagnostics run on top of it: four point hyperbolicity,
// quasiconvexity, nearest point projections, separated families, piecewise
// geodesics and their quasigeodesic constants, translation lengths, and the
// cut off sum. Everything is exact: distances in Half, products in Quarter,
// slopes and quasigeodesic constants as Rat.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicorn/metricgraph.hpp"

namespace bicorn {

struct SubsetFamily {
  std::vector<std::vector<int>> member;
  std::vector<std::string> name;  // optional; defaults Y0, Y1, ...
  std::optional<Half> declared_q;
};

inline std::string subset_name(const SubsetFamily& ys, int i) {
  if (i < (int)ys.name.size() && !ys.name[i].empty()) return ys.name[i];
  return "Y" + std::to_string(i);
}

// Base vertices keep their ids; cone i sits at base_vertices + i, joined to
// each member of subset i by an edge of length one half.
struct ElectrifiedGraph {
  MetricGraph graph;
  int base_vertices = 0;
  std::vector<int> cone;
  SubsetFamily family;
};

inline int project(const ElectrifiedGraph&, int v) { return v; }

inline ElectrifiedGraph electrify(const MetricGraph& x, const SubsetFamily& ys) {
  validate_graph(x);
  ElectrifiedGraph e;
  e.graph = x;
  e.base_vertices = x.vertex_count;
  e.family = ys;
  if (e.graph.label.empty() && !ys.member.empty()) {
    e.graph.label.resize(x.vertex_count);
    for (int v = 0; v < x.vertex_count; ++v) e.graph.label[v] = "v" + std::to_string(v);
  }
  for (int i = 0; i < (int)ys.member.size(); ++i) {
    require(!ys.member[i].empty(), errc::empty_subset, subset_name(ys, i) + " is empty");
    std::vector<int> mem = ys.member[i];
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    require(mem.front() >= 0 && mem.back() < x.vertex_count, errc::bad_input,
            subset_name(ys, i) + " has a vertex out of range");
    int c = e.graph.vertex_count++;
    e.cone.push_back(c);
    e.graph.label.push_back("cone:" + subset_name(ys, i));
    e.family.member[i] = mem;
    for (int v : mem) add_edge(e.graph, v, c, 1);
  }
  return e;
}

inline Quarter gromov_product(const MetricGraph& g, int p, int x, int y) {
  std::vector<Half> dp = dijkstra_row(g, {p});
  require(dp[x] >= 0 && dp[y] >= 0, errc::disconnected, "Gromov product across components");
  return dp[x] + dp[y] - distance(g, x, y);
}

enum class DeltaMode { exhaustive, sampled };

struct DeltaReport {
  Quarter delta = 0;
  long long quadruples = 0;
  std::array<int, 4> witness{{-1, -1, -1, -1}};
};

namespace detail {

// half of the gap between the two largest of the three pairing sums
inline Quarter four_point_defect(Half ab_cd, Half ac_bd, Half ad_bc) {
  std::array<Half, 3> s = {ab_cd, ac_bd, ad_bc};
  std::sort(s.begin(), s.end());
  return s[2] - s[1];
}

}  // namespace detail

inline DeltaReport delta_four_point(const MetricGraph& g, DeltaMode mode, long long budget = 0,
                                    uint64_t seed = 0) {
  int n = g.vertex_count;
  std::vector<std::vector<Half>> row(n);
  auto dist = [&](int u, int v) {
    if (row[u].empty()) row[u] = dijkstra_row(g, {u});
    require(row[u][v] >= 0, errc::disconnected, "delta across components");
    return row[u][v];
  };
  DeltaReport rep;
  auto consider = [&](int a, int b, int c, int d) {
    Quarter q = detail::four_point_defect(dist(a, b) + dist(c, d), dist(a, c) + dist(b, d),
                                          dist(a, d) + dist(b, c));
    ++rep.quadruples;
    if (q > rep.delta || rep.witness[0] < 0) {
      rep.delta = q;
      rep.witness = {a, b, c, d};
    }
  };
  if (mode == DeltaMode::exhaustive) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) consider(a, b, c, d);
  } else {
    require(budget > 0, errc::sample_budget_zero, "sampled mode needs a positive budget");
    require(n >= 4, errc::bad_input, "need four vertices to sample a quadruple");
    Rng rng(seed);
    for (long long t = 0; t < budget; ++t) {
      std::array<int, 4> q;
      for (int k = 0; k < 4;) {
        int v = (int)rng.below((uint64_t)n);
        bool dup = false;
        for (int j = 0; j < k; ++j) dup = dup || q[j] == v;
        if (!dup) q[k++] = v;
      }
      consider(q[0], q[1], q[2], q[3]);
    }
  }
  return rep;
}

inline std::vector<int> checked_set(const MetricGraph& g, const std::vector<int>& set,
                                    const std::string& what) {
  require(!set.empty(), errc::empty_subset, what + " is empty");
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  require(s.front() >= 0 && s.back() < g.vertex_count, errc::bad_input,
          what + " has a vertex out of range");
  return s;
}

inline Half quasiconvexity_constant(const MetricGraph& g, const std::vector<int>& set) {
  std::vector<int> y = checked_set(g, set, "quasiconvexity set");
  std::vector<Half> dy = dijkstra_row(g, y);
  Half q = 0;
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j) {
      GeodesicDag dag = geodesic_dag(g, y[i], y[j]);
      for (int v = 0; v < g.vertex_count; ++v)
        if (dag.on_geodesic[v]) q = std::max(q, dy[v]);
    }
  return q;
}

inline std::vector<int> nearest_point_projection(const MetricGraph& g, const std::vector<int>& from,
                                                 const std::vector<int>& to) {
  std::vector<int> f = checked_set(g, from, "projection source");
  std::vector<int> t = checked_set(g, to, "projection target");
  std::vector<Half> df = dijkstra_row(g, f);
  Half best = -1;
  for (int v : t)
    if (df[v] >= 0 && (best < 0 || df[v] < best)) best = df[v];
  require(best >= 0, errc::empty_projection, "projection target is unreachable");
  std::vector<int> proj;
  for (int v : t)
    if (df[v] == best) proj.push_back(v);
  return proj;
}

inline Half projection_diameter(const MetricGraph& g, const std::vector<int>& set) {
  std::vector<int> s = checked_set(g, set, "diameter set");
  Half diam = 0;
  for (int v : s) {
    std::vector<Half> d = dijkstra_row(g, {v});
    for (int w : s) {
      require(d[w] >= 0, errc::disconnected, "diameter across components");
      diam = std::max(diam, d[w]);
    }
  }
  return diam;
}

inline Half set_distance(const MetricGraph& g, const std::vector<int>& a,
                         const std::vector<int>& b) {
  std::vector<Half> da = dijkstra_row(g, checked_set(g, a, "set"));
  Half best = -1;
  for (int v : checked_set(g, b, "set"))
    if (da[v] >= 0 && (best < 0 || da[v] < best)) best = da[v];
  require(best >= 0, errc::disconnected, "sets lie in different components");
  return best;
}

// The largest constants an ordered family satisfies: well_separated is the
// smallest of the consecutive gaps and the projection gaps, elec_separated the
// smallest consecutive gap after electrification.
struct SeparationReport {
  Half well_separated = 0;
  Half elec_separated = 0;
};

inline SeparationReport separation_report(const MetricGraph& g,
                                          const std::vector<std::vector<int>>& z,
                                          const ElectrifiedGraph& e) {
  require(z.size() >= 3, errc::family_too_small, "need at least three sets");
  require(e.base_vertices == g.vertex_count, errc::bad_input,
          "electrified graph built over a different base");
  SeparationReport rep;
  rep.well_separated = -1;
  rep.elec_separated = -1;
  auto lower = [](Half& slot, Half v) {
    if (slot < 0 || v < slot) slot = v;
  };
  for (size_t i = 0; i + 1 < z.size(); ++i) {
    lower(rep.well_separated, set_distance(g, z[i], z[i + 1]));
    lower(rep.elec_separated, set_distance(e.graph, z[i], z[i + 1]));
  }
  for (size_t i = 1; i + 1 < z.size(); ++i) {
    std::vector<int> before = nearest_point_projection(g, z[i - 1], z[i]);
    std::vector<int> after = nearest_point_projection(g, z[i + 1], z[i]);
    lower(rep.well_separated, set_distance(g, before, after));
  }
  return rep;
}

struct QgConstants {
  Rat k{1, 1};
  Rat c{0, 1};
};

namespace detail {

// len <= k * d + c, with len and d doubled and k, c plain values
inline bool qg_bound_ok(Half len, Half d, const Rat& k, const Rat& c) {
  __int128 lhs = (__int128)len * k.den * c.den;
  __int128 rhs = (__int128)k.num * c.den * d + (__int128)2 * k.den * c.num;
  return lhs <= rhs;
}

struct PathTable {
  std::vector<Half> arc;                 // prefix arc length, doubled
  std::map<int, std::vector<Half>> row;  // distance rows for path vertices

  PathTable(const MetricGraph& g, const std::vector<int>& path) {
    require(path.size() >= 2, errc::path_too_short, "need at least two path vertices");
    for (int v : path)
      require(v >= 0 && v < g.vertex_count, errc::bad_input, "path vertex out of range");
    for (int v : path)
      if (!row.count(v)) row[v] = dijkstra_row(g, {v});
    arc.resize(path.size(), 0);
    for (size_t j = 1; j < path.size(); ++j) {
      Half step = row[path[j - 1]][path[j]];
      require(step >= 0, errc::disconnected, "path crosses components");
      arc[j] = arc[j - 1] + step;
    }
  }
};

}  // namespace detail

inline QgConstants quasigeodesic_constants(const MetricGraph& g, const std::vector<int>& path) {
  detail::PathTable tab(g, path);
  QgConstants qc;
  bool have_slope = false;
  for (size_t s = 0; s < path.size(); ++s)
    for (size_t t = s + 1; t < path.size(); ++t) {
      Half len = tab.arc[t] - tab.arc[s];
      Half d = tab.row[path[s]][path[t]];
      if (d > 0) {
        Rat slope(len, d);
        if (!have_slope || slope > qc.k) qc.k = slope;
        have_slope = true;
      } else {
        Rat excess(len, 2);
        if (excess > qc.c) qc.c = excess;
      }
    }
  return qc;
}

inline bool local_qg_check(const MetricGraph& g, const std::vector<int>& path, const Rat& k,
                           const Rat& c, Half window) {
  detail::PathTable tab(g, path);
  for (size_t s = 0; s < path.size(); ++s)
    for (size_t t = s + 1; t < path.size(); ++t) {
      Half len = tab.arc[t] - tab.arc[s];
      if (len > window) break;
      if (!detail::qg_bound_ok(len, tab.row[path[s]][path[t]], k, c)) return false;
    }
  return true;
}

// Contract maximal runs of electrified diameter at most one, then ask the
// contracted sequence to be a two sided (k, c)-quasigeodesic in step count.
inline bool reparam_qg_check(const ElectrifiedGraph& e, const std::vector<int>& path, const Rat& k,
                             const Rat& c) {
  detail::PathTable tab(e.graph, path);
  std::vector<int> z;
  size_t i = 0;
  while (i < path.size()) {
    std::vector<int> run = {path[i]};
    z.push_back(path[i]);
    size_t j = i + 1;
    for (; j < path.size(); ++j) {
      bool close = true;
      for (int x : run) close = close && tab.row[x][path[j]] <= 2;
      if (!close) break;
      run.push_back(path[j]);
    }
    i = j;
  }
  for (size_t s = 0; s < z.size(); ++s)
    for (size_t t = s + 1; t < z.size(); ++t) {
      Half d = tab.row[z[s]][z[t]];
      __int128 steps = (__int128)(t - s);
      __int128 up = 2 * steps * k.den * c.den;
      if (up > (__int128)k.num * c.den * d + (__int128)2 * k.den * c.num) return false;
      __int128 down = (__int128)d * k.den * c.den;
      if (down > 2 * (__int128)k.num * c.den * steps + (__int128)2 * k.den * c.num) return false;
    }
  return true;
}

// A piecewise geodesic through an ordered family: corner p_i projects the
// previous set onto Z_i, corner q_i the next set; ties broken by vertex id,
// geodesics expanded by smallest next vertex.
struct PathRecord {
  std::vector<int> vertices;
  std::vector<int> corner_index;
  std::vector<Half> segment_length;
  std::vector<Quarter> corner_gp;
  Rat k_star{1, 1};
  Rat c_star{0, 1};
};

namespace detail {

inline void extend_geodesic(const MetricGraph& g, std::vector<int>& walk, int to) {
  std::vector<Half> dv = dijkstra_row(g, {to});
  int x = walk.back();
  require(dv[x] >= 0, errc::empty_projection, "corner is unreachable");
  auto nbr = adjacency(g);
  while (x != to) {
    int pick = -1;
    for (auto [y, len] : nbr[x])
      if (dv[x] == len + dv[y] && (pick < 0 || y < pick)) pick = y;
    walk.push_back(pick);
    x = pick;
  }
}

}  // namespace detail

inline PathRecord piecewise_geodesic(const MetricGraph& g,
                                     const std::vector<std::vector<int>>& z) {
  require(z.size() >= 2, errc::family_too_small, "need at least two sets");
  std::vector<int> corners;
  auto push_corner = [&](int v) {
    if (corners.empty() || corners.back() != v) corners.push_back(v);
  };
  int m = (int)z.size();
  push_corner(nearest_point_projection(g, z[1], z[0]).front());
  for (int i = 1; i + 1 < m; ++i) {
    push_corner(nearest_point_projection(g, z[i - 1], z[i]).front());
    push_corner(nearest_point_projection(g, z[i + 1], z[i]).front());
  }
  push_corner(nearest_point_projection(g, z[m - 2], z[m - 1]).front());

  PathRecord rec;
  rec.vertices = {corners.front()};
  rec.corner_index = {0};
  for (size_t j = 1; j < corners.size(); ++j) {
    detail::extend_geodesic(g, rec.vertices, corners[j]);
    rec.corner_index.push_back((int)rec.vertices.size() - 1);
  }
  if (corners.size() == 1) return rec;  // the sets meet in one point
  detail::PathTable tab(g, rec.vertices);
  for (size_t j = 1; j < rec.corner_index.size(); ++j)
    rec.segment_length.push_back(tab.arc[rec.corner_index[j]] - tab.arc[rec.corner_index[j - 1]]);
  for (size_t j = 1; j + 1 < corners.size(); ++j)
    rec.corner_gp.push_back(gromov_product(g, corners[j], corners[j - 1], corners[j + 1]));
  QgConstants qc = quasigeodesic_constants(g, rec.vertices);
  rec.k_star = qc.k;
  rec.c_star = qc.c;
  return rec;
}

struct TranslationReport {
  std::vector<Half> displacement;  // d(x0, f^n x0) for n = 1 .. steps
  int steps = 0;
  Rat tail_slope{0, 1};
  bool loxodromic = false;
};

inline TranslationReport translation_length(const MetricGraph& g, const GraphAutomorphism& f,
                                            int x0, int n_max, const Rat& threshold = Rat(0)) {
  validate_automorphism(g, f);
  require(x0 >= 0 && x0 < g.vertex_count, errc::bad_input, "basepoint out of range");
  require(n_max >= 2, errc::bad_input, "need at least two steps");
  std::vector<int> orbit = {x0};
  for (int n = 1; n <= n_max; ++n) {
    int next = f.image[orbit.back()];
    if (next == -1) break;
    orbit.push_back(next);
  }
  TranslationReport rep;
  rep.steps = (int)orbit.size() - 1;
  require(rep.steps >= 2, errc::orbit_escapes_domain,
          "orbit leaves the domain after " + std::to_string(rep.steps) + " steps");
  std::vector<Half> d0 = dijkstra_row(g, {x0});
  for (int n = 1; n <= rep.steps; ++n) {
    require(d0[orbit[n]] >= 0, errc::disconnected, "orbit crosses components");
    rep.displacement.push_back(d0[orbit[n]]);
  }
  int h = rep.steps / 2;
  rep.tail_slope = Rat(rep.displacement[rep.steps - 1] - rep.displacement[h - 1],
                       2LL * (rep.steps - h));
  rep.loxodromic = rep.tail_slope > threshold;
  return rep;
}

inline Half cutoff_sum(const std::vector<std::pair<std::string, Half>>& table, Half cutoff) {
  require(cutoff >= 0, errc::bad_input, "cutoff must be nonnegative");
  Half total = 0;
  for (const auto& [label, value] : table) {
    require(value >= 0, errc::negative_entry, label + " is negative");
    if (value >= cutoff) total += value;
  }
  return total;
}

}  // namespace bicorn
