#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bicorn/coarse.hpp"
#include "graph_fixtures.hpp"
#include "oracles.hpp"

using namespace bicorn;
using namespace bicorn::testing;

TEST_CASE("electrification cones a path to diameter one") {
  MetricGraph p = path_graph(5);
  SubsetFamily ys;
  ys.member = {{0, 1, 2, 3, 4}};
  ElectrifiedGraph e = electrify(p, ys);
  CHECK(e.graph.vertex_count == 6);
  CHECK(e.cone == std::vector<int>({5}));
  CHECK(distance(e.graph, 0, 4) == 2);
  CHECK(e.graph.label[5] == "cone:Y0");
  for (size_t i = p.edges.size(); i < e.graph.edges.size(); ++i)
    CHECK(e.graph.edges[i].len == 1);

  ElectrifiedGraph none = electrify(p, {});
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(distance(none.graph, u, v) == distance(p, u, v));

  SubsetFamily bad;
  bad.member = {{}};
  try {
    electrify(p, bad);
    FAIL("expected EmptySubset");
  } catch (const error& ex) {
    CHECK(ex.code() == errc::empty_subset);
  }
}

TEST_CASE("electrified distances never exceed base distances") {
  for (const MetricGraph& g : delta_fixture_graphs()) {
    uint64_t seed = fnv1a64("elec" + std::to_string(g.vertex_count + g.edges.size()));
    for (const SubsetFamily& ys : families_for(g, seed)) {
      ElectrifiedGraph e = electrify(g, ys);
      for (int u = 0; u < g.vertex_count; ++u) {
        std::vector<Half> base = dijkstra_row(g, {u});
        std::vector<Half> el = dijkstra_row(e.graph, {u});
        for (int v = 0; v < g.vertex_count; ++v) REQUIRE(el[v] <= base[v]);
      }
      for (const std::vector<int>& mem : e.family.member)
        REQUIRE(projection_diameter(e.graph, mem) <= 2);
    }
  }
}

TEST_CASE("gromov products come out in exact quarters") {
  MetricGraph p = path_graph(5);
  CHECK(gromov_product(p, 2, 0, 4) == 0);
  CHECK(gromov_product(p, 4, 0, 2) == 8);
  CHECK(gromov_product(p, 0, 4, 4) == 16);
}

TEST_CASE("exhaustive delta matches the brute oracle on every fixture") {
  for (const MetricGraph& g : delta_fixture_graphs()) {
    DeltaReport rep = delta_four_point(g, DeltaMode::exhaustive);
    REQUIRE(rep.delta == delta_brute(g));
  }
  CHECK(delta_four_point(cycle_graph(8), DeltaMode::exhaustive).delta == 8);
  CHECK(delta_four_point(cycle_graph(6), DeltaMode::exhaustive).delta == 4);
}

TEST_CASE("trees are zero hyperbolic") {
  for (const MetricGraph& g : tree_fixture_graphs()) {
    DeltaReport rep = delta_four_point(g, DeltaMode::exhaustive);
    CHECK(rep.delta == 0);
  }
}

TEST_CASE("sampled delta stays under the exhaustive value") {
  MetricGraph c = cycle_graph(8);
  Quarter full = delta_four_point(c, DeltaMode::exhaustive).delta;
  DeltaReport s = delta_four_point(c, DeltaMode::sampled, 200, 5);
  CHECK(s.quadruples == 200);
  CHECK(s.delta <= full);
  try {
    delta_four_point(c, DeltaMode::sampled, 0, 5);
    FAIL("expected SampleBudgetZero");
  } catch (const error& e) {
    CHECK(e.code() == errc::sample_budget_zero);
  }
}

TEST_CASE("quasiconvexity constants on cycles and trees") {
  MetricGraph c8 = cycle_graph(8);
  std::vector<int> all;
  for (int v = 0; v < 8; ++v) all.push_back(v);
  CHECK(quasiconvexity_constant(c8, all) == 0);
  CHECK(quasiconvexity_constant(c8, {0, 4}) == 4);
  CHECK(quasiconvexity_constant(cycle_graph(6), {0, 3}) == 2);
  CHECK(quasiconvexity_constant(path_graph(5), {1, 2, 3}) == 0);
}

TEST_CASE("nearest point projections in trees collapse to single vertices") {
  MetricGraph spider = star_graph(2, 2);  // center 0, legs 1-2 and 3-4
  CHECK(nearest_point_projection(spider, {1, 2}, {3, 4}) == std::vector<int>({3}));
  CHECK(projection_diameter(spider, {1, 2}) == 2);
  CHECK(nearest_point_projection(spider, {3, 4}, {3, 4}) == std::vector<int>({3, 4}));

  MetricGraph split = path_graph(2);
  split.vertex_count = 3;
  try {
    nearest_point_projection(split, {2}, {0});
    FAIL("expected EmptyProjection");
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_projection);
  }
}

TEST_CASE("separation reports measure the weakest link") {
  MetricGraph p = path_graph(10);
  std::vector<std::vector<int>> z = {{0, 1}, {4, 5}, {8, 9}};
  SubsetFamily ys;
  ys.member = z;
  ElectrifiedGraph e = electrify(p, ys);
  SeparationReport rep = separation_report(p, z, e);
  CHECK(rep.well_separated == 2);
  CHECK(rep.elec_separated == 6);

  std::vector<std::vector<int>> touching = {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
  SubsetFamily ty;
  ty.member = touching;
  SeparationReport overlap = separation_report(p, touching, electrify(p, ty));
  CHECK(overlap.well_separated == 0);
  CHECK(overlap.elec_separated == 0);

  try {
    separation_report(p, {{0}, {5}}, e);
    FAIL("expected FamilyTooSmall");
  } catch (const error& ex) {
    CHECK(ex.code() == errc::family_too_small);
  }
}

TEST_CASE("piecewise geodesics through projections") {
  MetricGraph p = path_graph(10);
  PathRecord two = piecewise_geodesic(p, {{0, 1}, {8, 9}});
  CHECK(two.vertices.front() == 1);
  CHECK(two.vertices.back() == 8);
  CHECK(two.k_star == Rat(1));
  CHECK(two.c_star == Rat(0));

  PathRecord rec = piecewise_geodesic(p, {{0, 1}, {4, 5}, {8, 9}});
  CHECK(rec.vertices == std::vector<int>({1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK(rec.corner_index == std::vector<int>({0, 3, 4, 7}));
  CHECK(rec.segment_length == std::vector<Half>({6, 2, 6}));
  CHECK(rec.corner_gp == std::vector<Quarter>({0, 0}));
  CHECK(rec.k_star == Rat(1));
  CHECK(rec.c_star == Rat(0));
}

TEST_CASE("a doubling back family shows up in the corner products") {
  MetricGraph p = path_graph(3);
  PathRecord rec = piecewise_geodesic(p, {{0}, {2}, {0}});
  CHECK(rec.vertices == std::vector<int>({0, 1, 2, 1, 0}));
  CHECK(rec.corner_gp == std::vector<Quarter>({8}));
  CHECK(rec.k_star == Rat(3));
  CHECK(rec.c_star == Rat(4));
}

TEST_CASE("quasigeodesic constants freeze the worst pair") {
  MetricGraph p = path_graph(4);
  QgConstants geodesic = quasigeodesic_constants(p, {0, 1, 2, 3});
  CHECK(geodesic.k == Rat(1));
  CHECK(geodesic.c == Rat(0));

  std::vector<int> back = {0, 1, 2, 3, 2, 1, 0};
  QgConstants qc = quasigeodesic_constants(p, back);
  CHECK(qc.k == Rat(5));
  CHECK(qc.c == Rat(6));
  CHECK(local_qg_check(p, back, qc.k, qc.c, 100));
  CHECK_FALSE(local_qg_check(p, back, Rat(1), Rat(0), 4));
  CHECK(local_qg_check(p, {0, 1, 2, 3}, Rat(1), Rat(0), 100));

  try {
    quasigeodesic_constants(p, {0});
    FAIL("expected PathTooShort");
  } catch (const error& e) {
    CHECK(e.code() == errc::path_too_short);
  }
}

TEST_CASE("the reparameterized check contracts coned balls first") {
  MetricGraph p = path_graph(9);
  SubsetFamily ys;
  ys.member = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  ElectrifiedGraph e = electrify(p, ys);
  std::vector<int> walk = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(reparam_qg_check(e, walk, Rat(2), Rat(1)));
  CHECK_FALSE(reparam_qg_check(e, walk, Rat(1), Rat(0)));

  SubsetFamily whole;
  whole.member = {{0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(reparam_qg_check(electrify(p, whole), walk, Rat(1), Rat(0)));
}

TEST_CASE("translation lengths separate loxodromic from finite order") {
  MetricGraph line = path_graph(12);
  GraphAutomorphism shift;
  for (int v = 0; v < 12; ++v) shift.image.push_back(v + 1 < 12 ? v + 1 : -1);
  shift.partial = true;
  TranslationReport rep = translation_length(line, shift, 0, 8);
  CHECK(rep.steps == 8);
  CHECK(rep.displacement == std::vector<Half>({2, 4, 6, 8, 10, 12, 14, 16}));
  CHECK(rep.tail_slope == Rat(1));
  CHECK(rep.loxodromic);

  MetricGraph c6 = cycle_graph(6);
  GraphAutomorphism rot;
  for (int v = 0; v < 6; ++v) rot.image.push_back((v + 1) % 6);
  TranslationReport spin = translation_length(c6, rot, 0, 6);
  CHECK(spin.tail_slope == Rat(-1));
  CHECK_FALSE(spin.loxodromic);

  try {
    translation_length(line, shift, 10, 8);
    FAIL("expected OrbitEscapesDomain");
  } catch (const error& e) {
    CHECK(e.code() == errc::orbit_escapes_domain);
  }
}

TEST_CASE("the cutoff sum zeroes entries under the threshold") {
  std::vector<std::pair<std::string, Half>> table = {{"X1", 6}, {"X2", 14}, {"X3", 4}};
  CHECK(cutoff_sum(table, 10) == 14);
  CHECK(cutoff_sum(table, 0) == 24);
  CHECK(cutoff_sum({}, 10) == 0);
  try {
    cutoff_sum({{"X", -2}}, 0);
    FAIL("expected NegativeEntry");
  } catch (const error& e) {
    CHECK(e.code() == errc::negative_entry);
  }
}
