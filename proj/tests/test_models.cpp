#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "bicorn/models.hpp"
#include "graph_fixtures.hpp"

using namespace bicorn;
using namespace bicorn::testing;

namespace {

int slope_id(const FareyBall& ball, long long p, long long q) {
  auto it = ball.index.find({p, q});
  REQUIRE(it != ball.index.end());
  return it->second;
}

// the electrified distance from the root once every <a> coset is coned:
// one unit per b letter plus one per maximal a run
Half coset_formula(const std::string& w) {
  Half units = 0;
  bool in_run = false;
  for (char c : w) {
    if (c == 'b' || c == 'B') {
      ++units;
      in_run = false;
    } else {
      if (!in_run) ++units;
      in_run = true;
    }
  }
  return 2 * units;
}

}  // namespace

TEST_CASE("farey balls carry exactly the unimodular edges") {
  FareyBall ball = farey_ball(5);
  validate_graph(ball.graph);
  for (const GraphEdge& e : ball.graph.edges) {
    __int128 det = (__int128)ball.slope[e.u].p * ball.slope[e.v].q -
                   (__int128)ball.slope[e.v].p * ball.slope[e.u].q;
    REQUIRE((det == 1 || det == -1));
  }
  int inf = slope_id(ball, 1, 0);
  int zero = slope_id(ball, 0, 1);
  CHECK(distance(ball.graph, inf, zero) == 2);
  CHECK(distance(ball.graph, inf, slope_id(ball, 2, 5)) >= 4);
  CHECK(distance(ball.graph, zero, slope_id(ball, 2, 5)) == 4);

  FareyBall wider = farey_ball(8);
  CHECK(distance(wider.graph, slope_id(wider, 0, 1), slope_id(wider, 2, 5)) == 4);
  for (auto [p, q] : {std::pair<long long, long long>{3, 4}, {-3, 5}, {5, 2}})
    CHECK(distance(wider.graph, slope_id(wider, 0, 1), slope_id(wider, p, q)) <=
          distance(ball.graph, slope_id(ball, 0, 1), slope_id(ball, p, q)));

  try {
    farey_ball(0);
    FAIL("expected BoundTooSmall");
  } catch (const error& e) {
    CHECK(e.code() == errc::bound_too_small);
  }
}

TEST_CASE("the parabolic matrix acts partially on the ball") {
  FareyBall ball = farey_ball(5);
  GraphAutomorphism t = mat_action(ball, {1, 1, 0, 1});
  validate_automorphism(ball.graph, t);
  CHECK(t.image[slope_id(ball, 0, 1)] == slope_id(ball, 1, 1));
  CHECK(t.image[slope_id(ball, 1, 0)] == slope_id(ball, 1, 0));
  CHECK(t.image[slope_id(ball, 5, 1)] == -1);

  try {
    mat_action(ball, {2, 0, 0, 1});
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
}

TEST_CASE("free tree balls grow like the free group") {
  FreeTreeBall ball = free_tree_ball(4);
  CHECK(ball.graph.vertex_count == 161);  // 2 * 3^4 - 1
  CHECK(ball.graph.edges.size() == 160);
  validate_graph(ball.graph);
  CHECK(delta_four_point(free_tree_ball(3).graph, DeltaMode::exhaustive).delta == 0);

  int ab = ball.index.at("ab");
  int aB = ball.index.at("aB");
  CHECK(distance(ball.graph, ab, aB) == 4);
  CHECK(distance(ball.graph, 0, ball.index.at("abAB")) == 8);

  try {
    free_tree_ball(1);
    FAIL("expected BoundTooSmall");
  } catch (const error& e) {
    CHECK(e.code() == errc::bound_too_small);
  }
}

TEST_CASE("coset families partition the ball into convex strips") {
  FreeTreeBall ball = free_tree_ball(4);
  SubsetFamily ys = all_cosets(ball, 'a');
  std::vector<int> seen(ball.graph.vertex_count, 0);
  for (const auto& mem : ys.member)
    for (int v : mem) ++seen[v];
  for (int v = 0; v < ball.graph.vertex_count; ++v) REQUIRE(seen[v] == 1);

  std::vector<int> axis;
  for (size_t i = 0; i < ys.member.size(); ++i)
    if (ys.name[i] == "e<a>") axis = ys.member[i];
  CHECK(axis.size() == 9);  // a^k for |k| <= 4
  CHECK(quasiconvexity_constant(ball.graph, axis) == 0);

  SubsetFamily strip = coset_family(ball, 'a', {"b"});
  REQUIRE(strip.member.size() == 1);
  CHECK(strip.member[0].size() == 7);  // b a^k for |k| <= 3
  CHECK(quasiconvexity_constant(ball.graph, strip.member[0]) == 0);

  try {
    coset_family(ball, 'a', {"bbbbb"});
    FAIL("expected EmptySubset");
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_subset);
  }
}

TEST_CASE("electrified coset distances match the letter count formula") {
  FreeTreeBall ball = free_tree_ball(7);
  ElectrifiedGraph e = electrify(ball.graph, all_cosets(ball, 'a'));
  std::vector<Half> d = dijkstra_row(e.graph, {0});
  for (int v = 0; v < ball.graph.vertex_count; ++v)
    REQUIRE(d[v] == coset_formula(ball.word[v]));
}

TEST_CASE("b translates along the electrified tree with unit speed") {
  FreeTreeBall ball = free_tree_ball(7);
  ElectrifiedGraph e = electrify(ball.graph, all_cosets(ball, 'a'));
  GraphAutomorphism f = extend_to_cones(e, mult_by(ball, "b"));
  validate_automorphism(e.graph, f);
  TranslationReport rep = translation_length(e.graph, f, 0, 7);
  CHECK(rep.steps == 7);
  CHECK(rep.displacement == std::vector<Half>({2, 4, 6, 8, 10, 12, 14}));
  CHECK(rep.tail_slope == Rat(1));
  CHECK(rep.loxodromic);

  // against the bare tree b is no faster than the tree allows
  TranslationReport bare = translation_length(ball.graph, mult_by(ball, "b"), 0, 7);
  CHECK(bare.tail_slope == Rat(1));
}

TEST_CASE("drift on a biased line approaches the bias") {
  MetricGraph line = path_graph(200);
  GraphAutomorphism right, left;
  right.partial = left.partial = true;
  for (int v = 0; v < 200; ++v) {
    right.image.push_back(v + 1 < 200 ? v + 1 : -1);
    left.image.push_back(v > 0 ? v - 1 : -1);
  }
  WalkSpec spec;
  spec.gens = {{right, 2}, {left, 1}};
  spec.length = 20;
  spec.trials = 200;
  spec.seed = 9;
  DriftReport rep = estimate_drift(line, spec, 100, Rat(1, 10));
  CHECK(rep.censored == 0);
  CHECK(rep.mean.back() > Rat(1, 5));
  CHECK(rep.mean.back() < Rat(1, 2));

  DriftReport again = estimate_drift(line, spec, 100, Rat(1, 10));
  CHECK(again.mean == rep.mean);
  CHECK(again.hits == rep.hits);
  CHECK(again.censored == rep.censored);
}

TEST_CASE("walks that escape the ball are censored") {
  FreeTreeBall ball = free_tree_ball(3);
  WalkSpec spec;
  spec.gens = {{mult_by(ball, "b"), 1}};
  spec.length = 5;
  spec.trials = 10;
  spec.seed = 3;
  try {
    estimate_drift(ball.graph, spec, 0);
    FAIL("expected AllTrialsCensored");
  } catch (const error& e) {
    CHECK(e.code() == errc::all_trials_censored);
  }

  spec.length = 3;
  DriftReport rep = estimate_drift(ball.graph, spec, 0);
  CHECK(rep.censored == 0);
  CHECK(rep.mean == std::vector<Rat>({Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("the uniform free group walk drifts at about half speed") {
  FreeTreeBall ball = free_tree_ball(9);
  WalkSpec spec;
  spec.gens = {{mult_by(ball, "a"), 1},
               {mult_by(ball, "A"), 1},
               {mult_by(ball, "b"), 1},
               {mult_by(ball, "B"), 1}};
  spec.length = 8;
  spec.trials = 100;
  spec.seed = 17;
  DriftReport rep = estimate_drift(ball.graph, spec, 0, Rat(1, 4));
  CHECK(rep.censored == 0);
  CHECK(rep.mean.back() > Rat(1, 4));
  CHECK(rep.mean.back() < Rat(3, 4));
  CHECK(rep.survivors.back() == 100);

  DriftReport again = estimate_drift(ball.graph, spec, 0, Rat(1, 4));
  CHECK(again.mean == rep.mean);
}
