#include <catch2/catch_amalgamated.hpp>

#include "bicorn/trackcycles.hpp"
#include "track_fixtures.hpp"

using namespace bicorn;
using testing::elementary_track;
using testing::genus2_loops;
using testing::saddle_track;
using testing::spur_track;
using testing::torus_track;

namespace {

// theta graph: two switches, three parallel strands; valid once genus 3
TrainTrack theta3() {
  TrainTrack t;
  t.genus = 3;
  t.branch_count = 3;
  t.switches.resize(2);
  t.switches[0].side[0] = {end_token(0, 0)};
  t.switches[0].side[1] = {end_token(1, 0), end_token(2, 0)};
  t.switches[1].side[0] = {end_token(0, 1)};
  t.switches[1].side[1] = {end_token(2, 1), end_token(1, 1)};
  return t;
}

}  // namespace

TEST_CASE("the two torus vertex cycles cross once and fill", "[cycles]") {
  OverlayReport rep = overlay_carried(torus_track(), vertex_cycles(torus_track()));
  CHECK(rep.crossings == 1);
  CHECK(rep.edges == 2);
  CHECK(rep.faces == 1);
  CHECK(rep.derived_genus == 1);
  CHECK(rep.connected);
  CHECK(rep.filling);
}

TEST_CASE("elementary vertex cycles are the torus pair in disguise", "[cycles]") {
  OverlayReport rep = overlay_carried(elementary_track(), vertex_cycles(elementary_track()));
  CHECK(rep.crossings == 1);
  CHECK(rep.derived_genus == 1);
  CHECK(rep.filling);
}

TEST_CASE("four loops through one switch fill genus two", "[cycles]") {
  OverlayReport rep = overlay_carried(genus2_loops(), vertex_cycles(genus2_loops()));
  CHECK(rep.crossings == 6);
  CHECK(rep.edges == 12);
  CHECK(rep.faces == 4);
  CHECK(rep.derived_genus == 2);
  CHECK(rep.filling);
}

TEST_CASE("a single embedded curve never fills", "[cycles]") {
  OverlayReport rep = overlay_carried(spur_track(), {{1, 0, 1}});
  CHECK(rep.crossings == 0);
  CHECK_FALSE(rep.connected);
  CHECK_FALSE(rep.filling);
}

TEST_CASE("theta strands are parallel: recurrent but neither large nor filling",
          "[cycles]") {
  TrainTrack t = theta3();
  std::vector<std::vector<int>> vcs = vertex_cycles(t);
  REQUIRE(vcs == std::vector<std::vector<int>>{{1, 0, 1}, {1, 1, 0}});
  RecurrenceReport rep = recurrence_report(t);
  CHECK(rep.recurrent);
  CHECK_FALSE(rep.large);
  CHECK_FALSE(rep.filling);
  CHECK_FALSE(rep.transversely_recurrent.has_value());
}

TEST_CASE("the spur branch takes no closed route", "[cycles]") {
  RecurrenceReport rep = recurrence_report(spur_track());
  CHECK_FALSE(rep.recurrent);
  CHECK(rep.large);
  CHECK_FALSE(rep.filling);
  CHECK_FALSE(rep.transversely_recurrent.has_value());
}

TEST_CASE("the saddle is recurrent, large, and filling", "[cycles]") {
  TrainTrack t = saddle_track();
  std::vector<std::vector<int>> vcs = vertex_cycles(t);
  REQUIRE(vcs == std::vector<std::vector<int>>{
                     {1, 0, 1, 0, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 0, 1}, {1, 1, 0, 1, 0}});
  RecurrenceReport rep = recurrence_report(t);
  CHECK(rep.recurrent);
  CHECK(rep.large);
  CHECK(rep.filling);
  OverlayReport ov = overlay_carried(t, vcs);
  CHECK(ov.crossings >= 1);
  CHECK(ov.derived_genus == 1);
}

TEST_CASE("torus report with and without a dual witness", "[cycles]") {
  RecurrenceReport bare = recurrence_report(torus_track());
  CHECK(bare.recurrent);
  CHECK(bare.large);
  CHECK(bare.filling);
  CHECK_FALSE(bare.transversely_recurrent.has_value());

  CurveOnTrack dual{{0}, {}, {}};
  RecurrenceReport with = recurrence_report(torus_track(), {dual});
  REQUIRE(with.transversely_recurrent.has_value());
  CHECK(*with.transversely_recurrent);
}

TEST_CASE("a witness missing two branches is not transverse recurrence", "[cycles]") {
  CurveOnTrack crosses_p{{}, {1}, {}};
  RecurrenceReport rep = recurrence_report(spur_track(), {crosses_p});
  REQUIRE(rep.transversely_recurrent.has_value());
  CHECK_FALSE(*rep.transversely_recurrent);
}
