#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "bicorn/trackmoves.hpp"
#include "track_fixtures.hpp"

using namespace bicorn;
using testing::elementary_track;
using testing::genus2_loops;
using testing::saddle_track;
using testing::spur_track;
using testing::torus_track;

namespace {

// orientation reversal: the full rotation at every switch is read backwards
TrainTrack mirrored(TrainTrack t) {
  for (TrackSwitch& sw : t.switches) {
    std::vector<int> s0 = sw.side[0], s1 = sw.side[1];
    std::reverse(s0.begin(), s0.end());
    std::reverse(s1.begin(), s1.end());
    sw.side[0] = s1;
    sw.side[1] = s0;
  }
  return t;
}

}  // namespace

TEST_CASE("right split of the elementary track recurs to the same type", "[moves]") {
  TrainTrack t = elementary_track();
  MoveResult mv = split(t, 0, SplitChoice::right);
  CHECK(mv.track.branch_count == 3);
  CHECK(mv.track.switches.size() == 2);
  REQUIRE(verify_carrying(mv.track, t, mv.onto_input));
  CHECK(tracks_isomorphic(mv.track, t));

  // the b weight splits as c + f across the new switch
  std::vector<int> pushed = push_forward(mv.track, t, mv.onto_input, {1, 2, 1});
  CHECK(pushed == std::vector<int>{3, 2, 1});
  CHECK(switch_equal_int(t, pushed));
}

TEST_CASE("left and right splits are mirror images of each other", "[moves]") {
  TrainTrack t = saddle_track();
  MoveResult left = split(t, 0, SplitChoice::left);
  MoveResult right_of_mirror = split(mirrored(t), 0, SplitChoice::right);
  REQUIRE(verify_carrying(left.track, t, left.onto_input));
  CHECK(tracks_isomorphic(left.track, mirrored(right_of_mirror.track)));
}

TEST_CASE("central split of the saddle collapses to the torus track", "[moves]") {
  TrainTrack t = saddle_track();
  MoveResult mv = split(t, 0, SplitChoice::central);
  CHECK(mv.track.branch_count == 2);
  CHECK(mv.track.switches.size() == 1);
  CHECK(tracks_isomorphic(mv.track, torus_track()));
  REQUIRE(verify_carrying(mv.track, t, mv.onto_input));

  // both merged branches ride over e, so its weight doubles up
  std::vector<int> pushed = push_forward(mv.track, t, mv.onto_input, {1, 1});
  CHECK(pushed == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(switch_equal_int(t, pushed));
}

TEST_CASE("central split of the elementary track closes a circle", "[moves]") {
  try {
    split(elementary_track(), 0, SplitChoice::central);
    FAIL("expected InvalidResult");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_result);
  }
}

TEST_CASE("central split reports a degenerate complement through validation", "[moves]") {
  // gathering the merged pair on one side of the far switch leaves a monogon
  TrainTrack t = saddle_track();
  t.switches[2].side[0] = {end_token(1, 1), end_token(3, 1)};
  t.switches[2].side[1] = {end_token(4, 1), end_token(2, 1)};
  try {
    split(t, 0, SplitChoice::central);
    FAIL("expected InvalidResult");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_result);
  }
}

TEST_CASE("splitting anything but a large branch is refused", "[moves]") {
  for (int b : {1, 2}) {
    try {
      split(elementary_track(), b, SplitChoice::right);
      FAIL("expected NotLargeBranch");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_large_branch);
    }
  }
  try {
    split(torus_track(), 0, SplitChoice::left);  // both ends on one switch
    FAIL("expected NotLargeBranch");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_large_branch);
  }
}

TEST_CASE("shift slides the spur past the line and back", "[moves]") {
  TrainTrack t = spur_track();
  MoveResult once = shift(t, 0);
  REQUIRE(verify_carrying(once.track, t, once.onto_input));
  CHECK(once.onto_input.branch_route[0].empty());
  CHECK(once.onto_input.switch_image == std::vector<int>{1, 1});

  TrackReport before = validate_track(t);
  TrackReport after = validate_track(once.track);
  REQUIRE(after.census.faces.size() == before.census.faces.size());
  CHECK(after.census.faces[0].cusps == before.census.faces[0].cusps);
  CHECK(after.census.faces[0].degree() == before.census.faces[0].degree());

  MoveResult twice = shift(once.track, 0);
  REQUIRE(verify_carrying(twice.track, once.track, twice.onto_input));
  CHECK(twice.track.switches[0].side[0] == t.switches[0].side[0]);
  CHECK(twice.track.switches[0].side[1] == t.switches[0].side[1]);
  CHECK(twice.track.switches[1].side[0] == t.switches[1].side[0]);
  CHECK(twice.track.switches[1].side[1] == t.switches[1].side[1]);
  CHECK(tracks_isomorphic(twice.track, t));
}

TEST_CASE("branches without the shift pattern are refused", "[moves]") {
  for (int b : {0, 1, 2}) {
    try {
      shift(elementary_track(), b);
      FAIL("expected PatternMismatch");
    } catch (const error& e) {
      CHECK(e.code() == errc::pattern_mismatch);
    }
  }
  try {
    shift(torus_track(), 0);
    FAIL("expected PatternMismatch");
  } catch (const error& e) {
    CHECK(e.code() == errc::pattern_mismatch);
  }
}

TEST_CASE("every successful move preserves carried switch equalities", "[moves]") {
  std::vector<TrainTrack> fixtures = {torus_track(), elementary_track(), saddle_track(),
                                      spur_track(), genus2_loops()};
  int moves_tried = 0;
  for (const TrainTrack& t : fixtures) {
    std::vector<MoveResult> results;
    for (int b = 0; b < t.branch_count; ++b) {
      for (SplitChoice c : {SplitChoice::left, SplitChoice::right, SplitChoice::central}) {
        try {
          results.push_back(split(t, b, c));
        } catch (const error&) {
        }
      }
      try {
        results.push_back(shift(t, b));
      } catch (const error&) {
      }
    }
    for (const MoveResult& mv : results) {
      ++moves_tried;
      REQUIRE(verify_carrying(mv.track, t, mv.onto_input));
      for (const std::vector<int>& vc : vertex_cycles(mv.track)) {
        std::vector<int> pushed = push_forward(mv.track, t, mv.onto_input, vc);
        REQUIRE(switch_equal_int(t, pushed));
      }
    }
  }
  CHECK(moves_tried >= 6);
}

TEST_CASE("bounded search finds short splitting paths", "[moves]") {
  CarrySearch hit = carried_within_budget(torus_track(), saddle_track(), 2);
  REQUIRE(hit.found);
  REQUIRE(hit.moves.size() == 1);
  CHECK(hit.moves[0] == "split 0 central");

  CarrySearch trivial = carried_within_budget(spur_track(), spur_track());
  CHECK(trivial.found);
  CHECK(trivial.moves.empty());

  CarrySearch stuck = carried_within_budget(genus2_loops(), torus_track(), 3);
  CHECK_FALSE(stuck.found);
  CHECK_FALSE(stuck.budget_exhausted);

  CarrySearch broke = carried_within_budget(genus2_loops(), saddle_track(), 6, 1);
  CHECK_FALSE(broke.found);
  CHECK(broke.budget_exhausted);
}
