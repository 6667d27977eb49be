#include <catch2/catch_amalgamated.hpp>

#include "bicorn/pairing.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bicorn;
using namespace bicorn::testing;

TEST_CASE("no intersections admit exactly the empty pairing") {
  PairingReport r = casson_long_pairing(disjoint_pair(2));
  REQUIRE(r.count == 1);
  REQUIRE(r.pairing.has_value());
  REQUIRE(r.pairing->chords.empty());
}

TEST_CASE("odd intersection counts admit no perfect matching") {
  try {
    casson_long_pairing(torus_pair());
    FAIL("expected rejection");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::odd_intersection);
  }
}

TEST_CASE("two crossings of equal sign admit no pairing") {
  PairingReport r = casson_long_pairing(torus_two_pair());
  REQUIRE(r.count == 0);
  REQUIRE_FALSE(r.pairing.has_value());
}

TEST_CASE("two crossings of opposite sign pair off") {
  PairingReport r = casson_long_pairing(bigon_pair());
  REQUIRE(r.count == 1);
  REQUIRE(r.pairing.has_value());
  REQUIRE(r.pairing->chords.size() == 1);
}

TEST_CASE("aligned four crossing pair matches adjacent points") {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4};
  cp.b_cycle = {1, 2, 3, 4};
  cp.sign = {{1, 1}, {2, -1}, {3, 1}, {4, -1}};
  PairIndex ix = index_pair(cp);
  cp.genus = face_census(cp, ix).derived_genus;
  PairingReport r = casson_long_pairing(cp);
  REQUIRE(r.count == 2);
  REQUIRE(r.pairing.has_value());
  REQUIRE(r.pairing->chords.front() == std::pair<int, int>(1, 2));
  REQUIRE(r.pairing->chords.back() == std::pair<int, int>(3, 4));
}

TEST_CASE("search agrees with the naive matcher on all small pairs") {
  for (int n = 2; n <= 6; n += 2) {
    enumerate_pairs(n, [&](const CurvePair& cp, const FaceCensus&) {
      PairingReport r = casson_long_pairing(cp);
      long long naive = naive_pairing_count(cp);
      REQUIRE(r.count == naive);
      REQUIRE(r.pairing.has_value() == (naive > 0));
    });
  }
}

TEST_CASE("the search bound is enforced") {
  CurvePair cp;
  for (int v = 1; v <= 18; ++v) {
    cp.a_cycle.push_back(v);
    cp.b_cycle.push_back(v);
    cp.sign[v] = v % 2 ? 1 : -1;
  }
  try {
    casson_long_pairing(cp);
    FAIL("expected rejection");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::too_large);
  }
}
