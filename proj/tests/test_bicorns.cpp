#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bicorn/bicorns.hpp"
#include "helpers.hpp"

using namespace bicorn;
using namespace bicorn::testing;

namespace {

CurvePair genus2_i4() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4};
  cp.b_cycle = {1, 2, 4, 3};
  cp.sign = {{1, 1}, {2, 1}, {3, -1}, {4, -1}};
  cp.genus = 2;
  return cp;
}

CurvePair genus2_i6() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4, 5, 6};
  cp.b_cycle = {1, 3, 5, 2, 6, 4};
  cp.sign = {{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}};
  cp.genus = 2;
  return cp;
}

void check_bicorn_invariants(const CurvePair& base, const BicornSequence& seq) {
  PairIndex bx = index_pair(base);
  const std::vector<int>* prev = nullptr;
  int prev_count = base.count();
  for (const Bicorn& bc : seq.bicorns) {
    // arcs share endpoints as a set
    std::set<int> a_ends{bc.a_arc.front(), bc.a_arc.back()};
    std::set<int> b_ends{bc.b_arc.front(), bc.b_arc.back()};
    REQUIRE(a_ends == b_ends);
    // c_i is embedded: the arcs only meet at the corners
    std::set<int> a_all(bc.a_arc.begin(), bc.a_arc.end());
    for (size_t k = 1; k + 1 < bc.b_arc.size(); ++k)
      REQUIRE_FALSE(a_all.count(bc.b_arc[k]));
    // a_arc walks consecutive vertices of a forward
    int n = bx.n();
    int p0 = bx.a_pos[bx.dense.at(bc.a_arc.front())];
    for (size_t k = 0; k < bc.a_arc.size(); ++k)
      REQUIRE(bc.a_arc[k] == base.a_cycle[(p0 + (int)k) % n]);
    // nesting inside the previous window
    if (prev) {
      std::set<int> outer(prev->begin(), prev->end());
      for (int v : bc.a_arc) REQUIRE(outer.count(v));
      REQUIRE(bc.a_arc.size() < prev->size());
    }
    // the companion pair is a valid rotation system over the window interior
    REQUIRE(bc.with_b.count() == (int)bc.a_arc.size() - 2);
    if (bc.with_b.count() >= 1) {
      PairIndex wx = validate_curve_pair(bc.with_b, /*allow_bigons=*/true);
      REQUIRE(wx.n() == bc.with_b.count());
    }
    REQUIRE(bc.with_b.count() < prev_count);
    REQUIRE(bc.disjoint_from_previous);
    prev = &bc.a_arc;
    prev_count = bc.with_b.count() > 0 ? bc.with_b.count() : prev_count;
  }
}

}  // namespace

TEST_CASE("rectangle only pairs admit no bicorn start") {
  for (CurvePair cp : {torus_pair(), torus_two_pair()}) {
    try {
      nested_bicorn_sequence(cp);
      FAIL("expected rejection");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::no_non_rectangular_face);
    }
  }
}

TEST_CASE("a pair with no returning arc is reported") {
  int found = 0;
  for (int n = 3; n <= 5 && !found; ++n) {
    enumerate_pairs(n, [&](const CurvePair& cp, const FaceCensus& fc) {
      if (fc.bigons > 0 || found) return;
      bool nonrect = false;
      for (int f = 0; f < (int)fc.faces.size(); ++f)
        if (fc.face_class(f) == FaceClass::other) nonrect = true;
      if (!nonrect || !returning_arcs(cp).empty()) return;
      ++found;
      try {
        nested_bicorn_sequence(cp);
        FAIL("expected rejection");
      } catch (const error& e) {
        REQUIRE(e.code() == errc::no_returning_arc_for_bicorn);
      }
    });
  }
  REQUIRE(found == 1);
}

TEST_CASE("the four crossing genus two pair stops after one bicorn") {
  CurvePair cp = genus2_i4();
  REQUIRE(validate_curve_pair(cp).n() == 4);
  BicornSequence seq = nested_bicorn_sequence(cp);
  REQUIRE(seq.bicorns.size() == 1);
  REQUIRE((int)seq.bicorns.size() <= cp.count());
  REQUIRE_FALSE(seq.completed);  // strands at a one crossing window
  const Bicorn& b1 = seq.bicorns[0];
  REQUIRE(b1.a_arc == std::vector<int>{2, 3, 4});
  REQUIRE(b1.b_arc == std::vector<int>{2, 4});
  REQUIRE(b1.with_b.count() == 1);
  REQUIRE(b1.non_degenerate);
  check_bicorn_invariants(cp, seq);
}

TEST_CASE("the six crossing genus two pair completes in two bicorns") {
  CurvePair cp = genus2_i6();
  REQUIRE(validate_curve_pair(cp).n() == 6);
  BicornSequence seq = nested_bicorn_sequence(cp);
  REQUIRE(seq.completed);
  REQUIRE(seq.bicorns.size() == 2);
  REQUIRE(seq.bicorns[0].a_arc == std::vector<int>{2, 3, 4, 5});
  REQUIRE(seq.bicorns[0].b_arc == std::vector<int>{5, 2});
  REQUIRE(seq.bicorns[0].with_b.count() == 2);
  REQUIRE(seq.bicorns[1].a_arc == std::vector<int>{3, 4});
  REQUIRE(seq.bicorns[1].b_arc == std::vector<int>{3, 5, 2, 6, 4});
  REQUIRE(seq.bicorns[1].with_b.count() == 0);
  check_bicorn_invariants(cp, seq);
}

TEST_CASE("bicorn invariants hold across all small pairs") {
  int ran = 0;
  for (int n = 4; n <= 6; ++n) {
    enumerate_pairs(n, [&](const CurvePair& cp, const FaceCensus& fc) {
      if (fc.bigons > 0) return;
      BicornSequence seq;
      try {
        seq = nested_bicorn_sequence(cp);
      } catch (const error& e) {
        bool expected = e.code() == errc::no_non_rectangular_face ||
                        e.code() == errc::no_returning_arc_for_bicorn;
        REQUIRE(expected);
        return;
      }
      ++ran;
      REQUIRE((int)seq.bicorns.size() <= cp.count());
      check_bicorn_invariants(cp, seq);
      if (seq.completed) REQUIRE(seq.bicorns.back().with_b.count() == 0);
    });
  }
  REQUIRE(ran > 100);
}
