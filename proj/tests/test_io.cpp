#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "bicorn/io.hpp"
#include "graph_fixtures.hpp"
#include "helpers.hpp"
#include "track_fixtures.hpp"

using namespace bicorn;
using namespace bicorn::testing;

namespace {

CurvePair genus2_i6() {
  CurvePair cp;
  cp.a_cycle = {1, 2, 3, 4, 5, 6};
  cp.b_cycle = {1, 3, 5, 2, 6, 4};
  cp.sign = {{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}};
  cp.genus = 2;
  return cp;
}

}  // namespace

TEST_CASE("curve pairs round trip through their documents") {
  CurvePair cp = genus2_i6();
  Json j = pair_to_json(cp);
  CurvePair back = pair_from_json(j);
  CHECK(back.a_cycle == cp.a_cycle);
  CHECK(back.b_cycle == cp.b_cycle);
  CHECK(back.sign == cp.sign);
  CHECK(back.genus == cp.genus);
  CHECK(j.dump() == pair_to_json(back).dump());

  Json seq = sequence_to_json({cp, cp});
  CHECK(seq.size() == 2);

  std::string dot = pair_to_dot(cp);
  CHECK(dot.find("v1 -- v2") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("malformed pair documents are rejected with context") {
  Json j = pair_to_json(genus2_i6());
  Json missing = j;
  missing.erase("rotations");
  try {
    pair_from_json(missing);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
  Json badsign = j;
  badsign["rotations"][0][1] = 2;
  try {
    pair_from_json(badsign);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
  Json drift = j;
  drift["vertices"][0] = 9;
  try {
    pair_from_json(drift);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
}

TEST_CASE("tracks round trip seat by seat") {
  for (const TrainTrack& t : {torus_track(), elementary_track(), genus2_loops(), saddle_track()}) {
    Json j = track_to_json(t);
    TrackDocument doc = track_from_json(j);
    REQUIRE(doc.track.branch_count == t.branch_count);
    REQUIRE(doc.track.switches.size() == t.switches.size());
    for (size_t s = 0; s < t.switches.size(); ++s)
      for (int w = 0; w < 2; ++w) REQUIRE(doc.track.switches[s].side[w] == t.switches[s].side[w]);
    CHECK(doc.track.genus == t.genus);
    CHECK_FALSE(doc.weights.has_value());
  }

  TrainTrack t = torus_track();
  std::vector<int> w = {1, 2};
  TrackDocument doc = track_from_json(track_to_json(t, &w));
  REQUIRE(doc.weights.has_value());
  CHECK(*doc.weights == w);

  std::string dot = track_to_dot(t);
  CHECK(dot.find("taillabel") != std::string::npos);
}

TEST_CASE("track documents with broken seats are rejected") {
  Json j = track_to_json(torus_track());
  Json hole = j;
  hole["branches"][0]["end0"][2] = 7;  // skips positions on the side
  try {
    track_from_json(hole);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
  Json clash = j;
  clash["branches"][0]["end0"] = clash["branches"][0]["end1"];
  try {
    track_from_json(clash);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
}

TEST_CASE("metric graphs and families round trip exactly") {
  MetricGraph g = path_graph(4, 3);  // half integer lengths
  SubsetFamily ys;
  ys.member = {{0, 1}, {2, 3}};
  ys.name = {"left", "right"};
  Json j = graph_to_json(g, &ys);
  GraphDocument doc = graph_from_json(j);
  REQUIRE(doc.graph.vertex_count == 4);
  validate_graph(doc.graph);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(distance(doc.graph, u, v) == distance(g, u, v));
  CHECK(doc.family.member == ys.member);
  CHECK(doc.family.name == ys.name);

  ElectrifiedGraph e = electrify(g, ys);
  std::string dot = graph_to_dot(e.graph);
  CHECK(dot.find("shape=diamond") != std::string::npos);
  CHECK(dot.find("1.5") != std::string::npos);

  GraphAutomorphism f{{3, 2, 1, 0}, false};
  GraphAutomorphism back = automorphism_from_json(automorphism_to_json(f));
  CHECK(back.image == f.image);
  CHECK(back.partial == f.partial);
}

TEST_CASE("pipeline transcripts serialize as ordered documents") {
  CurvePair cp = genus2_i6();
  BicornSequence seq = nested_bicorn_sequence(cp);
  PipelineRun run = run_pipeline(cp, seq.bicorns);
  Json j = pipeline_to_json(run);
  CHECK(j["attempted"] == 2);
  CHECK(j["halted"] == "");
  REQUIRE(j["stages"].size() == 2);
  CHECK(j["stages"][0]["curve_route"] == Json::array({2}));
  CHECK(j["stages"][1]["curve_route"] == Json::array({0}));
  CHECK(j["stages"][0]["dual"] == true);
  CHECK(j["nesting"].size() == 1);
  TrackDocument stage2 = track_from_json(j["stages"][1]["track"]);
  CHECK(stage2.track.branch_count == 2);
}

TEST_CASE("csv emitters print exact columns") {
  CHECK(decimal6(Rat(1, 3)) == "0.333333");
  CHECK(decimal6(Rat(-1, 2)) == "-0.500000");
  CHECK(decimal6(Rat(7, 2)) == "3.500000");

  DeltaReport d8 = delta_four_point(cycle_graph(8), DeltaMode::exhaustive);
  std::string csv = csv_delta({{"cycle8", d8}});
  CHECK(csv == "graph,quadruples,delta_quarters,delta\ncycle8,70,8,2.0\n");

  MetricGraph line = path_graph(6);
  GraphAutomorphism shift;
  for (int v = 0; v < 6; ++v) shift.image.push_back(v + 1 < 6 ? v + 1 : -1);
  shift.partial = true;
  std::string tcsv = csv_translation(translation_length(line, shift, 0, 4));
  CHECK(tcsv ==
        "n,displacement_halves,displacement,per_step\n"
        "1,2,1.0,1\n2,4,2.0,1\n3,6,3.0,1\n4,8,4.0,1\n");

  std::string header = comment_header(7, digest64("input"));
  CHECK(header.rfind("# bicorn 0.1.0 seed=7 input=", 0) == 0);
  CHECK(digest64("input") == digest64("input"));
  CHECK(digest64("input") != digest64("other"));
  CHECK(digest64("input").size() == 16);
}

TEST_CASE("text files round trip through the helpers") {
  std::string path = "io_roundtrip_tmp.json";
  Json j = pair_to_json(genus2_i6());
  write_text_file(path, j.dump(2));
  Json back = parse_json(read_text_file(path));
  CHECK(pair_from_json(back).b_cycle == genus2_i6().b_cycle);
  std::remove(path.c_str());
  try {
    read_text_file("definitely_missing_file.json");
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
  try {
    parse_json("{broken");
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
}
