// Command line front end: surgery, track, coarse, models, suite.
//
// Every artifact lands under --out with a version/seed/digest header: a
// comment line on text formats, a meta object on json documents. Exit codes:
// 0 on success, 1 when a suite criterion or regression comparison fails,
// 2 on bad input.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicorn/suite.hpp"
#include "bicorn/trackcycles.hpp"

namespace {

using namespace bicorn;

struct Cli {
  std::string input;
  std::string map_file;
  std::string out = "out";
  std::string fixtures = "fixtures";
  std::string filter;
  std::string kind = "farey";
  uint64_t seed = suite::kReferenceSeed;
  int jobs = 1;
  int budget_depth = 0;
  long long sample = 0;
  long long bound = 6;
  int radius = 6;
  int length = 8;
  int trials = 100;
  bool freeze = false;
  bool model_suite = false;
};

void emit(const Cli& c, const std::string& name, const std::string& bytes) {
  std::filesystem::create_directories(c.out);
  write_text_file(c.out + "/" + name, bytes);
  std::printf("wrote %s/%s (%zu bytes)\n", c.out.c_str(), name.c_str(), bytes.size());
}

std::string json_text(Json doc, const Cli& c, const std::string& digest) {
  doc["meta"] = meta_json(c.seed, digest);
  return doc.dump(2) + "\n";
}

// ------------------------------------------------------------------ surgery

int cmd_surgery(const Cli& c) {
  std::string text = read_text_file(c.input);
  std::string digest = digest64(text);
  CurvePair cp = pair_from_json(parse_json(text));
  validate_curve_pair(cp);
  SurgerySequence seq = curve_surgery_sequence(cp);

  Json doc;
  doc["input"] = pair_to_json(cp);
  doc["disjoint"] = cp.count() == 0;
  Json steps = Json::array();
  for (size_t k = 0; k < seq.steps.size(); ++k) {
    const SurgeryStep& st = seq.steps[k];
    Json row;
    row["arc"] = Json{{"index", st.arc.index},
                      {"start", st.arc.start},
                      {"end", st.arc.end},
                      {"returning", st.arc.returning}};
    row["piece"] = piece_name(st.choice);
    row["crossings_before"] = seq.curves_with_b[k].count();
    row["crossings_after"] = seq.curves_with_b[k + 1].count();
    steps.push_back(row);
  }
  doc["steps"] = steps;
  doc["curves"] = sequence_to_json(seq.curves_with_b);

  PipelineRun run;
  bool completed = false;
  if (cp.count() > 0) {
    BicornSequence bs = nested_bicorn_sequence(cp);
    completed = bs.completed;
    std::vector<Bicorn> bicorns = bs.bicorns;
    if (c.budget_depth > 0 && (int)bicorns.size() > c.budget_depth)
      bicorns.resize((size_t)c.budget_depth);
    run = run_pipeline(cp, bicorns);
  }
  doc["pipeline"] = pipeline_to_json(run);
  doc["completed"] = completed;

  emit(c, "surgery.json", json_text(doc, c, digest));
  emit(c, "pair.dot", comment_header(c.seed, digest) + pair_to_dot(cp));
  std::printf("%d crossings, %d steps, %d pipeline stages%s\n", cp.count(), seq.length(),
              (int)run.stages.size(), completed ? ", completed" : "");
  return 0;
}

// -------------------------------------------------------------------- track

int cmd_track(const Cli& c) {
  std::string text = read_text_file(c.input);
  std::string digest = digest64(text);
  TrackDocument td = track_from_json(parse_json(text));
  TrackReport rep = validate_track(td.track);

  Json doc;
  doc["track"] = track_to_json(td.track, td.weights ? &*td.weights : nullptr);
  Json faces = Json::array();
  for (const TrackFace& f : rep.census.faces)
    faces.push_back(Json{{"degree", f.degree()}, {"cusps", f.cusps}});
  doc["census"] = Json{{"faces", faces},
                       {"derived_genus", rep.census.derived_genus},
                       {"declared_genus", td.track.genus}};
  Json cycles = Json::array();
  for (const std::vector<int>& vc : vertex_cycles(td.track)) {
    Json row;
    row["weights"] = vc;
    row["switch_equal"] = switch_equal_int(td.track, vc);
    cycles.push_back(row);
  }
  doc["vertex_cycles"] = cycles;
  if (td.weights) doc["weights_switch_equal"] = switch_equal_int(td.track, *td.weights);
  RecurrenceReport rr = recurrence_report(td.track);
  doc["recurrence"] = Json{{"recurrent", rr.recurrent}, {"large", rr.large},
                           {"filling", rr.filling}};

  Json moves = Json::array();
  for (int b = 0; b < td.track.branch_count; ++b) {
    auto attempt = [&](const std::string& name, auto&& go) {
      Json row;
      row["branch"] = b;
      row["move"] = name;
      try {
        MoveResult mr = go();
        row["ok"] = true;
        row["branches_after"] = mr.track.branch_count;
      } catch (const error& e) {
        row["ok"] = false;
        row["error"] = errc_name(e.code());
      }
      moves.push_back(row);
    };
    for (SplitChoice ch : {SplitChoice::left, SplitChoice::right, SplitChoice::central})
      attempt(std::string("split-") + split_choice_name(ch),
              [&] { return split(td.track, b, ch); });
    attempt("shift", [&] { return shift(td.track, b); });
  }
  doc["moves"] = moves;

  emit(c, "track.json", json_text(doc, c, digest));
  emit(c, "track.dot", comment_header(c.seed, digest) + track_to_dot(td.track));
  std::printf("%d switches, %d branches, derived genus %d, %d vertex cycles\n",
              (int)td.track.switches.size(), td.track.branch_count,
              rep.census.derived_genus, (int)cycles.size());
  return 0;
}

// ------------------------------------------------------------------- coarse

Json path_record_json(const MetricGraph& g, const PathRecord& pr) {
  Json j;
  j["vertices"] = pr.vertices;
  Json labels = Json::array();
  for (int v : pr.vertices) labels.push_back(vertex_name(g, v));
  j["labels"] = labels;
  j["corner_index"] = pr.corner_index;
  Json segs = Json::array();
  for (Half s : pr.segment_length) segs.push_back(fmt_half(s));
  j["segment_length"] = segs;
  Json gps = Json::array();
  for (Quarter q : pr.corner_gp) gps.push_back(fmt_quarter(q));
  j["corner_gp"] = gps;
  j["k"] = pr.k_star.str();
  j["c"] = pr.c_star.str();
  return j;
}

int cmd_coarse(const Cli& c) {
  std::string text = read_text_file(c.input);
  std::string digest = digest64(text);
  GraphDocument gd = graph_from_json(parse_json(text));
  validate_graph(gd.graph);
  ElectrifiedGraph e = electrify(gd.graph, gd.family);
  std::string head = comment_header(c.seed, digest);

  Json elec = graph_to_json(e.graph, &e.family);
  elec["base_vertices"] = e.base_vertices;
  elec["cones"] = e.cone;
  emit(c, "electrified.json", json_text(elec, c, digest));

  DeltaMode mode = c.sample > 0 ? DeltaMode::sampled : DeltaMode::exhaustive;
  std::vector<std::pair<std::string, DeltaReport>> rows;
  rows.emplace_back("base", delta_four_point(gd.graph, mode, c.sample, c.seed));
  rows.emplace_back("electric", delta_four_point(e.graph, mode, c.sample, c.seed));
  emit(c, "delta.csv", head + csv_delta(rows));

  int m = (int)gd.family.member.size();
  if (m >= 3)
    emit(c, "separation.csv",
         head + csv_separation("family", separation_report(gd.graph, gd.family.member, e)));
  else
    std::printf("separation skipped: %d subsets\n", m);
  if (m >= 2)
    emit(c, "piecewise.json",
         json_text(path_record_json(gd.graph, piecewise_geodesic(gd.graph, gd.family.member)),
                   c, digest));

  if (!c.map_file.empty()) {
    GraphAutomorphism f = automorphism_from_json(parse_json(read_text_file(c.map_file)));
    validate_automorphism(gd.graph, f);
    GraphAutomorphism fe = extend_to_cones(e, f);
    int steps = c.budget_depth > 0 ? c.budget_depth : 8;
    emit(c, "translation.csv",
         head + csv_translation(translation_length(e.graph, fe, 0, steps)));
  }
  emit(c, "graph.dot", head + graph_to_dot(e.graph));
  std::printf("%d base vertices, %d subsets coned\n", e.base_vertices, m);
  return 0;
}

// ------------------------------------------------------------------- models

int cmd_models(const Cli& c) {
  std::string spec_text = "models kind=" + c.kind + " seed=" + std::to_string(c.seed);
  std::string digest = digest64(spec_text);
  std::string head = comment_header(c.seed, digest);

  if (c.model_suite) {
    suite::SuiteConfig scfg;
    scfg.seed = c.seed;
    scfg.fixtures_dir = c.fixtures;
    auto bundle = suite::artifact_bundle(scfg);
    for (const auto& [name, bytes] : bundle) emit(c, name, bytes);
    std::string drift = bundle.at("drift.csv");
    while (!drift.empty() && drift.front() == '#') drift.erase(0, drift.find('\n') + 1);
    std::string frozen;
    try {
      frozen = read_text_file(c.fixtures + "/regression/drift.csv");
    } catch (const error&) {
      std::printf("no frozen drift curve under %s/regression\n", c.fixtures.c_str());
      return 1;
    }
    if (drift != frozen) {
      std::printf("regenerated drift curve differs from the frozen copy\n");
      return 1;
    }
    std::printf("regenerated drift curve matches the frozen copy byte for byte\n");
    return 0;
  }

  if (c.kind == "farey") {
    FareyBall ball = farey_ball(c.bound);
    Json doc = graph_to_json(ball.graph);
    doc["bound"] = ball.bound;
    emit(c, "farey.json", json_text(doc, c, digest));
    emit(c, "farey.dot", head + graph_to_dot(ball.graph));
    std::printf("farey ball at bound %lld: %d slopes, %zu edges\n", ball.bound,
                ball.graph.vertex_count, ball.graph.edges.size());
    return 0;
  }
  if (c.kind == "tree") {
    FreeTreeBall ball = free_tree_ball(c.radius);
    SubsetFamily ys = all_cosets(ball, 'a');
    emit(c, "tree.json", json_text(graph_to_json(ball.graph, &ys), c, digest));
    ElectrifiedGraph e = electrify(ball.graph, ys);
    GraphAutomorphism f = extend_to_cones(e, mult_by(ball, "b"));
    emit(c, "translation.csv",
         head + csv_translation(translation_length(e.graph, f, ball.index.at(""), c.radius)));
    std::printf("radius %d ball: %d words, %zu a-cosets coned\n", c.radius,
                ball.graph.vertex_count, ys.member.size());
    return 0;
  }
  if (c.kind == "drift") {
    FreeTreeBall ball = free_tree_ball(c.radius);
    WalkSpec spec;
    for (const char* w : {"a", "A", "b", "B"}) spec.gens.emplace_back(mult_by(ball, w), 1);
    spec.length = c.length;
    spec.trials = c.trials;
    spec.seed = c.seed;
    DriftReport rep = estimate_drift(ball.graph, spec, ball.index.at(""), Rat(1, 4));
    emit(c, "drift.csv", head + csv_drift(rep));
    std::printf("%d trials of length %d: %d censored, %d hits\n", rep.trials, rep.length,
                rep.censored, rep.hits);
    return 0;
  }
  fail(errc::bad_input, "unknown model kind " + c.kind);
}

// -------------------------------------------------------------------- suite

int cmd_suite(const Cli& c) {
  suite::SuiteConfig scfg;
  scfg.seed = c.seed;
  scfg.fixtures_dir = c.fixtures;
  scfg.filter = c.filter;
  scfg.freeze = c.freeze;
  suite::SuiteResult res = suite::run_acceptance(scfg);
  std::fputs(suite::suite_lines(res).c_str(), stdout);
  emit(c, "summary.json", suite::suite_summary(scfg, res).dump(2) + "\n");
  if (c.filter.empty() && !c.freeze)
    for (const auto& [name, bytes] : suite::artifact_bundle(scfg)) emit(c, name, bytes);
  return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curve pair surgery, train tracks and electrified graphs"};
  app.require_subcommand(1);
  Cli c;

  auto globals = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "input document")->envname("BICORN_INPUT");
    sub->add_option("--out", c.out, "output directory")->envname("BICORN_OUT");
    sub->add_option("--seed", c.seed, "seed stamped into outputs")->envname("BICORN_SEED");
    sub->add_option("--jobs", c.jobs, "reserved; all computations run single threaded")
        ->check(CLI::PositiveNumber)
        ->envname("BICORN_JOBS");
    sub->add_option("--budget-depth", c.budget_depth, "stage or step cap, 0 for no cap")
        ->envname("BICORN_BUDGET_DEPTH");
    sub->add_option("--sample", c.sample, "sampled quadruples, 0 for exhaustive")
        ->envname("BICORN_SAMPLE");
    sub->add_option("--filter", c.filter, "criterion name substring")
        ->envname("BICORN_FILTER");
    return sub;
  };

  CLI::App* surgery = globals(app.add_subcommand("surgery", "surgery sequence and pipeline"));
  CLI::App* track = globals(app.add_subcommand("track", "track census, cycles and moves"));
  CLI::App* coarse = globals(app.add_subcommand("coarse", "electrify and measure a graph"));
  coarse->add_option("--map", c.map_file, "automorphism document for translation lengths");
  CLI::App* models = globals(app.add_subcommand("models", "model instance generators"));
  models->add_option("--kind", c.kind, "farey, tree or drift")
      ->check(CLI::IsMember({"farey", "tree", "drift"}));
  models->add_option("--bound", c.bound, "farey denominator bound");
  models->add_option("--radius", c.radius, "free group ball radius");
  models->add_option("--length", c.length, "walk length");
  models->add_option("--trials", c.trials, "walk trials");
  models->add_flag("--model-suite", c.model_suite,
                   "regenerate the regression artifacts and compare");
  CLI::App* suite_cmd = globals(app.add_subcommand("suite", "run the acceptance criteria"));
  suite_cmd->add_option("--fixtures", c.fixtures, "fixtures directory")
      ->envname("BICORN_FIXTURES");
  suite_cmd->add_flag("--freeze", c.freeze, "rewrite the regression files from this run");
  models->add_option("--fixtures", c.fixtures, "fixtures directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (surgery->parsed()) return cmd_surgery(c);
    if (track->parsed()) return cmd_track(c);
    if (coarse->parsed()) return cmd_coarse(c);
    if (models->parsed()) return cmd_models(c);
    if (suite_cmd->parsed()) return cmd_suite(c);
  } catch (const error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  return 0;
}
