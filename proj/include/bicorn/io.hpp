#pragma once
// Serialization: JSON documents for curve pairs, tracks, graphs and pipeline
// transcripts, DOT exporters, and exact CSV emitters. Every number that is a
// length travels doubled so the files round trip bit for bit.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicorn/coarse.hpp"
#include "bicorn/curvepair.hpp"
#include "bicorn/metricgraph.hpp"
#include "bicorn/models.hpp"
#include "bicorn/pipeline.hpp"
#include "bicorn/traintrack.hpp"

namespace bicorn {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

inline std::string digest64(const std::string& data) { return hex64(fnv1a64(data)); }

inline std::string comment_header(uint64_t seed, const std::string& input_digest) {
  return std::string("# bicorn ") + kVersion + " seed=" + std::to_string(seed) +
         " input=" + input_digest + "\n";
}

inline Json meta_json(uint64_t seed, const std::string& input_digest) {
  return Json{{"version", kVersion}, {"seed", seed}, {"input", input_digest}};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), errc::bad_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(bool(out), errc::bad_input, "cannot write " + path);
  out << content;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("malformed document: ") + e.what());
  }
}

// ---- curve pairs ----

inline Json pair_to_json(const CurvePair& cp) {
  Json j;
  std::vector<int> verts = cp.a_cycle;
  std::sort(verts.begin(), verts.end());
  j["vertices"] = verts;
  j["a_cycle"] = cp.a_cycle;
  j["b_cycle"] = cp.b_cycle;
  Json rot = Json::array();
  for (int v : verts) rot.push_back({v, cp.sign.at(v)});
  j["rotations"] = rot;
  j["genus"] = cp.genus;
  return j;
}

inline CurvePair pair_from_json(const Json& j) {
  try {
    CurvePair cp;
    cp.a_cycle = j.at("a_cycle").get<std::vector<int>>();
    cp.b_cycle = j.at("b_cycle").get<std::vector<int>>();
    cp.genus = j.at("genus").get<int>();
    for (const Json& entry : j.at("rotations")) {
      require(entry.is_array() && entry.size() == 2, errc::bad_input, "rotation entry shape");
      int v = entry[0].get<int>();
      int s = entry[1].get<int>();
      require(s == 1 || s == -1, errc::bad_input, "rotation sign must be +1 or -1");
      require(!cp.sign.count(v), errc::bad_input, "duplicate rotation for vertex");
      cp.sign[v] = s;
    }
    std::vector<int> verts = j.at("vertices").get<std::vector<int>>();
    std::sort(verts.begin(), verts.end());
    std::vector<int> froma = cp.a_cycle;
    std::sort(froma.begin(), froma.end());
    require(verts == froma, errc::bad_input, "vertices do not match a_cycle");
    for (int v : verts)
      require(cp.sign.count(v) > 0, errc::bad_input, "vertex missing a rotation");
    require(cp.genus >= 0, errc::bad_input, "negative genus");
    return cp;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("curve pair document: ") + e.what());
  }
}

inline Json sequence_to_json(const std::vector<CurvePair>& steps) {
  Json arr = Json::array();
  for (const CurvePair& cp : steps) arr.push_back(pair_to_json(cp));
  return arr;
}

inline std::string pair_to_dot(const CurvePair& cp) {
  std::ostringstream out;
  out << "graph pair {\n  node [shape=circle];\n";
  int n = cp.count();
  for (int i = 0; i < n; ++i) {
    out << "  v" << cp.a_cycle[i] << " -- v" << cp.a_cycle[(i + 1) % n]
        << " [color=\"#1f6fb2\", label=\"a\"];\n";
    out << "  v" << cp.b_cycle[i] << " -- v" << cp.b_cycle[(i + 1) % n]
        << " [color=\"#b23a1f\", style=dashed, label=\"b\"];\n";
  }
  for (const auto& [v, s] : cp.sign)
    out << "  v" << v << " [xlabel=\"" << (s > 0 ? "+" : "-") << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- train tracks ----

inline Json track_to_json(const TrainTrack& t, const std::vector<int>* weights = nullptr) {
  TrackIndex ix = build_track_index(t);
  Json j;
  j["genus"] = t.genus;
  j["switches"] = (int)t.switches.size();
  Json branches = Json::array();
  for (int b = 0; b < t.branch_count; ++b) {
    Json entry;
    for (int w = 0; w < 2; ++w) {
      const EndSeat& seat = ix.seat[end_token(b, w)];
      entry[w == 0 ? "end0" : "end1"] = {seat.sw, seat.side, seat.pos};
    }
    branches.push_back(entry);
  }
  j["branches"] = branches;
  if (weights) j["weights"] = *weights;
  return j;
}

struct TrackDocument {
  TrainTrack track;
  std::optional<std::vector<int>> weights;
};

inline TrackDocument track_from_json(const Json& j) {
  try {
    TrackDocument doc;
    doc.track.genus = j.at("genus").get<int>();
    int ns = j.at("switches").get<int>();
    require(ns > 0, errc::bad_input, "need at least one switch");
    doc.track.switches.resize(ns);
    const Json& branches = j.at("branches");
    doc.track.branch_count = (int)branches.size();
    std::vector<std::vector<std::vector<int>>> seat(ns);
    for (int s = 0; s < ns; ++s) seat[s].resize(2);
    for (int b = 0; b < doc.track.branch_count; ++b)
      for (int w = 0; w < 2; ++w) {
        std::vector<int> end =
            branches[b].at(w == 0 ? "end0" : "end1").get<std::vector<int>>();
        require(end.size() == 3, errc::bad_input, "branch end needs switch, side, position");
        require(end[0] >= 0 && end[0] < ns, errc::bad_input, "branch end switch out of range");
        require(end[1] == 0 || end[1] == 1, errc::bad_input, "branch end side must be 0 or 1");
        auto& side = seat[end[0]][end[1]];
        if ((int)side.size() <= end[2]) side.resize(end[2] + 1, -1);
        require(end[2] >= 0 && side[end[2]] == -1, errc::bad_input, "branch ends collide");
        side[end[2]] = end_token(b, w);
      }
    for (int s = 0; s < ns; ++s)
      for (int w = 0; w < 2; ++w) {
        for (int tok : seat[s][w])
          require(tok >= 0, errc::bad_input, "switch side has a hole");
        doc.track.switches[s].side[w] = seat[s][w];
      }
    if (j.count("weights")) doc.weights = j.at("weights").get<std::vector<int>>();
    return doc;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("track document: ") + e.what());
  }
}

inline std::string track_to_dot(const TrainTrack& t) {
  TrackIndex ix = build_track_index(t);
  std::ostringstream out;
  out << "graph track {\n  node [shape=box];\n";
  for (int b = 0; b < t.branch_count; ++b) {
    const EndSeat& e0 = ix.seat[end_token(b, 0)];
    const EndSeat& e1 = ix.seat[end_token(b, 1)];
    auto port = [](const EndSeat& s) {
      return std::string(s.side == 0 ? "L" : "R") + std::to_string(s.pos);
    };
    out << "  s" << e0.sw << " -- s" << e1.sw << " [label=\"b" << b << "\", taillabel=\""
        << port(e0) << "\", headlabel=\"" << port(e1) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline Json route_to_json(const RouteMap& m) {
  return Json{{"switch_image", m.switch_image}, {"branch_route", m.branch_route}};
}

inline Json pipeline_to_json(const PipelineRun& run) {
  Json j;
  j["attempted"] = run.attempted;
  j["halted"] = run.halted;
  Json stages = Json::array();
  for (const PipelineStage& st : run.stages) {
    Json s;
    s["arc"] = st.pre.arc;
    s["cuts"] = st.pre.cuts;
    s["pretrack"] = track_to_json(st.pre.pre.data);
    s["track"] = track_to_json(st.collapsed.track);
    s["onto_track"] = route_to_json(st.collapsed.onto_track);
    s["curve_route"] = st.curve.parallel_route;
    s["dual"] = st.dual;
    stages.push_back(s);
  }
  j["stages"] = stages;
  Json nest = Json::array();
  for (const RouteMap& m : run.nesting) nest.push_back(route_to_json(m));
  j["nesting"] = nest;
  return j;
}

// ---- metric graphs ----

inline Json graph_to_json(const MetricGraph& g, const SubsetFamily* ys = nullptr) {
  Json j;
  Json verts = Json::array();
  for (int v = 0; v < g.vertex_count; ++v) verts.push_back(vertex_name(g, v));
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) edges.push_back({e.u, e.v, e.len});
  j["edges"] = edges;
  Json subsets = Json::array();
  if (ys)
    for (size_t i = 0; i < ys->member.size(); ++i)
      subsets.push_back(Json{{"name", subset_name(*ys, (int)i)}, {"members", ys->member[i]}});
  j["subsets"] = subsets;
  return j;
}

struct GraphDocument {
  MetricGraph graph;
  SubsetFamily family;
};

inline GraphDocument graph_from_json(const Json& j) {
  try {
    GraphDocument doc;
    for (const Json& v : j.at("vertices")) {
      doc.graph.label.push_back(v.get<std::string>());
      ++doc.graph.vertex_count;
    }
    for (const Json& e : j.at("edges")) {
      require(e.is_array() && e.size() == 3, errc::bad_input, "edge needs endpoints and length");
      add_edge(doc.graph, e[0].get<int>(), e[1].get<int>(), e[2].get<Half>());
    }
    if (j.count("subsets"))
      for (const Json& s : j.at("subsets")) {
        doc.family.name.push_back(s.at("name").get<std::string>());
        doc.family.member.push_back(s.at("members").get<std::vector<int>>());
      }
    return doc;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("graph document: ") + e.what());
  }
}

inline Json automorphism_to_json(const GraphAutomorphism& f) {
  return Json{{"partial", f.partial}, {"image", f.image}};
}

inline GraphAutomorphism automorphism_from_json(const Json& j) {
  try {
    GraphAutomorphism f;
    f.partial = j.at("partial").get<bool>();
    f.image = j.at("image").get<std::vector<int>>();
    return f;
  } catch (const std::exception& e) {
    fail(errc::bad_input, std::string("automorphism document: ") + e.what());
  }
}

inline std::string graph_to_dot(const MetricGraph& g) {
  std::ostringstream out;
  out << "graph metric {\n  node [shape=ellipse];\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    std::string name = vertex_name(g, v);
    out << "  n" << v << " [label=\"" << name << "\"";
    if (name.rfind("cone:", 0) == 0) out << ", shape=diamond, style=filled, fillcolor=\"#d9d9d9\"";
    out << "];\n";
  }
  for (const GraphEdge& e : g.edges)
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << fmt_half(e.len) << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- CSV emitters, exact columns first ----

inline std::string decimal6(const Rat& r) {
  long long num = r.num < 0 ? -r.num : r.num;
  long long whole = num / r.den;
  long long frac = (__int128)(num % r.den) * 1000000 / r.den;
  std::string s = (r.num < 0 ? "-" : "") + std::to_string(whole) + ".";
  std::string f = std::to_string(frac);
  return s + std::string(6 - f.size(), '0') + f;
}

inline std::string csv_delta(const std::vector<std::pair<std::string, DeltaReport>>& rows) {
  std::ostringstream out;
  out << "graph,quadruples,delta_quarters,delta\n";
  for (const auto& [name, rep] : rows)
    out << name << "," << rep.quadruples << "," << rep.delta << "," << fmt_quarter(rep.delta)
        << "\n";
  return out.str();
}

inline std::string csv_translation(const TranslationReport& rep) {
  std::ostringstream out;
  out << "n,displacement_halves,displacement,per_step\n";
  for (int n = 1; n <= rep.steps; ++n) {
    Rat per(rep.displacement[n - 1], 2LL * n);
    out << n << "," << rep.displacement[n - 1] << "," << fmt_half(rep.displacement[n - 1]) << ","
        << per.str() << "\n";
  }
  return out.str();
}

inline std::string csv_separation(const std::string& name, const SeparationReport& rep) {
  std::ostringstream out;
  out << "family,well_halves,well_separated,elec_halves,elec_separated\n";
  out << name << "," << rep.well_separated << "," << fmt_half(rep.well_separated) << ","
      << rep.elec_separated << "," << fmt_half(rep.elec_separated) << "\n";
  return out.str();
}

inline std::string csv_drift(const DriftReport& rep) {
  std::ostringstream out;
  out << "n,survivors,mean_num,mean_den,mean\n";
  for (int k = 0; k < rep.length; ++k)
    out << (k + 1) << "," << rep.survivors[k] << "," << rep.mean[k].num << "," << rep.mean[k].den
        << "," << decimal6(rep.mean[k]) << "\n";
  return out.str();
}

}  // namespace bicorn
