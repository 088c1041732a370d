#include "asdim/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "asdim/errors.hpp"

namespace asdim {

namespace {

std::vector<EdgePair> edges_from_json(const Json& j) {
  std::vector<EdgePair> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

Json edges_to_json(const std::vector<EdgePair>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = edges_to_json(g.edges());
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("edges")) {
    fail(ErrorCode::ParseError, "graph json needs \"vertices\" and \"edges\"");
  }
  return Graph::build(j["vertices"].get<int>(), edges_from_json(j["edges"]));
}

Json mass_to_json(const MassAssignment& lambda) {
  Json j = Json::object();
  for (Vertex x = 0; x < lambda.vertex_count(); ++x) {
    Json row = Json::object();
    for (const auto& [y, mass] : lambda.row(x)) {
      row[std::to_string(y)] = mass.str();
    }
    j[std::to_string(x)] = std::move(row);
  }
  return j;
}

MassAssignment mass_from_json(const Json& j, int vertex_count) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "mass json must be an object");
  std::vector<MassRow> rows(vertex_count);
  std::vector<char> present(vertex_count, 0);
  for (const auto& [key, row_json] : j.items()) {
    int x = -1;
    try {
      x = std::stoi(key);
    } catch (...) {
      fail(ErrorCode::ParseError, "bad vertex key \"" + key + "\"");
    }
    if (x < 0 || x >= vertex_count) {
      fail(ErrorCode::ParseError, "vertex key " + key + " out of range");
    }
    present[x] = 1;
    MassRow row;
    for (const auto& [ykey, value] : row_json.items()) {
      int y = -1;
      try {
        y = std::stoi(ykey);
      } catch (...) {
        fail(ErrorCode::ParseError, "bad vertex key \"" + ykey + "\"");
      }
      row.emplace_back(y, Rational::parse(value.get<std::string>()));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows[x] = std::move(row);
  }
  for (int x = 0; x < vertex_count; ++x) {
    if (!present[x]) {
      fail(ErrorCode::InvalidMass, "mass row missing for vertex " + std::to_string(x));
    }
  }
  return explicit_lambda(std::move(rows));
}

Json action_to_json(const FiniteAction& a) {
  Json j;
  j["points"] = a.points();
  j["generators"] = a.generators();
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

FiniteAction action_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("generators")) {
    fail(ErrorCode::ParseError, "action json needs \"points\" and \"generators\"");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return FiniteAction::create(j["points"].get<int>(),
                              j["generators"].get<std::vector<std::vector<int>>>(),
                              std::move(labels));
}

Json words_to_json(const std::vector<GroupWord>& words) {
  Json j;
  j["words"] = words;
  return j;
}

std::vector<GroupWord> words_from_json(const Json& j) {
  if (!j.contains("words")) fail(ErrorCode::ParseError, "words json needs \"words\"");
  return j["words"].get<std::vector<GroupWord>>();
}

Json theta_to_json(const ThetaTable& t) {
  Json j = Json::object();
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const auto& [u, v] = t.edges()[e];
    j[std::to_string(u) + "->" + std::to_string(v)] = t.forward(e).str();
    j[std::to_string(v) + "->" + std::to_string(u)] = t.reverse(e).str();
  }
  return j;
}

ThetaTable theta_from_json(const Json& j) {
  std::vector<std::pair<EdgePair, Rational>> fwd_entries, rev_entries;
  for (const auto& [key, value] : j.items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos) fail(ErrorCode::ParseError, "bad theta key");
    int x = -1, y = -1;
    try {
      x = std::stoi(key.substr(0, arrow));
      y = std::stoi(key.substr(arrow + 2));
    } catch (...) {
      fail(ErrorCode::ParseError, "bad theta key \"" + key + "\"");
    }
    Rational t = Rational::parse(value.get<std::string>());
    if (x < y) {
      fwd_entries.push_back({{x, y}, t});
    } else if (y < x) {
      rev_entries.push_back({{y, x}, t});
    } else {
      fail(ErrorCode::ParseError, "theta key is a self-loop");
    }
  }
  std::sort(fwd_entries.begin(), fwd_entries.end());
  std::sort(rev_entries.begin(), rev_entries.end());
  if (fwd_entries.size() != rev_entries.size()) {
    fail(ErrorCode::ParseError, "theta table misses a direction");
  }
  std::vector<EdgePair> edges;
  std::vector<Rational> fwd, rev;
  for (std::size_t i = 0; i < fwd_entries.size(); ++i) {
    if (fwd_entries[i].first != rev_entries[i].first) {
      fail(ErrorCode::ParseError, "theta table misses a direction");
    }
    edges.push_back(fwd_entries[i].first);
    fwd.push_back(fwd_entries[i].second);
    rev.push_back(rev_entries[i].second);
  }
  return ThetaTable(std::move(edges), std::move(fwd), std::move(rev));
}

Json orientation_to_json(const OrientedPartition& p) {
  Json j;
  j["R0"] = edges_to_json(p.r0());
  j["R1"] = edges_to_json(p.r1());
  Json arrows = Json::array();
  for (const auto& [x, y] : p.arrows()) arrows.push_back({x, y});
  j["arrows"] = std::move(arrows);
  return j;
}

OrientedPartition orientation_from_json(const Json& j) {
  if (!j.contains("R0") || !j.contains("R1") || !j.contains("arrows")) {
    fail(ErrorCode::ParseError, "orientation json needs R0, R1 and arrows");
  }
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (const auto& a : j["arrows"]) {
    arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return OrientedPartition::from_parts(edges_from_json(j["R0"]),
                                       edges_from_json(j["R1"]), std::move(arrows));
}

Json deletion_to_json(const DeletionSet& d) {
  Json j;
  j["r"] = d.r.str();
  j["Q"] = edges_to_json(d.q);
  j["Q0"] = edges_to_json(d.q0);
  return j;
}

DeletionSet deletion_from_json(const Json& j) {
  if (!j.contains("r") || !j.contains("Q") || !j.contains("Q0")) {
    fail(ErrorCode::ParseError, "deletion json needs r, Q and Q0");
  }
  DeletionSet d;
  d.r = Rational::parse(j["r"].get<std::string>());
  d.q = edges_from_json(j["Q"]);
  d.q0 = edges_from_json(j["Q0"]);
  return d;
}

Json witness_to_json(const CoverWitness& w) {
  Json j;
  j["r"] = w.r.str();
  Json blocks = Json::array();
  for (const auto& members : w.partition.blocks()) blocks.push_back(members);
  j["blocks"] = std::move(blocks);
  j["max_classes_met"] = w.max_classes_met;
  j["diameter_bound"] = w.diameter_bound.str();
  return j;
}

CoverWitness witness_from_json(const Json& j) {
  for (const char* key : {"r", "blocks", "max_classes_met", "diameter_bound"}) {
    if (!j.contains(key)) {
      fail(ErrorCode::ParseError, std::string("witness json needs \"") + key + "\"");
    }
  }
  CoverWitness w;
  w.r = Rational::parse(j["r"].get<std::string>());
  auto blocks = j["blocks"].get<std::vector<std::vector<Vertex>>>();
  int n = 0;
  for (const auto& b : blocks) {
    for (Vertex v : b) n = std::max(n, v + 1);
  }
  w.partition = EquivPartition::from_blocks(n, blocks);
  w.max_classes_met = j["max_classes_met"].get<int>();
  w.diameter_bound = Rational::parse(j["diameter_bound"].get<std::string>());
  return w;
}

Json conditions_to_json(const ConditionsReport& rep) {
  auto item = [](const ConditionItem& c) {
    Json j;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
  };
  Json j;
  j["C1"] = item(rep.c1);
  j["C2"] = item(rep.c2);
  j["C3"] = item(rep.c3);
  j["C4"] = item(rep.c4);
  j["C5"] = item(rep.c5);
  j["pass"] = rep.all_pass();
  return j;
}

Json cover_check_to_json(const CoverCheck& check) {
  Json j;
  j["max_classes_met"] = check.max_classes_met;
  j["max_diameter"] = check.max_diameter;
  j["pass"] = check.pass;
  j["violations"] = check.violations;
  return j;
}

Json pipeline_report_json(const PipelineArtifacts& art) {
  Json j;
  j["radius"] = art.r.str();
  j["defect_gate"] = {{"radius", art.defect_gate_radius.str()},
                      {"bound", kMaxDefect.str()},
                      {"pass", true}};
  j["conditions"] = conditions_to_json(art.conditions);
  j["conditions_value"] = art.conditions_value.str();
  j["deletion"] = {{"q_size", art.deletion.q.size()},
                   {"q0_size", art.deletion.q0.size()},
                   {"component_bound", art.conditions_value.str()},
                   {"residual_component_max", art.residual_component_max},
                   {"pass", Rational(art.residual_component_max) <= art.conditions_value}};
  j["q_separation"] = {{"pass", art.q_separation.pass},
                       {"detail", art.q_separation.detail}};
  j["functional_cover"] = {{"radius", art.functional_witness.r.str()},
                           {"max_classes_met", art.functional_witness.max_classes_met},
                           {"class_bound", 2},
                           {"diameter_bound", art.functional_witness.diameter_bound.str()},
                           {"pass", art.functional_witness.max_classes_met <= 2}};
  j["witness"] = {{"radius", art.witness.r.str()},
                  {"max_classes_met", art.witness.max_classes_met},
                  {"class_bound", 4},
                  {"diameter_bound", art.witness.diameter_bound.str()},
                  {"verify", cover_check_to_json(art.witness_check)},
                  {"pass", art.witness.max_classes_met <= 4 && art.witness_check.pass}};
  j["overall_pass"] = art.pass;
  return j;
}

Json nested_report_json(const NestedReport& rep) {
  Json j;
  Json levels = Json::array();
  for (const auto& level : rep.levels) {
    Json l;
    l["metric_ok"] = level.metric_ok;
    l["pairs_checked"] = level.pairs_checked;
    if (!level.detail.empty()) l["detail"] = level.detail;
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  Json parts = Json::array();
  for (const auto& p : rep.partitions) parts.push_back(p.block_count());
  j["component_counts"] = std::move(parts);
  j["refinement_ok"] = rep.refinement_ok;
  j["pass"] = rep.pass;
  return j;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string orientation_to_dot(const Graph& g, const OrientedPartition& p) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  }
  for (const auto& [x, y] : p.arrows()) os << "  " << x << " -> " << y << ";\n";
  for (const auto& [u, v] : p.r1()) {
    os << "  " << u << " -> " << v << " [dir=none, style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Internal, "cannot open " + tmp);
    out << content;
    if (!out.flush()) fail(ErrorCode::Internal, "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    fail(ErrorCode::Internal, "cannot rename " + tmp + " to " + path);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid json in ") + path + ": " + e.what());
  }
  return j;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace asdim
