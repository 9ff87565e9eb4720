#include "report_render.hpp"

#include <algorithm>
#include <sstream>

namespace topoctrl::cli {

using nlohmann::json;

json network_summary(const io::NetworkDocument& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["n"] = doc.net.n;
  j["m"] = static_cast<int>(doc.net.input_assignment.size());
  return j;
}

json json_subset(const StateSubset& s) {
  json a = json::array();
  for (NodeId v : s.members()) a.push_back(v);
  return a;
}

json json_edge(const EdgeKey& e) { return json::array({e.first, e.second}); }

json json_connecting(const ConnectingEdgeSet& edges) {
  json a = json::array();
  for (const ConnectingEdge& e : edges) a.push_back(json::array({e.a, e.b}));
  return a;
}

json json_paths(const std::vector<Path>& paths) {
  json a = json::array();
  for (const Path& p : paths) {
    json e;
    e["input"] = p.root_input;
    e["nodes"] = p.nodes;
    a.push_back(std::move(e));
  }
  return a;
}

json json_accessibility(const AssumptionReport& a) {
  json j;
  j["all_accessible"] = a.all_accessible;
  json bad = json::array();
  for (const auto& [node, ok] : a.accessible)
    if (!ok) bad.push_back(node);
  j["inaccessible_nodes"] = std::move(bad);
  return j;
}

json json_realization(const Realization& r) {
  json j;
  json w = json::array();
  for (const auto& [key, value] : r.weights) {
    json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["weight"] = value;
    w.push_back(std::move(e));
  }
  j["weights"] = std::move(w);
  j["trial"] = r.trial;
  j["resamples"] = r.resamples;
  return j;
}

json check_report(const std::string& file, const io::NetworkDocument& doc,
                  const Verdict& verdict, const PipelineResult* pipeline,
                  const json& refutation) {
  json j;
  j["command"] = "check";
  j["file"] = file;
  j["network"] = network_summary(doc);
  j["method"] = pipeline ? "pipeline" : "brute-force";
  j["verdict"] = to_string(verdict.status);
  j["note"] = verdict.note;
  j["witness"] = verdict.witness ? json_subset(*verdict.witness) : json(nullptr);
  if (pipeline) {
    j["paths"] = json_paths(pipeline->paths);
    json steps = json::array();
    for (const MergeStep& s : pipeline->report.steps) {
      json e;
      e["incoming_path"] = s.incoming_index;
      e["found"] = json_connecting(s.found);
      e["accepted"] = json_connecting(s.accepted);
      e["discarded"] = json_connecting(s.discarded);
      e["blocking_subset"] = s.blocking ? json_subset(*s.blocking) : json(nullptr);
      steps.push_back(std::move(e));
    }
    j["merge_steps"] = std::move(steps);
    json discarded = json::array();
    for (const EdgeKey& e : pipeline->report.discarded_total) discarded.push_back(json_edge(e));
    j["discarded_edges"] = std::move(discarded);
    j["uncovered_nodes"] = json(pipeline->report.uncovered_nodes);
  }
  if (verdict.assumptions) j["accessibility"] = json_accessibility(*verdict.assumptions);
  j["refutation"] = refutation;
  return j;
}

json decompose_report(const std::string& file, const io::NetworkDocument& doc,
                      const std::vector<Path>& paths, const std::set<NodeId>& uncovered) {
  json j;
  j["command"] = "decompose";
  j["file"] = file;
  j["network"] = network_summary(doc);
  j["paths"] = json_paths(paths);
  j["covered"] = uncovered.empty();
  j["uncovered_nodes"] = json(uncovered);
  return j;
}

json verify_report(const std::string& file, const io::NetworkDocument& doc,
                   const RankReport& report, const std::string& csv_path) {
  json j;
  j["command"] = "verify";
  j["file"] = file;
  j["network"] = network_summary(doc);
  j["trials"] = report.trials;
  j["mode"] = to_string(report.mode);
  j["seed"] = report.seed;
  j["full_rank"] = doc.net.n;
  int mn = doc.net.n, mx = 0;
  if (!report.ranks.empty()) {
    mn = *std::min_element(report.ranks.begin(), report.ranks.end());
    mx = *std::max_element(report.ranks.begin(), report.ranks.end());
  }
  j["min_rank"] = mn;
  j["max_rank"] = mx;
  j["deficient_count"] = static_cast<int>(report.deficient_trials.size());
  j["deficient_trials"] = report.deficient_trials;
  j["resamples"] = report.resamples;
  j["csv"] = csv_path.empty() ? json(nullptr) : json(csv_path);
  return j;
}

json assumptions_report(const std::string& file, const io::NetworkDocument& doc,
                        const AssumptionReport& access, const RowRankRefutation& rr,
                        std::uint64_t rr_seed, bool diag_declared, bool diag_feasible,
                        int diag_resamples) {
  json j;
  j["command"] = "assumptions";
  j["file"] = file;
  j["network"] = network_summary(doc);
  j["accessibility"] = json_accessibility(access);
  json r;
  r["trials"] = rr.trials_run;
  r["seed"] = rr_seed;
  r["refuted"] = rr.refuted;
  if (rr.refuted && rr.realization) {
    r["trial"] = rr.realization->trial;
    r["realization"] = json_realization(*rr.realization);
  } else {
    r["trial"] = nullptr;
  }
  j["row_rank"] = std::move(r);
  json d;
  d["declared"] = diag_declared;
  d["feasible"] = diag_feasible;
  d["resamples"] = diag_declared ? json(diag_resamples) : json(nullptr);
  j["diagonal"] = std::move(d);
  return j;
}

namespace {

std::string fmt_edge_array(const json& e) {
  std::ostringstream os;
  os << "(" << e[0].get<int>() << "," << e[1].get<int>() << ")";
  return os.str();
}

std::string fmt_edge_list(const json& a) {
  if (a.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : a) {
    if (!first) os << " ";
    os << fmt_edge_array(e);
    first = false;
  }
  return os.str();
}

std::string fmt_node_set(const json& a) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& v : a) {
    if (!first) os << ",";
    os << v.get<int>();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string fmt_node_list(const json& a) {
  if (a.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : a) {
    if (!first) os << " ";
    os << v.get<int>();
    first = false;
  }
  return os.str();
}

void render_network_line(std::ostringstream& os, const json& j) {
  const json& net = j["network"];
  os << "network: ";
  if (net.contains("name")) os << net["name"].get<std::string>() << " ";
  os << "(n=" << net["n"].get<int>() << ", m=" << net["m"].get<int>() << ")\n";
}

void render_accessibility(std::ostringstream& os, const json& acc) {
  if (acc["all_accessible"].get<bool>()) {
    os << "accessibility: every state node reaches an input\n";
  } else {
    os << "accessibility: nodes without a walk to any input: "
       << fmt_node_list(acc["inaccessible_nodes"]) << "\n";
  }
}

void render_paths(std::ostringstream& os, const json& paths) {
  os << "paths:\n";
  if (paths.empty()) os << "  (none)\n";
  for (const auto& p : paths)
    os << "  input " << p["input"].get<int>() << ": " << fmt_node_list(p["nodes"]) << "\n";
}

std::string render_check(const json& j) {
  std::ostringstream os;
  os << "check " << j["file"].get<std::string>() << "\n";
  render_network_line(os, j);
  const bool pipeline = j["method"] == "pipeline";
  os << "method: "
     << (pipeline ? "path decomposition + graph merging" : "exhaustive subset certification")
     << "\n";
  if (pipeline) {
    render_paths(os, j["paths"]);
    for (const auto& s : j["merge_steps"]) {
      os << "merge step " << s["incoming_path"].get<int>() << ": found "
         << fmt_edge_list(s["found"]) << "; accepted " << fmt_edge_list(s["accepted"]);
      if (!s["discarded"].empty()) os << "; discarded " << fmt_edge_list(s["discarded"]);
      if (!s["blocking_subset"].is_null())
        os << "; full set blocked by subset " << fmt_node_set(s["blocking_subset"]);
      os << "\n";
    }
    os << "uncovered state nodes: " << fmt_node_list(j["uncovered_nodes"]) << "\n";
    os << "discarded edges: " << fmt_edge_list(j["discarded_edges"]) << "\n";
  }
  if (!j["witness"].is_null()) os << "witness: " << fmt_node_set(j["witness"]) << "\n";
  if (j.contains("accessibility")) render_accessibility(os, j["accessibility"]);
  if (!j["refutation"].is_null()) {
    const json& r = j["refutation"];
    os << "numeric refutation: trial " << r["trial"].get<int>() << " of "
       << r["trials"].get<int>() << " (" << r["mode"].get<std::string>() << ", seed "
       << r["seed"].get<std::uint64_t>() << ") has controllability-matrix rank "
       << r["rank"].get<int>() << " < " << r["full_rank"].get<int>() << "\n";
  }
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
  const std::string note = j["note"].get<std::string>();
  if (!note.empty()) os << "note: " << note << "\n";
  return os.str();
}

std::string render_decompose(const json& j) {
  std::ostringstream os;
  os << "decompose " << j["file"].get<std::string>() << "\n";
  render_network_line(os, j);
  render_paths(os, j["paths"]);
  if (j["covered"].get<bool>()) {
    os << "coverage: every state node lies on a path\n";
  } else {
    os << "warning: uncovered state nodes: " << fmt_node_list(j["uncovered_nodes"])
       << "\n";
  }
  return os.str();
}

std::string render_verify(const json& j) {
  std::ostringstream os;
  os << "verify " << j["file"].get<std::string>() << "\n";
  render_network_line(os, j);
  os << "trials: " << j["trials"].get<int>() << ", mode: " << j["mode"].get<std::string>()
     << ", seed: " << j["seed"].get<std::uint64_t>() << "\n";
  os << "rank: full=" << j["full_rank"].get<int>() << " min=" << j["min_rank"].get<int>()
     << " max=" << j["max_rank"].get<int>() << "\n";
  const int deficient = j["deficient_count"].get<int>();
  os << "deficient trials: " << deficient;
  if (deficient > 0) {
    os << " (";
    const auto& list = j["deficient_trials"];
    for (int k = 0; k < std::min<int>(10, static_cast<int>(list.size())); ++k) {
      if (k) os << ",";
      os << list[k].get<int>();
    }
    if (list.size() > 10) os << ",...";
    os << ")";
  }
  os << "\n";
  os << "resamples: " << j["resamples"].get<int>() << "\n";
  if (!j["csv"].is_null()) os << "csv: " << j["csv"].get<std::string>() << "\n";
  return os.str();
}

std::string render_assumptions(const json& j) {
  std::ostringstream os;
  os << "assumptions " << j["file"].get<std::string>() << "\n";
  render_network_line(os, j);
  render_accessibility(os, j["accessibility"]);
  const json& r = j["row_rank"];
  if (r["refuted"].get<bool>()) {
    os << "row rank: REFUTED at trial " << r["trial"].get<int>() << " of "
       << r["trials"].get<int>() << " (seed " << r["seed"].get<std::uint64_t>()
       << "): a sign-consistent [L,B] with deficient row rank exists\n";
  } else {
    os << "row rank: no refutation in " << r["trials"].get<int>() << " trials (seed "
       << r["seed"].get<std::uint64_t>() << ")\n";
  }
  const json& d = j["diagonal"];
  if (!d["declared"].get<bool>()) {
    os << "diagonal signs: not declared (coupling-derived diagonal)\n";
  } else if (d["feasible"].get<bool>()) {
    os << "diagonal signs: declared and realizable (" << d["resamples"].get<int>()
       << " resamples)\n";
  } else {
    os << "diagonal signs: declared but NOT realizable with sign-consistent couplings\n";
  }
  return os.str();
}

}  // namespace

std::string render_text(const json& report) {
  const std::string cmd = report.at("command").get<std::string>();
  if (cmd == "check") return render_check(report);
  if (cmd == "decompose") return render_decompose(report);
  if (cmd == "verify") return render_verify(report);
  if (cmd == "assumptions") return render_assumptions(report);
  throw Error("render_text: unknown command " + cmd);
}

}  // namespace topoctrl::cli
