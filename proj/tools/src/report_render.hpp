#pragma once

#include <string>

#include <json.hpp>

#include "network_io.hpp"
#include "topoctrl/topoctrl.hpp"

namespace topoctrl::cli {

// Reports are built as JSON first; the text renderers below derive the
// human-readable form from the same JSON object, so the two renderings can
// never disagree about a fact.

nlohmann::json network_summary(const io::NetworkDocument& doc);

nlohmann::json json_subset(const StateSubset& s);
nlohmann::json json_edge(const EdgeKey& e);
nlohmann::json json_connecting(const ConnectingEdgeSet& edges);
nlohmann::json json_paths(const std::vector<Path>& paths);
nlohmann::json json_accessibility(const AssumptionReport& a);
nlohmann::json json_realization(const Realization& r);

// check: verdict + route-specific detail (paths/merge steps or witness),
// plus an optional numeric refutation block.
nlohmann::json check_report(const std::string& file, const io::NetworkDocument& doc,
                            const Verdict& verdict,
                            const PipelineResult* pipeline,  // null for brute force
                            const nlohmann::json& refutation);

nlohmann::json decompose_report(const std::string& file, const io::NetworkDocument& doc,
                                const std::vector<Path>& paths,
                                const std::set<NodeId>& uncovered);

nlohmann::json verify_report(const std::string& file, const io::NetworkDocument& doc,
                             const RankReport& report, const std::string& csv_path);

nlohmann::json assumptions_report(const std::string& file, const io::NetworkDocument& doc,
                                  const AssumptionReport& access,
                                  const RowRankRefutation& rr, std::uint64_t rr_seed,
                                  bool diag_declared, bool diag_feasible,
                                  int diag_resamples);

std::string render_text(const nlohmann::json& report);

}  // namespace topoctrl::cli
