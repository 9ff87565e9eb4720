#include "topoctrl/merge.hpp"

#include <algorithm>
#include <sstream>

namespace topoctrl {

namespace {

void require_disjoint(const Graph& ga, const Graph& gb) {
  for (NodeId s : gb.states)
    if (ga.has_state(s)) {
      std::ostringstream os;
      os << "graphs overlap at state node " << s;
      throw Error(os.str());
    }
}

// Disjoint union of two graphs plus extra connecting edges (unchecked).
Graph union_with_edges(const Graph& ga, const Graph& gb, const ConnectingEdgeSet& extra) {
  Graph g;
  g.n = std::max(ga.n, gb.n);
  g.m = std::max(ga.m, gb.m);
  for (const Graph* part : {&ga, &gb}) {
    g.states.insert(part->states.begin(), part->states.end());
    g.inputs.insert(part->inputs.begin(), part->inputs.end());
    g.state_edges.insert(part->state_edges.begin(), part->state_edges.end());
    g.input_edges.insert(part->input_edges.begin(), part->input_edges.end());
    for (const auto& [v, nv] : part->adj) g.adj[v].insert(nv.begin(), nv.end());
  }
  for (const ConnectingEdge& e : extra) {
    if (!ga.has_state(e.a) || !gb.has_state(e.b)) {
      std::ostringstream os;
      os << "connecting edge (" << e.a << "," << e.b
         << ") does not run from the first graph to the second";
      throw Error(os.str());
    }
    g.state_edges.insert(e.key());
    g.adj[e.a].insert(e.b);
    g.adj[e.b].insert(e.a);
  }
  return g;
}

std::string render_edges(const ConnectingEdgeSet& edges) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ",";
    os << "(" << edges[i].a << "," << edges[i].b << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace

ConnectingEdgeSet connecting_edges(const Graph& ga, const Graph& gb,
                                   const SignedNetwork& net) {
  require_disjoint(ga, gb);
  ConnectingEdgeSet out;
  for (const auto& [e, s] : net.state_edge_signs) {
    (void)s;
    const auto [i, j] = e;
    if (ga.has_state(i) && gb.has_state(j)) out.push_back({i, j});
    else if (ga.has_state(j) && gb.has_state(i)) out.push_back({j, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<StateSubset> merge_condition(const Graph& ga, const Graph& gb,
                                           const ConnectingEdgeSet& candidate,
                                           int cap) {
  require_disjoint(ga, gb);
  const Graph merged = union_with_edges(ga, gb, candidate);
  const int size = static_cast<int>(merged.states.size());
  if (size > cap) {
    std::ostringstream os;
    os << "merge condition over " << size << " state nodes exceeds the enumeration cap ("
       << cap << ")";
    throw CapExceededError(os.str());
  }
  const std::vector<NodeId> universe(merged.states.begin(), merged.states.end());
  std::optional<StateSubset> blocking;
  for_each_subset_card_lex(universe, [&](const StateSubset& alpha) {
    if (!find_dedicated_node(merged, alpha)) {
      blocking = alpha;
      return false;
    }
    return true;
  });
  return blocking;
}

EdgeSelection largest_edge_set(const Graph& ga, const Graph& gb,
                               const ConnectingEdgeSet& all_edges,
                               int edge_cap, int subset_cap) {
  if (static_cast<int>(all_edges.size()) > edge_cap) {
    std::ostringstream os;
    os << "candidate connecting-edge set of size " << all_edges.size()
       << " exceeds the subset-search cap (" << edge_cap << ")";
    throw CapExceededError(os.str());
  }
  ConnectingEdgeSet sorted = all_edges;
  std::sort(sorted.begin(), sorted.end());

  std::vector<NodeId> indices(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) indices[i] = static_cast<NodeId>(i);

  EdgeSelection sel;
  for (int k = static_cast<int>(sorted.size()); k >= 0; --k) {
    ConnectingEdgeSet winner;
    const bool complete = for_each_combination(indices, k, [&](const std::vector<NodeId>& combo) {
      ConnectingEdgeSet subset;
      subset.reserve(combo.size());
      for (NodeId idx : combo) subset.push_back(sorted[static_cast<std::size_t>(idx)]);
      const auto blocking = merge_condition(ga, gb, subset, subset_cap);
      if (!blocking) {
        winner = std::move(subset);
        return false;
      }
      if (k == static_cast<int>(sorted.size()) && !sel.full_set_blocking)
        sel.full_set_blocking = blocking;
      return true;
    });
    if (!complete) {
      sel.accepted = std::move(winner);
      break;
    }
  }

  std::set<std::pair<NodeId, NodeId>> accepted_keys;
  for (const ConnectingEdge& e : sel.accepted) accepted_keys.insert({e.a, e.b});
  for (const ConnectingEdge& e : sorted)
    if (!accepted_keys.count({e.a, e.b})) sel.discarded.push_back(e);
  return sel;
}

Graph merge_graphs(const Graph& ga, const Graph& gb,
                   const ConnectingEdgeSet& accepted, int cap) {
  const auto blocking = merge_condition(ga, gb, accepted, cap);
  if (blocking) {
    std::ostringstream os;
    os << "merge_graphs precondition violated: edge set " << render_edges(accepted)
       << " does not satisfy the merge condition";
    throw Error(os.str());
  }
  return union_with_edges(ga, gb, accepted);
}

MergeReport graph_merging(const std::vector<Path>& paths, const SignedNetwork& net,
                          int cap) {
  net.validate();
  MergeReport report;

  std::set<NodeId> covered;
  for (const Path& p : paths) covered.insert(p.nodes.begin(), p.nodes.end());
  for (NodeId i = 1; i <= net.n; ++i)
    if (!covered.count(i)) report.uncovered_nodes.insert(i);

  if (paths.empty()) {
    report.final_graph = make_subgraph(net, {}, {});
    for (const auto& [e, s] : net.state_edge_signs) {
      (void)s;
      report.discarded_total.push_back(e);
    }
    return report;
  }

  Graph acc = path_subgraph(net, paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const Graph incoming = path_subgraph(net, paths[i]);
    MergeStep step;
    step.incoming_index = static_cast<int>(i) + 1;
    step.found = connecting_edges(acc, incoming, net);
    EdgeSelection sel = largest_edge_set(acc, incoming, step.found, cap, cap);
    step.accepted = sel.accepted;
    step.discarded = sel.discarded;
    step.blocking = sel.full_set_blocking;
    acc = union_with_edges(acc, incoming, step.accepted);
    report.steps.push_back(std::move(step));
  }

  report.final_graph = std::move(acc);
  for (const auto& [e, s] : net.state_edge_signs) {
    (void)s;
    if (!report.final_graph.state_edges.count(e)) report.discarded_total.push_back(e);
  }
  return report;
}

Verdict verdict_from_report(const MergeReport& report, const SignedNetwork& net) {
  Verdict v;
  AssumptionReport assumptions;
  assumptions.accessible = check_accessibility(build_graph(net));
  for (const auto& [node, ok] : assumptions.accessible) {
    (void)node;
    if (!ok) assumptions.all_accessible = false;
  }
  v.assumptions = assumptions;

  const bool covered = report.uncovered_nodes.empty();
  const bool kept_all = report.discarded_total.empty();
  if (covered && kept_all && assumptions.all_accessible) {
    v.status = Status::Certified;
    v.note = "decomposition covers every state node and merging kept every edge";
    return v;
  }

  v.status = Status::NotCertified;
  std::ostringstream os;
  os << "not certified by the dedicated-node condition (inconclusive for controllability):";
  if (!assumptions.all_accessible) os << " some state nodes cannot reach an input;";
  if (!covered) {
    os << " uncovered state nodes {";
    bool first = true;
    for (NodeId u : report.uncovered_nodes) {
      if (!first) os << ",";
      os << u;
      first = false;
    }
    os << "};";
  }
  if (!kept_all) {
    os << " discarded edges {";
    bool first = true;
    for (const EdgeKey& e : report.discarded_total) {
      if (!first) os << ",";
      os << "(" << e.first << "," << e.second << ")";
      first = false;
    }
    os << "};";
  }
  v.note = os.str();
  return v;
}

PipelineResult run_pipeline(const SignedNetwork& net, int cap) {
  PipelineResult out;
  out.paths = path_search(net);
  out.report = graph_merging(out.paths, net, cap);
  out.verdict = verdict_from_report(out.report, net);
  return out;
}

}  // namespace topoctrl
