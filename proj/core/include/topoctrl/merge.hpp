#pragma once

#include <optional>
#include <set>
#include <vector>

#include "topoctrl/certify.hpp"
#include "topoctrl/decompose.hpp"
#include "topoctrl/graph.hpp"
#include "topoctrl/types.hpp"

namespace topoctrl {

// An edge connecting two node-disjoint graphs, oriented left-to-right:
// `a` lies in the first (accumulated) graph, `b` in the second (incoming)
// graph. The orientation makes subset tie-breaking deterministic.
struct ConnectingEdge {
  NodeId a = 0;
  NodeId b = 0;
  EdgeKey key() const { return make_edge(a, b); }
  friend bool operator==(const ConnectingEdge&, const ConnectingEdge&) = default;
  friend auto operator<=>(const ConnectingEdge& x, const ConnectingEdge& y) {
    return std::pair{x.a, x.b} <=> std::pair{y.a, y.b};
  }
};

// Sorted ascending by (a, b).
using ConnectingEdgeSet = std::vector<ConnectingEdge>;

// All state edges of the network with one endpoint in each graph, oriented
// gA-side first, sorted. Throws Error if the node sets overlap.
ConnectingEdgeSet connecting_edges(const Graph& ga, const Graph& gb,
                                   const SignedNetwork& net);

// Decides whether adding exactly `candidate` to the disjoint union of the
// two graphs yields a certifiable graph: sweeps every nonempty subset of the
// merged graph's state nodes (cardinality ascending, then lexicographic) and
// returns the first subset with no dedicated node, or nullopt if none.
//
// The sweep deliberately covers all merged state nodes, not only the
// candidate edges' endpoints: an endpoint-only check is strictly weaker
// (connecting edges can destroy dedicated nodes for subsets that include
// non-endpoint nodes) and would certify graphs that fail certification.
std::optional<StateSubset> merge_condition(const Graph& ga, const Graph& gb,
                                           const ConnectingEdgeSet& candidate,
                                           int cap = enumeration_cap());

struct EdgeSelection {
  ConnectingEdgeSet accepted;
  ConnectingEdgeSet discarded;
  // Blocking subset for the full candidate set when it was rejected.
  std::optional<StateSubset> full_set_blocking;
};

// Maximum-cardinality subset of all_edges satisfying merge_condition.
// Subsets are tried cardinality-descending; within a cardinality class in
// lexicographically ascending order of the sorted oriented-pair list; the
// first passing subset wins. When both graphs are individually certified the
// empty subset always passes, so `accepted` is well-defined; if even the
// empty subset fails (uncertified parts), accepted is empty and every edge
// is discarded. Throws CapExceededError when |all_edges| > edge_cap.
EdgeSelection largest_edge_set(const Graph& ga, const Graph& gb,
                               const ConnectingEdgeSet& all_edges,
                               int edge_cap = enumeration_cap(),
                               int subset_cap = enumeration_cap());

// Union of the two graphs plus the accepted connecting edges. Verifies the
// merge condition first and throws Error if it fails.
Graph merge_graphs(const Graph& ga, const Graph& gb,
                   const ConnectingEdgeSet& accepted,
                   int cap = enumeration_cap());

struct MergeStep {
  int incoming_index = 0;         // 1-based index of the incoming path
  ConnectingEdgeSet found;        // all connecting edges at this step
  ConnectingEdgeSet accepted;
  ConnectingEdgeSet discarded;
  std::optional<StateSubset> blocking;  // for the full found set, if rejected
};

struct MergeReport {
  std::vector<MergeStep> steps;
  Graph final_graph;                    // the accumulated merged graph
  std::vector<EdgeKey> discarded_total;  // nominal state edges absent from it
  std::set<NodeId> uncovered_nodes;     // state nodes not covered by paths
};

// Sequentially merges the path subgraphs in input order, keeping the largest
// certifiable connecting-edge subset at each step, and compares the final
// graph against the nominal one.
MergeReport graph_merging(const std::vector<Path>& paths, const SignedNetwork& net,
                          int cap = enumeration_cap());

// Certified iff the paths covered every state node, no nominal edge was
// discarded, and every state node can reach an input. Otherwise NotCertified
// with the discarded edges and uncovered nodes as the payload (in the
// report) and an explanatory note.
Verdict verdict_from_report(const MergeReport& report, const SignedNetwork& net);

// Convenience: path_search + graph_merging + verdict_from_report.
struct PipelineResult {
  std::vector<Path> paths;
  MergeReport report;
  Verdict verdict;
};
PipelineResult run_pipeline(const SignedNetwork& net, int cap = enumeration_cap());

}  // namespace topoctrl
