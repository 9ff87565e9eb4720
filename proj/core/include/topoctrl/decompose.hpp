#pragma once

#include <set>
#include <vector>

#include "topoctrl/graph.hpp"
#include "topoctrl/types.hpp"

namespace topoctrl {

// An input-rooted path: the input node plus the ordered state nodes it
// drives, starting at the input's own state node. Consecutive nodes are
// adjacent; no two non-consecutive nodes are adjacent (induced path).
struct Path {
  NodeId root_input = 0;            // input node id (n+1..n+m)
  std::vector<NodeId> nodes;        // nodes[0] = state assigned to root_input

  NodeId terminal() const { return nodes.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Shared search state while paths are grown input by input.
struct PathSearchState {
  std::set<NodeId> claimed;       // nodes of already-finished paths
  std::set<NodeId> roots;         // all input-assigned state nodes
  std::set<NodeId> future_roots;  // roots of inputs not yet processed
};

// Candidates to extend the path at its terminal node. A state neighbor c of
// the terminal is accepted unless:
//   (a) c is already on the path, is a root node, or is claimed;
//   (b) c is adjacent to an ancestor of the terminal (keeps paths induced);
//   (c) c is adjacent to a claimed node AND to a future root (growing
//       through such a node would cut a later root off from its own
//       extension while duplicating coverage near finished paths).
// Returned sorted ascending.
std::vector<NodeId> children_of(const Graph& g, const Path& path_so_far,
                                const PathSearchState& state);

// One synchronous growth level: every path is extended by each of its
// children; paths without children drop out of the returned set.
std::vector<Path> update_paths(const Graph& g, const std::vector<Path>& paths,
                               const PathSearchState& state);

// Decomposes the graph into node-disjoint input-rooted paths, one per input,
// processed in input order. Each root grows level by level until no path
// extends; the longest path wins, ties broken by lexicographically largest
// node sequence. A root with no children yields the length-0 path.
// `level_cap` bounds the number of live paths per level.
std::vector<Path> path_search(const Graph& g, std::size_t level_cap = 1000000);
std::vector<Path> path_search(const SignedNetwork& net, std::size_t level_cap = 1000000);

// The path viewed as a graph: its nodes, consecutive edges, and root input.
Graph path_subgraph(const SignedNetwork& net, const Path& p);

}  // namespace topoctrl
