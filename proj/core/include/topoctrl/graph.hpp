#pragma once

#include <map>
#include <set>

#include "topoctrl/types.hpp"

namespace topoctrl {

// The graph view of a SignedNetwork (or of a subgraph of one): state nodes
// with self-loops, undirected state edges, and a directed state->input edge
// per assigned input. A Graph may cover only part of a network's nodes
// (path subgraphs, partially merged graphs), so vertex sets are explicit.
struct Graph {
  int n = 0;  // state-id range of the parent network (states <= n)
  int m = 0;  // input-id range of the parent network (inputs in n+1..n+m)
  std::set<NodeId> states;             // present state nodes
  std::set<NodeId> inputs;             // present input nodes
  std::set<EdgeKey> state_edges;       // undirected, both endpoints present
  std::map<NodeId, NodeId> input_edges;  // state -> its input node
  // Adjacency per present state node: contains the node itself (self-loop),
  // its state neighbors, and its assigned input node if present.
  std::map<NodeId, std::set<NodeId>> adj;

  // Every state node carries a self-loop (nonzero diagonal assumption).
  const std::set<NodeId>& self_loops() const { return states; }

  bool has_state(NodeId i) const { return states.count(i) != 0; }
};

// Builds the full graph of a network. Validates the network first.
Graph build_graph(const SignedNetwork& net);

// Builds a graph over a subset of state nodes: keeps exactly the given
// undirected edges among them plus the input edges of covered inputs.
Graph make_subgraph(const SignedNetwork& net, const std::set<NodeId>& states,
                    const std::set<EdgeKey>& edges);

// N_i: the node's closed neighborhood, including itself (self-loop) and its
// assigned input node. Throws Error for input nodes or absent states.
const std::set<NodeId>& neighbors(const Graph& g, NodeId i);

// N(alpha) = union of N_i over i in alpha. Throws Error for empty alpha.
std::set<NodeId> neighborhood_of_set(const Graph& g, const StateSubset& alpha);

// For each present state node: can it reach some input node (through
// undirected state edges and the directed state->input edges)?
std::map<NodeId, bool> check_accessibility(const Graph& g);

}  // namespace topoctrl
