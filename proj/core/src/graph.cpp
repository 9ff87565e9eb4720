#include "topoctrl/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace topoctrl {

namespace {

void fail_network(const std::string& msg) { throw InvalidNetworkError(msg); }

}  // namespace

void SignedNetwork::validate() const {
  if (n < 1) fail_network("network must have at least one state node");

  std::set<NodeId> seen_targets;
  for (int k = 0; k < m(); ++k) {
    const NodeId s = input_assignment[static_cast<std::size_t>(k)];
    if (s < 1 || s > n) {
      std::ostringstream os;
      os << "input " << (k + 1) << " assigned to out-of-range state " << s;
      fail_network(os.str());
    }
    if (!seen_targets.insert(s).second) {
      std::ostringstream os;
      os << "input assignment is not injective: state " << s << " has two inputs";
      fail_network(os.str());
    }
  }

  for (const auto& [e, s] : state_edge_signs) {
    const auto [i, j] = e;
    if (i >= j) fail_network("edge keys must satisfy i < j");
    if (i < 1 || j > n) {
      std::ostringstream os;
      os << "edge (" << i << "," << j << ") out of state range 1.." << n;
      fail_network(os.str());
    }
    if (s == Sign::Zero) {
      std::ostringstream os;
      os << "edge (" << i << "," << j << ") carries sign zero (omit it instead)";
      fail_network(os.str());
    }
  }

  if (diagonal_signs) {
    if (static_cast<int>(diagonal_signs->size()) != n)
      fail_network("diagonal_signs size does not match state count");
    for (int i = 0; i < n; ++i)
      if ((*diagonal_signs)[static_cast<std::size_t>(i)] == Sign::Zero) {
        std::ostringstream os;
        os << "declared diagonal sign of state " << (i + 1) << " is zero";
        fail_network(os.str());
      }
  }

  if (nominal_weights) {
    for (const auto& [e, w] : *nominal_weights) {
      auto it = state_edge_signs.find(e);
      if (it == state_edge_signs.end()) {
        std::ostringstream os;
        os << "nominal weight for absent edge (" << e.first << "," << e.second << ")";
        fail_network(os.str());
      }
      if (sign_of(w) != it->second) {
        std::ostringstream os;
        os << "nominal weight of edge (" << e.first << "," << e.second
           << ") contradicts its declared sign";
        fail_network(os.str());
      }
    }
  }
}

Graph build_graph(const SignedNetwork& net) {
  net.validate();
  Graph g;
  g.n = net.n;
  g.m = net.m();
  for (NodeId i = 1; i <= net.n; ++i) {
    g.states.insert(i);
    g.adj[i].insert(i);  // self-loop
  }
  for (const auto& [e, s] : net.state_edge_signs) {
    (void)s;
    g.state_edges.insert(e);
    g.adj[e.first].insert(e.second);
    g.adj[e.second].insert(e.first);
  }
  for (int k = 0; k < net.m(); ++k) {
    const NodeId u = net.input_node(k);
    const NodeId s = net.input_assignment[static_cast<std::size_t>(k)];
    g.inputs.insert(u);
    g.input_edges[s] = u;
    g.adj[s].insert(u);
  }
  return g;
}

Graph make_subgraph(const SignedNetwork& net, const std::set<NodeId>& states,
                    const std::set<EdgeKey>& edges) {
  Graph g;
  g.n = net.n;
  g.m = net.m();
  g.states = states;
  for (NodeId i : states) g.adj[i].insert(i);
  for (const auto& e : edges) {
    if (!states.count(e.first) || !states.count(e.second))
      throw Error("subgraph edge endpoint outside the given state set");
    if (!net.state_edge_signs.count(e))
      throw Error("subgraph edge absent from the network");
    g.state_edges.insert(e);
    g.adj[e.first].insert(e.second);
    g.adj[e.second].insert(e.first);
  }
  for (int k = 0; k < net.m(); ++k) {
    const NodeId s = net.input_assignment[static_cast<std::size_t>(k)];
    if (states.count(s)) {
      const NodeId u = net.input_node(k);
      g.inputs.insert(u);
      g.input_edges[s] = u;
      g.adj[s].insert(u);
    }
  }
  return g;
}

const std::set<NodeId>& neighbors(const Graph& g, NodeId i) {
  auto it = g.adj.find(i);
  if (it == g.adj.end() || !g.has_state(i)) {
    std::ostringstream os;
    os << "neighbors() requires a present state node, got " << i;
    throw Error(os.str());
  }
  return it->second;
}

std::set<NodeId> neighborhood_of_set(const Graph& g, const StateSubset& alpha) {
  if (alpha.empty()) throw Error("neighborhood_of_set: empty subset");
  std::set<NodeId> out;
  for (NodeId i : alpha.members()) {
    const auto& ni = neighbors(g, i);
    out.insert(ni.begin(), ni.end());
  }
  return out;
}

std::map<NodeId, bool> check_accessibility(const Graph& g) {
  // Undirected state edges plus state->input edges: a state node is
  // accessible iff its state-component contains an input-assigned node.
  std::map<NodeId, bool> out;
  std::set<NodeId> visited;
  for (NodeId s : g.states) {
    if (visited.count(s)) continue;
    std::vector<NodeId> component;
    bool has_input = false;
    std::deque<NodeId> queue{s};
    visited.insert(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      component.push_back(v);
      if (g.input_edges.count(v)) has_input = true;
      for (NodeId w : g.adj.at(v)) {
        if (w == v || w > g.n) continue;  // skip self-loop and input nodes
        if (g.has_state(w) && visited.insert(w).second) queue.push_back(w);
      }
    }
    for (NodeId v : component) out[v] = has_input;
  }
  return out;
}

bool subset_order_less(const StateSubset& a, const StateSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

int enumeration_cap() {
  if (const char* env = std::getenv("TOPOCTRL_ENUM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 62) return static_cast<int>(v);
  }
  return 20;
}

}  // namespace topoctrl
