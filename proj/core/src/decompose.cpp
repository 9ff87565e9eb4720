#include "topoctrl/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace topoctrl {

std::vector<NodeId> children_of(const Graph& g, const Path& path_so_far,
                                const PathSearchState& state) {
  if (path_so_far.nodes.empty()) throw Error("children_of: empty path");
  const NodeId t = path_so_far.terminal();
  const std::set<NodeId> on_path(path_so_far.nodes.begin(), path_so_far.nodes.end());
  const std::set<NodeId> ancestors(path_so_far.nodes.begin(),
                                   std::prev(path_so_far.nodes.end()));

  auto adjacent_to_any = [&](NodeId c, const std::set<NodeId>& nodes) {
    const auto& nc = neighbors(g, c);
    for (NodeId x : nodes)
      if (x != c && nc.count(x)) return true;
    return false;
  };

  std::vector<NodeId> out;
  for (NodeId c : neighbors(g, t)) {
    if (c == t || c > g.n) continue;  // self-loop / input node
    if (on_path.count(c) || state.roots.count(c) || state.claimed.count(c)) continue;
    if (adjacent_to_any(c, ancestors)) continue;  // keep the path induced
    if (adjacent_to_any(c, state.claimed) && adjacent_to_any(c, state.future_roots))
      continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> update_paths(const Graph& g, const std::vector<Path>& paths,
                               const PathSearchState& state) {
  std::vector<Path> out;
  for (const Path& p : paths) {
    for (NodeId c : children_of(g, p, state)) {
      Path q = p;
      q.nodes.push_back(c);
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Path> path_search(const Graph& g, std::size_t level_cap) {
  PathSearchState state;
  std::vector<std::pair<NodeId, NodeId>> ordered_inputs;  // (input node, root)
  for (const auto& [s, u] : g.input_edges) ordered_inputs.emplace_back(u, s);
  std::sort(ordered_inputs.begin(), ordered_inputs.end());
  for (const auto& [u, s] : ordered_inputs) {
    (void)u;
    state.roots.insert(s);
  }

  std::vector<Path> result;
  for (std::size_t k = 0; k < ordered_inputs.size(); ++k) {
    const auto [u, root] = ordered_inputs[k];
    state.future_roots.clear();
    for (std::size_t j = k + 1; j < ordered_inputs.size(); ++j)
      state.future_roots.insert(ordered_inputs[j].second);

    std::vector<Path> level{Path{u, {root}}};
    Path best = level.front();
    for (;;) {
      std::vector<Path> next = update_paths(g, level, state);
      if (next.empty()) break;
      if (next.size() > level_cap) {
        std::ostringstream os;
        os << "path search level holds " << next.size()
           << " candidate paths, above the cap of " << level_cap;
        throw CapExceededError(os.str());
      }
      level = std::move(next);
      // All paths in a level share the same length; the tie-break among the
      // longest is the lexicographically largest node sequence.
      best = *std::max_element(level.begin(), level.end(),
                               [](const Path& a, const Path& b) { return a.nodes < b.nodes; });
    }
    result.push_back(best);
    state.claimed.insert(best.nodes.begin(), best.nodes.end());
  }
  return result;
}

std::vector<Path> path_search(const SignedNetwork& net, std::size_t level_cap) {
  return path_search(build_graph(net), level_cap);
}

Graph path_subgraph(const SignedNetwork& net, const Path& p) {
  std::set<NodeId> states(p.nodes.begin(), p.nodes.end());
  std::set<EdgeKey> edges;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
    edges.insert(make_edge(p.nodes[i], p.nodes[i + 1]));
  return make_subgraph(net, states, edges);
}

}  // namespace topoctrl
