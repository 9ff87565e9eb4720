#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "topoctrl/decompose.hpp"

using namespace topoctrl;

namespace {

std::vector<std::vector<NodeId>> node_lists(const std::vector<Path>& paths) {
  std::vector<std::vector<NodeId>> out;
  for (const Path& p : paths) out.push_back(p.nodes);
  return out;
}

}  // namespace

TEST_CASE("children exclude roots, claimed nodes and ancestor-adjacent nodes") {
  const Graph g = build_graph(fixtures::mesh5());
  PathSearchState st;
  st.roots = {3, 4, 5};
  st.future_roots = {4, 5};

  // At the first root, both non-root neighbors are available.
  Path p{6, {3}};
  CHECK(children_of(g, p, st) == std::vector<NodeId>{1, 2});

  // One level deeper every extension is ancestor-adjacent, so growth stops.
  CHECK(children_of(g, Path{6, {3, 1}}, st).empty());
  CHECK(children_of(g, Path{6, {3, 2}}, st).empty());
}

TEST_CASE("children rule keeps nodes near finished paths for later roots") {
  // Path 1-2-3-4 + triangle 5-6-7, bridge (2,6), inputs at 4, 7, 5.
  const Graph g = build_graph(fixtures::clusters7());
  PathSearchState st;
  st.roots = {4, 7, 5};
  st.claimed = {4, 3, 2, 6};  // the first path claimed these
  st.future_roots = {5};

  // Root 7 may not grow into 6 (claimed) nor 5 (future root).
  CHECK(children_of(g, Path{9, {7}}, st).empty());
}

TEST_CASE("a node touching both a claimed node and a future root is skipped") {
  // 1-2-3 with 3 also adjacent to 4 and 5; inputs at 1 and 5.
  const SignedNetwork net = fixtures::make_net(
      5, {{1, 2, +1}, {2, 3, +1}, {3, 4, +1}, {3, 5, +1}}, {1, 5});
  const Graph g = build_graph(net);
  const Path p{6, {1, 2}};

  PathSearchState blocked;
  blocked.roots = {1, 5};
  blocked.claimed = {4};
  blocked.future_roots = {5};
  CHECK(children_of(g, p, blocked).empty());  // 3 touches claimed 4 and root 5

  // Both conditions must hold: with nothing claimed the same node is fine.
  PathSearchState open = blocked;
  open.claimed = {};
  CHECK(children_of(g, p, open) == std::vector<NodeId>{3});
}

TEST_CASE("update_paths grows level-synchronously and drops stuck paths") {
  const Graph g = build_graph(fixtures::mesh5());
  PathSearchState st;
  st.roots = {3, 4, 5};
  st.future_roots = {4, 5};
  const std::vector<Path> level0 = {Path{6, {3}}};
  const std::vector<Path> level1 = update_paths(g, level0, st);
  CHECK(node_lists(level1) == std::vector<std::vector<NodeId>>{{3, 1}, {3, 2}});
  CHECK(update_paths(g, level1, st).empty());
}

TEST_CASE("decomposition of the worked mesh example") {
  const std::vector<Path> paths = path_search(fixtures::mesh5());
  REQUIRE(paths.size() == 3);
  CHECK(paths[0].root_input == 6);
  CHECK(paths[1].root_input == 7);
  CHECK(paths[2].root_input == 8);
  CHECK(node_lists(paths) == std::vector<std::vector<NodeId>>{{3, 2}, {4}, {5, 1}});
  // The chord variant decomposes identically (the chord only affects merging).
  CHECK(node_lists(path_search(fixtures::mesh5_chord())) ==
        std::vector<std::vector<NodeId>>{{3, 2}, {4}, {5, 1}});
}

TEST_CASE("pinned decompositions of the small fixtures") {
  CHECK(node_lists(path_search(fixtures::path4())) ==
        std::vector<std::vector<NodeId>>{{4, 3, 2, 1}});
  CHECK(node_lists(path_search(fixtures::star3())) ==
        std::vector<std::vector<NodeId>>{{3, 2}});
  CHECK(node_lists(path_search(fixtures::cycle3())) ==
        std::vector<std::vector<NodeId>>{{3, 2}});
  CHECK(node_lists(path_search(fixtures::cycle3_two_inputs())) ==
        std::vector<std::vector<NodeId>>{{3, 2}, {1}});
  CHECK(node_lists(path_search(fixtures::cycle4_two_inputs())) ==
        std::vector<std::vector<NodeId>>{{3, 4}, {1, 2}});
  CHECK(node_lists(path_search(fixtures::clusters7())) ==
        std::vector<std::vector<NodeId>>{{4, 3, 2, 6}, {7}, {5}});
}

TEST_CASE("a childless root still yields its length-0 path") {
  const std::vector<Path> paths = path_search(fixtures::cycle3_two_inputs());
  REQUIRE(paths.size() == 2);
  CHECK(paths[1].nodes == std::vector<NodeId>{1});
  CHECK(paths[1].terminal() == 1);
}

TEST_CASE("paths are node-disjoint induced paths rooted at their inputs") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    const SignedNetwork net = testrand::random_connected_net(rng, 3, 12, 1, 3);
    const Graph g = build_graph(net);
    const std::vector<Path> paths = path_search(net);
    REQUIRE(paths.size() == net.input_assignment.size());

    std::set<NodeId> seen;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const Path& p = paths[k];
      CHECK(p.root_input == net.input_node(static_cast<int>(k)));
      REQUIRE_FALSE(p.nodes.empty());
      CHECK(p.nodes.front() == net.input_assignment[k]);
      for (NodeId v : p.nodes) {
        CAPTURE(v);
        CHECK(seen.insert(v).second);  // node-disjoint across paths
      }
      // Consecutive nodes adjacent; non-consecutive not (induced path).
      for (std::size_t a = 0; a < p.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < p.nodes.size(); ++b) {
          const bool adjacent =
              net.state_edge_signs.count(make_edge(p.nodes[a], p.nodes[b])) > 0;
          CHECK(adjacent == (b == a + 1));
        }
    }
  }
}

TEST_CASE("decomposition is deterministic") {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 20; ++iter) {
    const SignedNetwork net = testrand::random_connected_net(rng, 3, 10, 1, 3);
    CHECK(path_search(net) == path_search(net));
  }
}

TEST_CASE("path subgraph carries consecutive edges and the root input") {
  const SignedNetwork net = fixtures::mesh5();
  const Path p{6, {3, 2}};
  const Graph g = path_subgraph(net, p);
  CHECK(g.states == std::set<NodeId>{2, 3});
  CHECK(g.state_edges == std::set<EdgeKey>{{2, 3}});
  CHECK(g.inputs == std::set<NodeId>{6});
  CHECK(g.input_edges.at(3) == 6);
}

TEST_CASE("level cap aborts pathological growth") {
  const SignedNetwork net = fixtures::mesh5();
  CHECK_THROWS_AS(path_search(build_graph(net), 1), CapExceededError);
}
