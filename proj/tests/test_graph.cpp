#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "topoctrl/graph.hpp"

using namespace topoctrl;

TEST_CASE("network validation rejects malformed descriptions") {
  SignedNetwork net = fixtures::mesh5();
  CHECK_NOTHROW(net.validate());

  SUBCASE("out-of-range edge endpoint") {
    net.state_edge_signs[{5, 9}] = Sign::Positive;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("unnormalized edge key") {
    net.state_edge_signs[{4, 2}] = Sign::Positive;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("zero edge sign") {
    net.state_edge_signs[{1, 4}] = Sign::Zero;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("non-injective input assignment") {
    net.input_assignment = {3, 3, 5};
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("input assigned to absent state") {
    net.input_assignment = {3, 4, 6};
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("diagonal sign list of wrong length") {
    net.diagonal_signs = std::vector<Sign>(4, Sign::Negative);
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("zero declared diagonal sign") {
    net.diagonal_signs = std::vector<Sign>(5, Sign::Negative);
    (*net.diagonal_signs)[2] = Sign::Zero;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("nominal weight contradicting the sign") {
    (*net.nominal_weights)[{1, 2}] = -2.0;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("nominal weight for an absent edge") {
    (*net.nominal_weights)[{1, 4}] = 1.0;
    CHECK_THROWS_AS(net.validate(), InvalidNetworkError);
  }
  SUBCASE("no state nodes") {
    SignedNetwork empty;
    CHECK_THROWS_AS(empty.validate(), InvalidNetworkError);
  }
}

TEST_CASE("build_graph produces self-loops, state edges and input edges") {
  const Graph g = build_graph(fixtures::mesh5());
  CHECK(g.n == 5);
  CHECK(g.m == 3);
  CHECK(g.states == std::set<NodeId>{1, 2, 3, 4, 5});
  CHECK(g.inputs == std::set<NodeId>{6, 7, 8});
  CHECK(g.state_edges.size() == 8);
  CHECK(g.input_edges.at(3) == 6);
  CHECK(g.input_edges.at(4) == 7);
  CHECK(g.input_edges.at(5) == 8);
  // Closed neighborhood: self + state neighbors + assigned input.
  CHECK(neighbors(g, 3) == std::set<NodeId>{1, 2, 3, 4, 6});
  CHECK(neighbors(g, 1) == std::set<NodeId>{1, 2, 3, 5});
  for (NodeId i : g.states) CHECK(g.self_loops().count(i) == 1);
}

TEST_CASE("neighbors rejects input nodes and absent states") {
  const Graph g = build_graph(fixtures::mesh5());
  CHECK_THROWS_AS(neighbors(g, 6), Error);
  CHECK_THROWS_AS(neighbors(g, 0), Error);
  CHECK_THROWS_AS(neighbors(g, 99), Error);
}

TEST_CASE("neighborhood of a set is the union of member neighborhoods") {
  const Graph g = build_graph(fixtures::cycle3_two_inputs());
  // Node 1 holds input 5, node 3 holds input 4.
  CHECK(neighbors(g, 1) == std::set<NodeId>{1, 2, 3, 5});
  CHECK(neighbors(g, 2) == std::set<NodeId>{1, 2, 3});
  const auto hood = neighborhood_of_set(g, StateSubset::of({1, 2}));
  CHECK(hood == std::set<NodeId>{1, 2, 3, 5});
  CHECK_THROWS_AS(neighborhood_of_set(g, StateSubset{}), Error);
}

TEST_CASE("make_subgraph keeps covered inputs and validates edges") {
  const SignedNetwork net = fixtures::mesh5();
  const Graph sub = make_subgraph(net, {3, 2}, {{2, 3}});
  CHECK(sub.states == std::set<NodeId>{2, 3});
  CHECK(sub.inputs == std::set<NodeId>{6});  // input of node 3 is covered
  CHECK(sub.state_edges == std::set<EdgeKey>{{2, 3}});
  CHECK(neighbors(sub, 3) == std::set<NodeId>{2, 3, 6});

  CHECK_THROWS_AS(make_subgraph(net, {1, 4}, {{1, 4}}), Error);  // absent edge
  CHECK_THROWS_AS(make_subgraph(net, {1}, {{1, 2}}), Error);     // endpoint outside
}

TEST_CASE("accessibility marks exactly the components holding an input") {
  SUBCASE("connected network with inputs") {
    const auto acc = check_accessibility(build_graph(fixtures::mesh5()));
    for (const auto& [node, ok] : acc) {
      CAPTURE(node);
      CHECK(ok);
    }
  }
  SUBCASE("component without an input is inaccessible") {
    const SignedNetwork net =
        fixtures::make_net(4, {{1, 2, +1}, {3, 4, +1}}, {1});
    const auto acc = check_accessibility(build_graph(net));
    CHECK(acc.at(1));
    CHECK(acc.at(2));
    CHECK_FALSE(acc.at(3));
    CHECK_FALSE(acc.at(4));
  }
}

TEST_CASE("subset order is cardinality first, then lexicographic") {
  using S = StateSubset;
  CHECK(subset_order_less(S::of({3}), S::of({1, 2})));
  CHECK(subset_order_less(S::of({1, 3}), S::of({2, 3})));
  CHECK(subset_order_less(S::of({1, 2}), S::of({1, 3})));
  CHECK_FALSE(subset_order_less(S::of({1, 2}), S::of({1, 2})));
}

TEST_CASE("subset enumeration is cardinality-ascending, lexicographic within") {
  std::vector<std::vector<NodeId>> seen;
  for_each_subset_card_lex({1, 2, 3}, [&](const StateSubset& s) {
    seen.push_back(s.members());
    return true;
  });
  const std::vector<std::vector<NodeId>> expected = {
      {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  CHECK(seen == expected);
}

TEST_CASE("StateSubset round-trips members") {
  const StateSubset s = StateSubset::of({5, 1, 62});
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<NodeId>{1, 5, 62});
  CHECK(s.contains(62));
  CHECK_FALSE(s.contains(2));
  StateSubset t = s;
  t.erase(5);
  CHECK(t.members() == std::vector<NodeId>{1, 62});
}

TEST_CASE("subgraph neighborhoods never exceed full-graph neighborhoods") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 50; ++iter) {
    const SignedNetwork net = testrand::random_connected_net(rng, 3, 12, 1, 3);
    const Graph full = build_graph(net);

    // Random induced state subset + all network edges inside it.
    std::set<NodeId> states;
    for (NodeId i = 1; i <= net.n; ++i)
      if (rng() & 1) states.insert(i);
    if (states.empty()) states.insert(1);
    std::set<EdgeKey> edges;
    for (const auto& [e, s] : net.state_edge_signs) {
      (void)s;
      if (states.count(e.first) && states.count(e.second)) edges.insert(e);
    }
    const Graph sub = make_subgraph(net, states, edges);
    for (NodeId i : states) {
      const auto& ns = neighbors(sub, i);
      const auto& nf = neighbors(full, i);
      for (NodeId v : ns) {
        CAPTURE(i);
        CAPTURE(v);
        CHECK(nf.count(v) == 1);
      }
    }
  }
}
