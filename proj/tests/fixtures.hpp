#pragma once

// In-code builders for the example networks used across the test suite.
// Each builder has a JSON twin in tests/fixtures/ with the same name; the
// CLI tests cross-check that the two stay in sync.

#include <string>
#include <vector>

#include "topoctrl/types.hpp"

namespace fixtures {

using topoctrl::EdgeKey;
using topoctrl::Sign;
using topoctrl::SignedNetwork;

struct EdgeSpec {
  int i, j;
  int sign;            // +1 / -1
  double weight = 0.0;  // 0 = no nominal weight
};

inline SignedNetwork make_net(int n, const std::vector<EdgeSpec>& edges,
                              const std::vector<int>& input_states) {
  SignedNetwork net;
  net.n = n;
  bool any_weight = false;
  std::map<EdgeKey, double> weights;
  for (const EdgeSpec& e : edges) {
    const EdgeKey key = topoctrl::make_edge(e.i, e.j);
    net.state_edge_signs[key] = e.sign > 0 ? Sign::Positive : Sign::Negative;
    if (e.weight != 0.0) {
      weights[key] = e.weight;
      any_weight = true;
    }
  }
  if (any_weight) net.nominal_weights = std::move(weights);
  net.input_assignment = input_states;
  net.validate();
  return net;
}

// Five state nodes in a mesh, three inputs; carries the nominal weights whose
// coupling-derived diagonal is (-2,-3,-3,-5,-1).
inline SignedNetwork mesh5() {
  return make_net(5,
                  {{1, 2, +1, 2.0},
                   {1, 3, +1, 1.0},
                   {1, 5, -1, -1.0},
                   {2, 3, +1, 1.0},
                   {2, 4, +1, 1.0},
                   {2, 5, -1, -1.0},
                   {3, 4, +1, 1.0},
                   {4, 5, +1, 3.0}},
                  {3, 4, 5});
}

// mesh5 topology plus the chord (1,4), signed so that integer-weight
// realizations exhibit rank-deficient controllability matrices.
inline SignedNetwork mesh5_chord() {
  return make_net(5,
                  {{1, 2, +1},
                   {1, 3, -1},
                   {1, 4, -1},
                   {1, 5, -1},
                   {2, 3, -1},
                   {2, 4, -1},
                   {2, 5, -1},
                   {3, 4, -1},
                   {4, 5, +1}},
                  {3, 4, 5});
}

// mesh5_chord with the chord removed (same signs on the remaining edges).
inline SignedNetwork mesh5_signed() {
  return make_net(5,
                  {{1, 2, +1},
                   {1, 3, -1},
                   {1, 5, -1},
                   {2, 3, -1},
                   {2, 4, -1},
                   {2, 5, -1},
                   {3, 4, -1},
                   {4, 5, +1}},
                  {3, 4, 5});
}

// mesh5_chord with the chord's sign flipped to +.
inline SignedNetwork mesh5_chord_pos14() {
  return make_net(5,
                  {{1, 2, +1},
                   {1, 3, -1},
                   {1, 4, +1},
                   {1, 5, -1},
                   {2, 3, -1},
                   {2, 4, -1},
                   {2, 5, -1},
                   {3, 4, -1},
                   {4, 5, +1}},
                  {3, 4, 5});
}

// mesh5_chord with the (1,3) sign flipped to +.
inline SignedNetwork mesh5_chord_pos13() {
  return make_net(5,
                  {{1, 2, +1},
                   {1, 3, +1},
                   {1, 4, -1},
                   {1, 5, -1},
                   {2, 3, -1},
                   {2, 4, -1},
                   {2, 5, -1},
                   {3, 4, -1},
                   {4, 5, +1}},
                  {3, 4, 5});
}

// Path 1-2-3-4 with one input at the terminal node 4.
inline SignedNetwork path4() {
  return make_net(4, {{1, 2, +1}, {2, 3, +1}, {3, 4, +1}}, {4});
}

// Two leaves 1, 2 hanging off node 3, one input at 3.
inline SignedNetwork star3() {
  return make_net(3, {{1, 3, +1}, {2, 3, +1}}, {3});
}

// Triangle with a single input at node 3.
inline SignedNetwork cycle3() {
  return make_net(3, {{1, 2, +1}, {1, 3, +1}, {2, 3, +1}}, {3});
}

// Triangle with inputs at nodes 3 and 1.
inline SignedNetwork cycle3_two_inputs() {
  return make_net(3, {{1, 2, +1}, {1, 3, +1}, {2, 3, +1}}, {3, 1});
}

// Four-cycle 1-2-3-4-1 with inputs at nodes 3 and 1.
inline SignedNetwork cycle4_two_inputs() {
  return make_net(4, {{1, 2, +1}, {2, 3, +1}, {3, 4, +1}, {1, 4, +1}}, {3, 1});
}

// Path 1-2-3-4 and triangle 5-6-7 joined by the bridge (2,6);
// inputs at 4, 7 and 5. Exhaustive certification succeeds, but the
// decomposition pipeline conservatively leaves node 1 uncovered.
inline SignedNetwork clusters7() {
  return make_net(7,
                  {{1, 2, +1},
                   {2, 3, +1},
                   {3, 4, +1},
                   {5, 6, +1},
                   {5, 7, +1},
                   {6, 7, +1},
                   {2, 6, +1}},
                  {4, 7, 5});
}

// Path graph on n state nodes (1-2-...-n) with a single input at node n.
inline SignedNetwork path_n(int n) {
  std::vector<EdgeSpec> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, +1});
  return make_net(n, edges, {n});
}

// Absolute path of a JSON fixture file (TOPOCTRL_FIXTURE_DIR is set by CMake).
inline std::string fixture_path(const std::string& name) {
  return std::string(TOPOCTRL_FIXTURE_DIR) + "/" + name + ".json";
}

}  // namespace fixtures
