#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topoctrl {

// Node identity: 1-based. State nodes occupy 1..n, input nodes n+1..n+m.
using NodeId = int;

// Edge sign. Zero means "no edge" and never appears in stored edge maps.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(double x) {
  if (x > 0.0) return Sign::Positive;
  if (x < 0.0) return Sign::Negative;
  return Sign::Zero;
}

inline char to_char(Sign s) {
  switch (s) {
    case Sign::Positive: return '+';
    case Sign::Negative: return '-';
    default: return '0';
  }
}

// Canonical undirected state-edge key with i < j.
using EdgeKey = std::pair<NodeId, NodeId>;

inline EdgeKey make_edge(NodeId a, NodeId b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

// Error hierarchy. All library failures are reported through these.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed network description (bad indices, duplicate edges, ...).
struct InvalidNetworkError : Error {
  using Error::Error;
};

// A size cap for exhaustive enumeration was exceeded.
struct CapExceededError : Error {
  using Error::Error;
};

// Sign-pattern description of a diffusively coupled network:
// n state nodes, m input nodes, symmetric signed coupling between state
// pairs, and an injective assignment of each input to one state node.
struct SignedNetwork {
  int n = 0;
  // Unordered state pairs (i < j) -> nonzero sign. Absent pair = no edge.
  std::map<EdgeKey, Sign> state_edge_signs;
  // input_assignment[k] = state node driven by input k+1 (node id n+1+k).
  std::vector<NodeId> input_assignment;
  // Optional declared diagonal signs, one per state node, none Zero.
  std::optional<std::vector<Sign>> diagonal_signs;
  // Optional nominal weights, sign-consistent with state_edge_signs.
  std::optional<std::map<EdgeKey, double>> nominal_weights;

  int m() const { return static_cast<int>(input_assignment.size()); }
  NodeId input_node(int k) const { return n + 1 + k; }  // k is 0-based

  // Throws InvalidNetworkError when any structural invariant is violated.
  void validate() const;
};

// Subset of state nodes, stored as a bitset (bit i-1 <=> node i).
// Exhaustive enumeration over subsets is feasible only for small n; the
// enumeration cap below guards every exhaustive sweep.
struct StateSubset {
  std::uint64_t bits = 0;

  static StateSubset of(std::initializer_list<NodeId> xs) {
    StateSubset s;
    for (NodeId x : xs) s.insert(x);
    return s;
  }
  static StateSubset from(const std::vector<NodeId>& xs) {
    StateSubset s;
    for (NodeId x : xs) s.insert(x);
    return s;
  }

  bool contains(NodeId i) const { return (bits >> (i - 1)) & 1u; }
  void insert(NodeId i) { bits |= std::uint64_t{1} << (i - 1); }
  void erase(NodeId i) { bits &= ~(std::uint64_t{1} << (i - 1)); }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcountll(bits); }

  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    for (std::uint64_t b = bits; b;) {
      const int k = __builtin_ctzll(b);
      out.push_back(k + 1);
      b &= b - 1;
    }
    return out;
  }

  friend bool operator==(const StateSubset&, const StateSubset&) = default;
};

// Order used for deterministic witness reporting: cardinality ascending,
// then lexicographic on the sorted member sequence.
bool subset_order_less(const StateSubset& a, const StateSubset& b);

// Maximum universe size for exhaustive subset sweeps. Defaults to 20 and
// can be overridden with the TOPOCTRL_ENUM_CAP environment variable.
int enumeration_cap();

// Calls f(members) for every k-combination of the sorted universe, in
// lexicographic order of the member sequence. f returns false to stop.
// Returns false iff some call returned false.
template <class F>
bool for_each_combination(const std::vector<NodeId>& universe, int k, F&& f) {
  const int u = static_cast<int>(universe.size());
  if (k < 0 || k > u) return true;
  if (k == 0) return f(std::vector<NodeId>{});
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<NodeId> combo(static_cast<std::size_t>(k));
  for (;;) {
    for (int i = 0; i < k; ++i)
      combo[static_cast<std::size_t>(i)] =
          universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    if (!f(combo)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == u - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Calls f(StateSubset) for every nonempty subset of the sorted universe,
// cardinality ascending, lexicographic within each cardinality. f returns
// false to stop early. Returns false iff stopped early.
template <class F>
bool for_each_subset_card_lex(const std::vector<NodeId>& universe, F&& f) {
  const int u = static_cast<int>(universe.size());
  for (int k = 1; k <= u; ++k) {
    const bool go = for_each_combination(universe, k, [&](const std::vector<NodeId>& combo) {
      return f(StateSubset::from(combo));
    });
    if (!go) return false;
  }
  return true;
}

}  // namespace topoctrl
