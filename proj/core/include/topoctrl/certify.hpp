#pragma once

#include <memory>
#include <optional>
#include <string>

#include "topoctrl/graph.hpp"
#include "topoctrl/types.hpp"

namespace topoctrl {

struct Realization;  // defined in numeric.hpp

// A dedicated node: `dedicated` lies outside alpha, is adjacent to `holder`
// (a member of alpha), and to no other member of alpha.
struct DedicatedWitness {
  NodeId holder = 0;
  NodeId dedicated = 0;
  friend bool operator==(const DedicatedWitness&, const DedicatedWitness&) = default;
};

enum class Status { Certified, NotCertified, NumericallyRefuted };

std::string to_string(Status s);

// Assumption checks that accompany a verdict.
struct AssumptionReport {
  std::map<NodeId, bool> accessible;  // per state node
  bool all_accessible = true;
  // Filled when the randomized full-row-rank refutation has been run.
  std::optional<bool> row_rank_refuted;
  int row_rank_trials = 0;
};

// Outcome of a certification route.
//  - Certified: every relevant subset has a dedicated node. The condition is
//    sufficient for controllability of every sign-consistent realization.
//  - NotCertified: not certified by the dedicated-node condition. This is
//    NOT a proof of uncontrollability; `witness` holds a failing subset when
//    a subset-level check produced the verdict.
//  - NumericallyRefuted: a concrete sign-consistent realization with
//    rank-deficient controllability matrix exists (see `refutation`).
struct Verdict {
  Status status = Status::NotCertified;
  std::optional<StateSubset> witness;
  std::shared_ptr<const Realization> refutation;
  std::optional<AssumptionReport> assumptions;
  std::string note;
};

// Exact dedicated-node finder for one subset: scans i in alpha ascending and
// candidates d in N_i \cap (N(alpha)\alpha) ascending, returning the first
// (i, d) with d adjacent to no other member of alpha — i.e. the
// lexicographically smallest witness. Returns nullopt iff none exists.
std::optional<DedicatedWitness> find_dedicated_node(const Graph& g, const StateSubset& alpha);

// Sufficient-only fast variant: reports a witness only when some i in alpha
// has external neighbors disjoint from every other member's external
// neighborhood. A nullopt here is inconclusive; callers must fall back to
// find_dedicated_node.
std::optional<DedicatedWitness> find_dedicated_node_fast(const Graph& g, const StateSubset& alpha);

// Sweeps every nonempty subset of the graph's state nodes (cardinality
// ascending, then lexicographic) and reports Certified iff each one has a
// dedicated node; otherwise NotCertified with the first failing subset.
// Throws CapExceededError when the state count exceeds `cap`.
Verdict certify_bruteforce(const Graph& g, int cap = enumeration_cap());

}  // namespace topoctrl
