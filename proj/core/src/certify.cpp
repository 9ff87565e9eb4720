#include "topoctrl/certify.hpp"

#include <cassert>
#include <sstream>

namespace topoctrl {

std::string to_string(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::NotCertified: return "NotCertified";
    case Status::NumericallyRefuted: return "NumericallyRefuted";
  }
  return "?";
}

std::optional<DedicatedWitness> find_dedicated_node(const Graph& g, const StateSubset& alpha) {
  if (alpha.empty()) throw Error("find_dedicated_node: empty subset");
  const std::vector<NodeId> members = alpha.members();
  const std::set<NodeId> hood = neighborhood_of_set(g, alpha);
  for (NodeId i : members) {
    for (NodeId d : neighbors(g, i)) {
      if (d <= g.n && alpha.contains(d)) continue;  // d must lie outside alpha
      if (!hood.count(d)) continue;                 // d in N(alpha)
      if (d == i) continue;                         // self-loop is inside alpha
      bool exclusive = true;
      for (NodeId j : members) {
        if (j == i) continue;
        if (neighbors(g, j).count(d)) {
          exclusive = false;
          break;
        }
      }
      if (exclusive) return DedicatedWitness{i, d};
    }
  }
  return std::nullopt;
}

std::optional<DedicatedWitness> find_dedicated_node_fast(const Graph& g, const StateSubset& alpha) {
  if (alpha.empty()) throw Error("find_dedicated_node_fast: empty subset");
  const std::vector<NodeId> members = alpha.members();
  const std::set<NodeId> hood = neighborhood_of_set(g, alpha);

  auto external = [&](NodeId i) {
    std::set<NodeId> out;
    for (NodeId d : neighbors(g, i)) {
      if (d <= g.n && alpha.contains(d)) continue;
      if (d == i) continue;
      if (hood.count(d)) out.insert(d);
    }
    return out;
  };

  for (NodeId i : members) {
    const std::set<NodeId> ei = external(i);
    if (ei.empty()) continue;
    bool disjoint = true;
    for (NodeId j : members) {
      if (j == i) continue;
      for (NodeId d : external(j)) {
        if (ei.count(d)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) break;
    }
    if (disjoint) return DedicatedWitness{i, *ei.begin()};
  }
  return std::nullopt;
}

Verdict certify_bruteforce(const Graph& g, int cap) {
  const int size = static_cast<int>(g.states.size());
  if (size > cap) {
    std::ostringstream os;
    os << "brute-force certification over " << size
       << " state nodes exceeds the enumeration cap (" << cap
       << "); use the decomposition/merging pipeline instead";
    throw CapExceededError(os.str());
  }

  const std::vector<NodeId> universe(g.states.begin(), g.states.end());
  Verdict v;
  v.status = Status::Certified;
  for_each_subset_card_lex(universe, [&](const StateSubset& alpha) {
#ifndef NDEBUG
    // Self-loops guarantee alpha is contained in its own neighborhood.
    for (NodeId i : alpha.members()) assert(neighbors(g, i).count(i));
#endif
    if (!find_dedicated_node(g, alpha)) {
      v.status = Status::NotCertified;
      v.witness = alpha;
      return false;
    }
    return true;
  });

  if (v.status == Status::Certified) {
    v.note = "every nonempty state subset has a dedicated node";
  } else {
    std::ostringstream os;
    os << "not certified by the dedicated-node condition: subset {";
    bool first = true;
    for (NodeId i : v.witness->members()) {
      if (!first) os << ",";
      os << i;
      first = false;
    }
    os << "} has no dedicated node (inconclusive for controllability)";
    v.note = os.str();
  }
  return v;
}

}  // namespace topoctrl
