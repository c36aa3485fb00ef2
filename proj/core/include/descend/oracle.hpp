#pragma once

#include <set>
#include <vector>

#include <descend/domain.hpp>
#include <descend/solver.hpp>

namespace descend {

// Exhaustive collecting-semantics interpreter for bounded programs.
// Every variable is confined to [-bound, bound]; transitions leaving
// the bound are discarded, so the result under-approximates the
// unbounded semantics. That is the safe direction for checking an
// over-approximating analysis: any state found outside an abstract
// value is a real soundness bug.

struct OracleConfig {
  long long bound = 128;
  std::size_t max_states = 1'000'000;
};

using ConcreteState = std::vector<long long>; // one value per program variable

struct ConcreteStateSet {
  bool feasible = true;      // false: state cap exceeded, result unusable
  std::size_t total_states = 0;
  std::vector<std::set<ConcreteState>> per_node; // indexed by NodeId

  const std::set<ConcreteState> &at(NodeId n) const { return per_node[n]; }
};

// Least fixpoint of the bounded transition system by worklist
// iteration. Variables that are live at entry range over the whole
// bound; variables always written before being read start at 0 (their
// initial value cannot influence any computed state).
ConcreteStateSet collect(const Cfg &cfg, const OracleConfig &config = {});

struct SoundnessViolation {
  NodeId node;
  ConcreteState state;
};

// Every reachable concrete state must lie inside the concretization of
// the node's abstract value.
std::vector<SoundnessViolation> check_soundness(const Assignment &abstract,
                                                DomainId domain,
                                                const ConcreteStateSet &concrete);

// Per-variable read-before-write liveness at the entry node.
std::vector<bool> live_at_entry(const Cfg &cfg);

} // namespace descend
