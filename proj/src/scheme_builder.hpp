#pragma once

// Round-stepping scheme construction shared by the schedulers and the
// exact solvers' witness reconstruction. The builder owns the model-side
// mechanics: interior vertices forward to their unique uninformed neighbor
// every round, the center acts through a pluggable policy, and same-round
// collisions on one receiver are resolved deterministically (center first,
// then fronts in creation order; the loser stays idle).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kcycle/scheme.hpp"
#include "kcycle/topology.hpp"

namespace kcycle::detail {

// Which neighbor a non-center originator calls in round 1. The spec
// schedulers use the shorter path to the center; the exact search tries
// both orders.
enum class FirstCall { ShortPathFirst, LongPathFirst };

class BuildState;

// Decides the center's call for the current round. Only consulted once the
// center is informed. Must return an uninformed neighbor of the center (an
// entry vertex of some cycle) or nullopt to stay idle.
using CenterPolicy = std::function<std::optional<Vertex>(const BuildState&)>;

struct BuildResult {
  BroadcastScheme scheme;
  InformTimes times;
};

class BuildState {
 public:
  BuildState(const KCycleGraph& g, Originator o);

  const KCycleGraph& graph() const { return *g_; }
  int round() const { return round_; }
  bool informed(Vertex v) const {
    return informed_[static_cast<std::size_t>(g_->index_of(v))] != 0;
  }
  bool center_informed() const { return informed_[0] != 0; }
  int center_informed_round() const { return times_.by_index[0]; }
  int uninformed_in_cycle(int cycle) const {
    return uninformed_[cycle - 1];
  }
  int informed_in_cycle(int cycle) const {
    return g_->length(cycle) - uninformed_[cycle - 1];
  }
  // The cycle's center-side entry that is still uninformed, preferring arm
  // B (the usual second-call target); nullopt when both are informed.
  std::optional<Vertex> uninformed_entry(int cycle) const;

 private:
  friend BuildResult run_build(const KCycleGraph& g, Originator o,
                               FirstCall first, const CenterPolicy& policy);

  struct Front {
    std::int32_t cycle;
    std::int32_t pos;
    std::int32_t dir;  // +1 toward higher positions, -1 toward lower
  };

  bool informed_idx(std::int64_t i) const {
    return informed_[static_cast<std::size_t>(i)] != 0;
  }
  bool claimed_idx(std::int64_t i) const {
    return claimed_[static_cast<std::size_t>(i)] == round_;
  }

  const KCycleGraph* g_;
  int round_ = 0;
  std::int64_t informed_count_ = 0;
  std::vector<std::int8_t> informed_;
  std::vector<int> claimed_;  // round stamp of the claim, 0 = none
  std::vector<int> uninformed_;  // per cycle
  std::vector<Front> fronts_;
  InformTimes times_;
};

// Runs the broadcast to completion and returns the emitted scheme plus the
// inform times it realizes. Throws on internal invariant breaches only.
BuildResult run_build(const KCycleGraph& g, Originator o, FirstCall first,
                      const CenterPolicy& policy);

}  // namespace kcycle::detail
