#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kcycle/scheme.hpp"
#include "kcycle/topology.hpp"

namespace kcycle {

enum class Arm { A, B };

// One call made by the center: round, which cycle, which side.
struct PlanEntry {
  int round = 0;
  int cycle = 0;
  Arm arm = Arm::A;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

// The center's calls of a scheme in round order. Rounds are strictly
// increasing and no (cycle, arm) pair repeats for any legal scheme.
struct CenterCallPlan {
  std::vector<PlanEntry> entries;
};

// The paper's approximation scheduler. Center case: cycle C_i is called at
// rounds i and k+i. Non-center case (originator on C_m at distance d): the
// originator first informs toward the center, the center is informed at
// round d and then calls C_1..C_{m-1} at rounds d+1..d+m-1, C_{m+1}..C_k
// at rounds d+m..d+k-1, and every cycle a second time at round d+k-1+i.
// Planned calls whose target is already informed are dropped without
// advancing the remaining rounds.
BroadcastScheme simple_k_cycle(const KCycleGraph& g, Originator o);

// Prior baseline: each round the informed center compares the largest
// once-informed cycle against the largest untouched cycle by current
// uninformed-vertex count and calls the larger (ties prefer untouched).
BroadcastScheme s_cycle(const KCycleGraph& g, Originator o);

// Prior baseline: the center first calls the floor(k/2) smallest cycles in
// decreasing length order, then the ceil(k/2) largest, then issues second
// calls in decreasing order of uninformed vertices measured when the first
// pass ends.
BroadcastScheme a_cycle(const KCycleGraph& g, Originator o);

// Reference scheme for the central originator: C_i is called at rounds i
// and 2k+1-i, which is optimal when all cycle lengths are equal.
BroadcastScheme palindrome_schedule(const KCycleGraph& g);

// Extracts the center's calls from a scheme.
CenterCallPlan plan_of(const KCycleGraph& g, const BroadcastScheme& s);

using Scheduler =
    std::function<BroadcastScheme(const KCycleGraph&, Originator)>;

// Lookup by CLI name: "simple", "scycle", "acycle", "palindrome" (the
// latter requires a central originator).
Scheduler scheduler_by_name(std::string_view name);

const std::vector<std::string>& scheduler_names();

}  // namespace kcycle
