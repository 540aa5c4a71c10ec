#pragma once

#include <optional>

#include "kcycle/topology.hpp"

namespace kcycle {

// Instance-computable lower bounds on the broadcast time.
struct BoundReport {
  int lb_degree = 0;  // k+1: the center's last neighbor waits k rounds
  int lb_cycle = 0;   // best per-cycle bound
  int witness_j = 0;  // cycle achieving lb_cycle (smallest index on ties)
  int combined = 0;   // max of the above

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Lower bound for the central originator:
// max(k+1, max_j ceil((l_j + 2j - 1) / 2)).
BoundReport lb_center(const KCycleGraph& g);

// Lower bound for an originator on cycle m at distance d from the center:
// the center bound still applies, plus d + ceil((l_j + 2j - 2) / 2) for
// every j != m. For k = 1 the distance term is vacuous and the bound falls
// back to the remaining terms.
BoundReport lb_on_cycle(const KCycleGraph& g, int m, int d);

// Closed-form broadcast time of the simple scheduler from the center:
// max_i min(i + l_i - 1, ceil((2i - 2 + k + l_i) / 2)). An independent
// second route to simulate(simple_k_cycle(g, center)).
int predicted_time_center(const KCycleGraph& g);

// Same for an originator on cycle m at distance d. Cycles other than m
// have at most two informing fronts and close-form cleanly; the
// originator's own cycle has up to three fronts and is evaluated by direct
// per-position arithmetic.
int predicted_time_on_cycle(const KCycleGraph& g, int m, int d);

// Completion round of the originator's own cycle in isolation: the
// originator sits at position p of a cycle with l vertices, calls its
// short-path neighbor in round 1 and the other neighbor in round 2 (or the
// reverse when short_first is false), interior vertices forward every
// round, and the center calls the still-uninformed entry at
// center_call_round when one exists by then.
int origin_cycle_completion(int l, int p, bool short_first,
                            std::optional<int> center_call_round);

// Round at which the center is first informed through the originator's
// cycle under the same conventions.
int origin_center_informed_round(int l, int p, bool short_first);

}  // namespace kcycle
