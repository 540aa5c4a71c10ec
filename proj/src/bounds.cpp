#include "kcycle/bounds.hpp"

#include <algorithm>

#include "kcycle/simulate.hpp"

namespace kcycle {
namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

void require_on_cycle(const KCycleGraph& g, int m, int d) {
  if (m < 1 || m > g.k()) {
    throw InvalidVertexError("cycle index " + std::to_string(m) +
                             " out of range");
  }
  if (d < 1 || d > (g.length(m) + 1) / 2) {
    throw InvalidVertexError("distance " + std::to_string(d) +
                             " is not reachable on cycle " +
                             std::to_string(m));
  }
}

}  // namespace

BoundReport lb_center(const KCycleGraph& g) {
  BoundReport r;
  r.lb_degree = g.k() + 1;
  for (int j = 1; j <= g.k(); ++j) {
    const int bound = ceil_div(g.length(j) + 2 * j - 1, 2);
    if (bound > r.lb_cycle) {
      r.lb_cycle = bound;
      r.witness_j = j;
    }
  }
  r.combined = std::max(r.lb_degree, r.lb_cycle);
  return r;
}

BoundReport lb_on_cycle(const KCycleGraph& g, int m, int d) {
  require_on_cycle(g, m, d);
  BoundReport r;
  r.lb_degree = g.k() + 1;
  for (int j = 1; j <= g.k(); ++j) {
    // The center bound transfers: no originator beats the center's own
    // per-cycle bound. On top of it, every cycle other than m pays the
    // distance d before the center can start serving it.
    int bound = ceil_div(g.length(j) + 2 * j - 1, 2);
    if (j != m) {
      bound = std::max(bound, d + ceil_div(g.length(j) + 2 * j - 2, 2));
    }
    if (bound > r.lb_cycle) {
      r.lb_cycle = bound;
      r.witness_j = j;
    }
  }
  r.combined = std::max(r.lb_degree, r.lb_cycle);
  return r;
}

int predicted_time_center(const KCycleGraph& g) {
  int worst = 0;
  for (int i = 1; i <= g.k(); ++i) {
    const int l = g.length(i);
    const int both = ceil_div(2 * i - 2 + g.k() + l, 2);
    worst = std::max(worst, std::min(i + l - 1, both));
  }
  return worst;
}

int origin_center_informed_round(int l, int p, bool short_first) {
  const bool short_is_down = p <= l + 1 - p;
  const int rd = (short_is_down == short_first) ? 1 : 2;
  const int ru = 3 - rd;
  return std::min(rd + p - 1, ru + l - p);
}

int origin_cycle_completion(int l, int p, bool short_first,
                            std::optional<int> center_call_round) {
  const bool short_is_down = p <= l + 1 - p;
  const int rd = (short_is_down == short_first) ? 1 : 2;
  const int ru = 3 - rd;

  auto via_origin = [&](int q) {
    if (q == p) return 0;
    return q < p ? rd + (p - 1 - q) : ru + (q - p - 1);
  };

  // The center can only reach into this cycle through whichever entry the
  // originator's fronts inform last.
  const int low_time = via_origin(1);
  const int high_time = via_origin(l);
  const bool far_is_high = high_time >= low_time;
  const int far_time = far_is_high ? high_time : low_time;

  std::optional<int> rc;
  if (center_call_round && *center_call_round <= far_time) {
    rc = *center_call_round;
  }

  int completion = 0;
  for (int q = 1; q <= l; ++q) {
    int t = via_origin(q);
    if (rc) {
      const int back = far_is_high ? *rc + (l - q) : *rc + (q - 1);
      t = std::min(t, back);
    }
    completion = std::max(completion, t);
  }
  return completion;
}

int predicted_time_on_cycle(const KCycleGraph& g, int m, int d) {
  require_on_cycle(g, m, d);
  const int k = g.k();
  int worst =
      origin_cycle_completion(g.length(m), d, true, d + k - 1 + m);
  for (int i = 1; i <= k; ++i) {
    if (i == m) continue;
    const int first = i < m ? d + i : d + i - 1;
    const int second = d + k - 1 + i;
    worst = std::max(worst,
                     cycle_completion_time(g.length(i), first, second));
  }
  return worst;
}

}  // namespace kcycle
