#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kcycle/topology.hpp"

namespace kcycle {

// One call of the telephone model: sender informs receiver.
struct Call {
  Vertex from;
  Vertex to;

  friend constexpr bool operator==(const Call&, const Call&) = default;
};

// Per-round call lists; round t is rounds[t-1]. This is the universal
// certificate format every scheduler emits and the validator checks.
struct BroadcastScheme {
  std::vector<std::vector<Call>> rounds;

  int round_count() const { return static_cast<int>(rounds.size()); }

  std::vector<Call>& round(int t) { return rounds[t - 1]; }
  const std::vector<Call>& round(int t) const { return rounds[t - 1]; }

  // Grows the scheme so round t exists, then appends the call.
  void add_call(int t, Call c) {
    if (round_count() < t) rounds.resize(t);
    rounds[t - 1].push_back(c);
  }

  friend bool operator==(const BroadcastScheme&,
                         const BroadcastScheme&) = default;
};

// First-informed round per vertex, indexed densely (see
// KCycleGraph::index_of). The originator is informed at round 0.
struct InformTimes {
  static constexpr int kNever = -1;

  std::vector<int> by_index;

  int at(const KCycleGraph& g, Vertex v) const {
    return by_index[static_cast<std::size_t>(g.index_of(v))];
  }

  bool complete() const {
    return std::find(by_index.begin(), by_index.end(), kNever) ==
           by_index.end();
  }

  // Broadcast time: the latest first-informed round.
  int broadcast_time() const {
    return *std::max_element(by_index.begin(), by_index.end());
  }
};

}  // namespace kcycle
