#pragma once

#include <cstdint>
#include <string>

#include "kcycle/scheme.hpp"
#include "kcycle/topology.hpp"

namespace kcycle {

enum class ExactMethod { SubsetDP, StructuredEnum };

std::string to_string(ExactMethod m);

struct ExactConfig {
  // exact_subset works on bitmask states, so n is capped hard at 25 and
  // softly here; defaults keep desk runs under a minute.
  int subset_vertex_cap = 14;
  int structured_cycle_cap = 6;
  long long budget = 50'000'000;  // enumeration steps for exact_subset
};

// Optimal broadcast time with a witness scheme achieving it. The witness
// is re-validated before being returned.
struct ExactResult {
  int time = 0;
  BroadcastScheme scheme;
  long long nodes_expanded = 0;
  ExactMethod method = ExactMethod::SubsetDP;
};

// Memoized search over informed sets: from a set S every informed vertex
// with an untargeted uninformed neighbor calls one (no voluntary idling;
// earlier information never hurts), and b(S) = 1 + min over the successor
// sets. Generic and oblivious to the k-cycle structure.
ExactResult exact_subset(const KCycleGraph& g, Originator o,
                         const ExactConfig& cfg = {});

// Rounds needed to finish from an arbitrary informed set, sharing the
// exact_subset machinery. Bit i of informed_mask marks the vertex with
// dense index i. Exposed for the monotonicity property of the DP.
int subset_rounds_from(const KCycleGraph& g, std::uint32_t informed_mask,
                       const ExactConfig& cfg = {});

// Structured enumeration: degree-2 vertices have forced moves, so the only
// genuine choices are the originator's first two rounds (two orders) and
// which uninformed cycle entry the center calls each round. Branch and
// bound over those center schedules, with closed-form completion times per
// cycle. Handles any cycle lengths; capped by k.
ExactResult exact_structured(const KCycleGraph& g, Originator o,
                             const ExactConfig& cfg = {});

}  // namespace kcycle
