#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcycle/scheme.hpp"
#include "kcycle/topology.hpp"

namespace kcycle {

enum class ViolationReason {
  SenderUninformed,
  ReceiverAlreadyInformed,
  NotAdjacent,
  SenderBusy,
};

std::string to_string(ViolationReason r);

// One broken model rule. same_round is set when two calls of the same
// round target one receiver (the receiver was not informed before the
// round, but the scheme is still rejected as defective).
struct Violation {
  int round = 0;
  Call call;
  ViolationReason reason = ViolationReason::NotAdjacent;
  bool same_round = false;

  std::string describe() const;
};

// Full checker output: either a broadcast time (all rules hold and every
// vertex was informed) or the complete list of problems found.
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Vertex> uninformed;  // nonempty iff the scheme ends early
  InformTimes times;

  bool ok() const { return violations.empty() && uninformed.empty(); }
  std::optional<int> time() const {
    if (!ok()) return std::nullopt;
    return times.broadcast_time();
  }
};

// Checks every call of the scheme against model rules 1-5 without stopping
// at the first problem. Calls that individually pass still take effect so
// later rounds are judged against a meaningful state.
ValidationReport validate(const KCycleGraph& g, Originator o,
                          const BroadcastScheme& s);

class IllegalCallError : public Error {
 public:
  explicit IllegalCallError(const Violation& v)
      : Error(v.describe()), violation(v) {}
  Violation violation;
};

class IncompleteError : public Error {
 public:
  explicit IncompleteError(std::vector<Vertex> left)
      : Error("scheme ends with " + std::to_string(left.size()) +
              " uninformed vertices"),
        uninformed(std::move(left)) {}
  std::vector<Vertex> uninformed;
};

// Strict simulation: throws IllegalCallError on the first broken rule and
// IncompleteError when rounds run out early; otherwise returns the inform
// times (originator at round 0).
InformTimes simulate(const KCycleGraph& g, Originator o,
                     const BroadcastScheme& s);

// Completion round of one isolated cycle of length l whose center-side
// entries are called at round a and optionally round b (b > a), with
// interior vertices forwarding every round. A second call that arrives
// once the first front already covered the cycle contributes nothing,
// which the min with the single-call value accounts for.
int cycle_completion_time(int l, int a, std::optional<int> b = std::nullopt);

}  // namespace kcycle
