#include "kcycle/simulate.hpp"

#include <algorithm>

namespace kcycle {
namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

std::string to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::SenderUninformed:
      return "SenderUninformed";
    case ViolationReason::ReceiverAlreadyInformed:
      return "ReceiverAlreadyInformed";
    case ViolationReason::NotAdjacent:
      return "NotAdjacent";
    case ViolationReason::SenderBusy:
      return "SenderBusy";
  }
  return "?";
}

std::string Violation::describe() const {
  std::string s = "round " + std::to_string(round) + ": " + to_string(call.from) +
                  " -> " + to_string(call.to) + ": " + to_string(reason);
  if (same_round) s += " (duplicate call within the round)";
  return s;
}

ValidationReport validate(const KCycleGraph& g, Originator o,
                          const BroadcastScheme& s) {
  g.require_valid(o);
  const std::int64_t n = g.n();

  ValidationReport report;
  report.times.by_index.assign(static_cast<std::size_t>(n),
                               InformTimes::kNever);
  std::vector<std::int8_t> informed(static_cast<std::size_t>(n), 0);
  // claimed[v] == t: some call already targets v in round t.
  // busy[v] == t: v already sends in round t.
  std::vector<int> claimed(static_cast<std::size_t>(n), 0);
  std::vector<int> busy(static_cast<std::size_t>(n), 0);

  const auto origin = static_cast<std::size_t>(g.index_of(o));
  informed[origin] = 1;
  report.times.by_index[origin] = 0;

  std::vector<std::size_t> newly;
  for (int t = 1; t <= s.round_count(); ++t) {
    newly.clear();
    for (const Call& c : s.round(t)) {
      const auto from = static_cast<std::size_t>(g.index_of(c.from));
      const auto to = static_cast<std::size_t>(g.index_of(c.to));
      auto flag = [&](ViolationReason why, bool same_round = false) {
        report.violations.push_back({t, c, why, same_round});
      };
      if (!g.adjacent(c.from, c.to)) {
        flag(ViolationReason::NotAdjacent);
        continue;
      }
      if (!informed[from]) {
        flag(ViolationReason::SenderUninformed);
        continue;
      }
      if (informed[to]) {
        flag(ViolationReason::ReceiverAlreadyInformed);
        continue;
      }
      if (claimed[to] == t) {
        flag(ViolationReason::ReceiverAlreadyInformed, /*same_round=*/true);
        continue;
      }
      if (busy[from] == t) {
        flag(ViolationReason::SenderBusy);
        continue;
      }
      claimed[to] = t;
      busy[from] = t;
      newly.push_back(to);
    }
    // All calls of a round land in parallel.
    for (std::size_t v : newly) {
      informed[v] = 1;
      report.times.by_index[v] = t;
    }
  }

  for (std::int64_t i = 0; i < n; ++i) {
    if (!informed[static_cast<std::size_t>(i)]) {
      report.uninformed.push_back(g.vertex_at(i));
    }
  }
  return report;
}

InformTimes simulate(const KCycleGraph& g, Originator o,
                     const BroadcastScheme& s) {
  ValidationReport report = validate(g, o, s);
  if (!report.violations.empty()) {
    throw IllegalCallError(report.violations.front());
  }
  if (!report.uninformed.empty()) {
    throw IncompleteError(std::move(report.uninformed));
  }
  return std::move(report.times);
}

int cycle_completion_time(int l, int a, std::optional<int> b) {
  if (l < 2) throw CycleTooShortError(l);
  if (a < 1) throw Error("first call round must be at least 1");
  const int single = a + l - 1;
  if (!b) return single;
  if (*b <= a) throw BadCallOrderError(a, *b);
  return std::min(single, ceil_div(a + *b + l - 2, 2));
}

}  // namespace kcycle
