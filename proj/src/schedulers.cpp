#include "kcycle/schedulers.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "scheme_builder.hpp"

namespace kcycle {
namespace {

using detail::BuildState;
using detail::FirstCall;

struct PlannedCall {
  int cycle = 0;
  bool second = false;
};

// Fixed round -> call table; planned calls whose target is informed by
// their round are dropped and later rounds stay put.
detail::CenterPolicy fixed_plan_policy(
    std::shared_ptr<std::vector<std::optional<PlannedCall>>> plan) {
  return [plan](const BuildState& st) -> std::optional<Vertex> {
    const int t = st.round();
    if (t >= static_cast<int>(plan->size()) || !(*plan)[t]) {
      return std::nullopt;
    }
    const PlannedCall pc = *(*plan)[t];
    if (pc.second) return st.uninformed_entry(pc.cycle);
    const Vertex arm_a{pc.cycle, 1};
    if (st.informed(arm_a)) return std::nullopt;
    return arm_a;
  };
}

BroadcastScheme build_with_plan(
    const KCycleGraph& g, Originator o,
    std::vector<std::optional<PlannedCall>> plan) {
  auto shared =
      std::make_shared<std::vector<std::optional<PlannedCall>>>(std::move(plan));
  return detail::run_build(g, o, FirstCall::ShortPathFirst,
                           fixed_plan_policy(std::move(shared)))
      .scheme;
}

}  // namespace

BroadcastScheme simple_k_cycle(const KCycleGraph& g, Originator o) {
  g.require_valid(o);
  const int k = g.k();
  const int d = originator_distance(g, o);
  std::vector<std::optional<PlannedCall>> plan(
      static_cast<std::size_t>(d + 2 * k + 1));
  if (o.is_center()) {
    for (int i = 1; i <= k; ++i) {
      plan[i] = PlannedCall{i, false};
      plan[k + i] = PlannedCall{i, true};
    }
  } else {
    const int m = o.cycle;
    for (int i = 1; i < m; ++i) plan[d + i] = PlannedCall{i, false};
    for (int i = m + 1; i <= k; ++i) plan[d + i - 1] = PlannedCall{i, false};
    for (int i = 1; i <= k; ++i) plan[d + k - 1 + i] = PlannedCall{i, true};
  }
  return build_with_plan(g, o, std::move(plan));
}

BroadcastScheme palindrome_schedule(const KCycleGraph& g) {
  const int k = g.k();
  std::vector<std::optional<PlannedCall>> plan(
      static_cast<std::size_t>(2 * k + 1));
  for (int i = 1; i <= k; ++i) {
    plan[i] = PlannedCall{i, false};
    plan[2 * k + 1 - i] = PlannedCall{i, true};
  }
  return build_with_plan(g, Vertex::center(), std::move(plan));
}

BroadcastScheme s_cycle(const KCycleGraph& g, Originator o) {
  g.require_valid(o);
  const int k = g.k();
  auto policy = [k](const BuildState& st) -> std::optional<Vertex> {
    int untouched = 0, untouched_count = -1;
    int touched = 0, touched_count = -1;
    for (int i = 1; i <= k; ++i) {
      const int u = st.uninformed_in_cycle(i);
      if (u == 0) continue;
      if (st.informed_in_cycle(i) == 0) {
        if (u > untouched_count) {
          untouched = i;
          untouched_count = u;
        }
      } else if (st.uninformed_entry(i)) {
        if (u > touched_count) {
          touched = i;
          touched_count = u;
        }
      }
    }
    // Tie on the head counts goes to the untouched list.
    if (untouched != 0 && untouched_count >= touched_count) {
      return Vertex{untouched, 1};
    }
    if (touched != 0) return st.uninformed_entry(touched);
    return std::nullopt;
  };
  return detail::run_build(g, o, FirstCall::ShortPathFirst, policy).scheme;
}

BroadcastScheme a_cycle(const KCycleGraph& g, Originator o) {
  g.require_valid(o);
  const int k = g.k();
  const int first_round_of_center = originator_distance(g, o) + 1;

  // Smallest floor(k/2) cycles in decreasing length order, then the
  // ceil(k/2) largest; lengths are sorted, so both runs are index order.
  std::vector<int> first_pass;
  first_pass.reserve(static_cast<std::size_t>(k));
  for (int i = k - k / 2 + 1; i <= k; ++i) first_pass.push_back(i);
  for (int i = 1; i <= k - k / 2; ++i) first_pass.push_back(i);

  struct Phase2 {
    bool built = false;
    std::vector<int> queue;
    std::size_t next = 0;
  };
  auto phase2 = std::make_shared<Phase2>();

  auto policy = [=](const BuildState& st) -> std::optional<Vertex> {
    const int slot = st.round() - first_round_of_center;
    if (slot < 0) return std::nullopt;
    if (slot < k) {
      const int cycle = first_pass[static_cast<std::size_t>(slot)];
      const Vertex arm_a{cycle, 1};
      if (!st.informed(arm_a)) return arm_a;
      return st.uninformed_entry(cycle);
    }
    if (!phase2->built) {
      // Second-call order is frozen from the state where the first pass
      // ended: uninformed count descending, index ascending.
      phase2->built = true;
      std::vector<std::pair<int, int>> rows;  // (-count, cycle)
      for (int i = 1; i <= k; ++i) {
        if (st.uninformed_in_cycle(i) > 0) {
          rows.emplace_back(-st.uninformed_in_cycle(i), i);
        }
      }
      std::sort(rows.begin(), rows.end());
      for (const auto& [neg, cycle] : rows) phase2->queue.push_back(cycle);
    }
    while (phase2->next < phase2->queue.size()) {
      const int cycle = phase2->queue[phase2->next++];
      if (auto entry = st.uninformed_entry(cycle)) return entry;
    }
    return std::nullopt;
  };
  return detail::run_build(g, o, FirstCall::ShortPathFirst, policy).scheme;
}

CenterCallPlan plan_of(const KCycleGraph& g, const BroadcastScheme& s) {
  CenterCallPlan plan;
  for (int t = 1; t <= s.round_count(); ++t) {
    for (const Call& c : s.round(t)) {
      if (!c.from.is_center()) continue;
      plan.entries.push_back(
          {t, c.to.cycle, c.to.pos == 1 ? Arm::A : Arm::B});
    }
  }
  return plan;
}

const std::vector<std::string>& scheduler_names() {
  static const std::vector<std::string> names{"simple", "scycle", "acycle",
                                              "palindrome"};
  return names;
}

Scheduler scheduler_by_name(std::string_view name) {
  if (name == "simple") return simple_k_cycle;
  if (name == "scycle") return s_cycle;
  if (name == "acycle") return a_cycle;
  if (name == "palindrome") {
    return [](const KCycleGraph& g, Originator o) {
      if (!o.is_center()) throw NotCenterOriginatorError();
      return palindrome_schedule(g);
    };
  }
  throw Error("unknown scheduler '" + std::string(name) +
              "' (expected simple, scycle, acycle, or palindrome)");
}

}  // namespace kcycle
