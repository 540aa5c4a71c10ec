#include "scheme_builder.hpp"

#include <stdexcept>

namespace kcycle::detail {
namespace {

// Neighbor of (cycle, pos) toward lower positions; the center below pos 1.
Vertex step_down(Vertex v) {
  return v.pos == 1 ? Vertex::center() : Vertex{v.cycle, v.pos - 1};
}

Vertex step_up(const KCycleGraph& g, Vertex v) {
  return v.pos == g.length(v.cycle) ? Vertex::center()
                                    : Vertex{v.cycle, v.pos + 1};
}

}  // namespace

BuildState::BuildState(const KCycleGraph& g, Originator o) : g_(&g) {
  g.require_valid(o);
  const auto n = static_cast<std::size_t>(g.n());
  informed_.assign(n, 0);
  claimed_.assign(n, 0);
  times_.by_index.assign(n, InformTimes::kNever);
  uninformed_ = g.lengths();

  const auto origin = static_cast<std::size_t>(g.index_of(o));
  informed_[origin] = 1;
  times_.by_index[origin] = 0;
  informed_count_ = 1;
  if (!o.is_center()) --uninformed_[o.cycle - 1];
}

std::optional<Vertex> BuildState::uninformed_entry(int cycle) const {
  const Vertex arm_b{cycle, g_->length(cycle)};
  if (!informed(arm_b)) return arm_b;
  const Vertex arm_a{cycle, 1};
  if (!informed(arm_a)) return arm_a;
  return std::nullopt;
}

BuildResult run_build(const KCycleGraph& g, Originator o, FirstCall first,
                      const CenterPolicy& policy) {
  BuildState st(g, o);
  BroadcastScheme scheme;

  // Round-1/2 targets of a non-center originator. The shorter path breaks
  // the midpoint tie toward position 1.
  Vertex first_target, second_target;
  if (!o.is_center()) {
    const Vertex down = step_down(o);
    const Vertex up = step_up(g, o);
    const bool short_is_down = o.pos <= g.length(o.cycle) + 1 - o.pos;
    const Vertex short_ngh = short_is_down ? down : up;
    const Vertex long_ngh = short_is_down ? up : down;
    first_target = first == FirstCall::ShortPathFirst ? short_ngh : long_ngh;
    second_target = first == FirstCall::ShortPathFirst ? long_ngh : short_ngh;
  }

  const std::int64_t max_rounds = 2 * g.n() + 2 * g.k() + 16;
  std::vector<Call> calls;
  std::vector<BuildState::Front> spawned;
  std::vector<BuildState::Front> survivors;

  while (st.informed_count_ < g.n()) {
    const int t = ++st.round_;
    if (t > max_rounds) {
      throw std::logic_error("scheme construction failed to terminate");
    }
    calls.clear();
    spawned.clear();

    auto claim = [&](Vertex from, Vertex to) {
      st.claimed_[static_cast<std::size_t>(g.index_of(to))] = t;
      calls.push_back({from, to});
      if (!to.is_center()) {
        const std::int32_t dir = to.pos == 1 ? 1 : -1;
        // Entries spawn an inward front; an interior target continues the
        // front that reached it, handled by the advancing loop below.
        spawned.push_back({to.cycle, to.pos, dir});
      }
    };

    // 1. Center move. The policy sees the pre-round state.
    if (st.center_informed() && policy) {
      if (std::optional<Vertex> target = policy(st)) {
        if (!g.adjacent(Vertex::center(), *target) || st.informed(*target)) {
          throw std::logic_error("center policy produced an illegal call");
        }
        claim(Vertex::center(), *target);
      }
    }

    // 2. Scripted originator calls in rounds 1 and 2.
    if (!o.is_center() && t <= 2) {
      const Vertex target = t == 1 ? first_target : second_target;
      const auto idx = g.index_of(target);
      if (!st.informed_idx(idx) && !st.claimed_idx(idx)) {
        st.claimed_[static_cast<std::size_t>(idx)] = t;
        calls.push_back({o, target});
        if (!target.is_center()) {
          spawned.push_back({target.cycle, target.pos,
                             target.pos == o.pos + 1 ? 1 : -1});
        }
      }
    }

    // 3. Fronts forward, in creation order; a front whose target is taken
    //    this round or already informed retires.
    survivors.clear();
    for (BuildState::Front f : st.fronts_) {
      const Vertex head{f.cycle, f.pos};
      const Vertex target =
          f.dir > 0 ? step_up(g, head) : step_down(head);
      const auto idx = g.index_of(target);
      if (st.informed_idx(idx) || st.claimed_idx(idx)) continue;
      st.claimed_[static_cast<std::size_t>(idx)] = t;
      calls.push_back({head, target});
      if (!target.is_center()) {
        f.pos += f.dir;
        survivors.push_back(f);
      }
    }
    st.fronts_.swap(survivors);
    for (const BuildState::Front& f : spawned) st.fronts_.push_back(f);

    // 4. All calls of the round land in parallel.
    for (const Call& c : calls) {
      const auto idx = static_cast<std::size_t>(g.index_of(c.to));
      st.informed_[idx] = 1;
      st.times_.by_index[idx] = t;
      ++st.informed_count_;
      if (!c.to.is_center()) --st.uninformed_[c.to.cycle - 1];
    }
    if (scheme.round_count() < t) scheme.rounds.resize(t);
    scheme.rounds[t - 1] = calls;
  }

  return {std::move(scheme), std::move(st.times_)};
}

}  // namespace kcycle::detail
