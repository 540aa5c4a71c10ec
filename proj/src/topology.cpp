#include "kcycle/topology.hpp"

#include <algorithm>
#include <numeric>

namespace kcycle {

std::string to_string(Vertex v) {
  if (v.is_center()) return "c";
  return std::to_string(v.cycle) + ":" + std::to_string(v.pos);
}

KCycleGraph::KCycleGraph(std::vector<int> lengths) {
  if (lengths.empty()) throw EmptyInstanceError();
  for (int l : lengths) {
    if (l < 2) throw CycleTooShortError(l);
  }
  const int k = static_cast<int>(lengths.size());
  perm_.resize(lengths.size());
  std::iota(perm_.begin(), perm_.end(), 1);
  // Stable sort keeps the input order among equal lengths.
  std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
    return lengths[a - 1] > lengths[b - 1];
  });
  lengths_.reserve(lengths.size());
  for (int src : perm_) lengths_.push_back(lengths[src - 1]);

  offset_.resize(k + 1);
  offset_[0] = 0;
  for (int i = 0; i < k; ++i) offset_[i + 1] = offset_[i] + lengths_[i];
  n_ = 1 + offset_[k];
}

bool KCycleGraph::valid(Vertex v) const {
  if (v.is_center()) return v.pos == 0;
  return v.cycle >= 1 && v.cycle <= k() && v.pos >= 1 &&
         v.pos <= length(v.cycle);
}

void KCycleGraph::require_valid(Vertex v) const {
  if (!valid(v)) {
    throw InvalidVertexError("vertex " + to_string(v) +
                             " is not part of this instance");
  }
}

std::int64_t KCycleGraph::index_of(Vertex v) const {
  require_valid(v);
  if (v.is_center()) return 0;
  return 1 + offset_[v.cycle - 1] + (v.pos - 1);
}

Vertex KCycleGraph::vertex_at(std::int64_t index) const {
  if (index == 0) return Vertex::center();
  if (index < 0 || index >= n_) {
    throw InvalidVertexError("vertex index " + std::to_string(index) +
                             " out of range");
  }
  const auto it = std::upper_bound(offset_.begin(), offset_.end(), index - 1);
  const int cycle = static_cast<int>(it - offset_.begin());
  const int pos = static_cast<int>(index - 1 - offset_[cycle - 1] + 1);
  return Vertex{cycle, pos};
}

std::vector<Vertex> KCycleGraph::neighbors(Vertex v) const {
  require_valid(v);
  std::vector<Vertex> out;
  if (v.is_center()) {
    out.reserve(2 * static_cast<std::size_t>(k()));
    for (int i = 1; i <= k(); ++i) {
      out.push_back(Vertex{i, 1});
      out.push_back(Vertex{i, length(i)});
    }
    return out;
  }
  out.reserve(2);
  if (v.pos == 1) {
    out.push_back(Vertex::center());
  } else {
    out.push_back(Vertex{v.cycle, v.pos - 1});
  }
  if (v.pos == length(v.cycle)) {
    out.push_back(Vertex::center());
  } else {
    out.push_back(Vertex{v.cycle, v.pos + 1});
  }
  return out;
}

bool KCycleGraph::adjacent(Vertex a, Vertex b) const {
  require_valid(a);
  require_valid(b);
  if (a == b) return false;
  if (a.is_center() || b.is_center()) {
    const Vertex& other = a.is_center() ? b : a;
    return other.pos == 1 || other.pos == length(other.cycle);
  }
  if (a.cycle != b.cycle) return false;
  return a.pos + 1 == b.pos || b.pos + 1 == a.pos;
}

int KCycleGraph::dist_to_center(Vertex v) const {
  require_valid(v);
  if (v.is_center()) return 0;
  return std::min(v.pos, length(v.cycle) + 1 - v.pos);
}

int originator_distance(const KCycleGraph& g, Originator o) {
  return g.dist_to_center(o);
}

}  // namespace kcycle
