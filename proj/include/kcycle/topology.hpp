#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "kcycle/error.hpp"

namespace kcycle {

// A vertex of a k-cycle graph. cycle == 0 denotes the central vertex;
// otherwise (cycle, pos) with 1 <= cycle <= k and 1 <= pos <= l_cycle.
// Positions run along the cycle from the arm-A neighbor of the center
// (pos 1) to the arm-B neighbor (pos l_cycle).
struct Vertex {
  std::int32_t cycle = 0;
  std::int32_t pos = 0;

  static constexpr Vertex center() { return {}; }
  constexpr bool is_center() const { return cycle == 0; }

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

// "c" for the center, "i:p" for cycle vertices.
std::string to_string(Vertex v);

// The broadcast originator is just a designated vertex.
using Originator = Vertex;

// k cycles of lengths l_1 >= l_2 >= ... >= l_k >= 2 sharing one central
// vertex. Lengths are sorted on construction; cycle indices used anywhere
// else in the library refer to the sorted order.
class KCycleGraph {
 public:
  explicit KCycleGraph(std::vector<int> lengths);

  int k() const { return static_cast<int>(lengths_.size()); }
  std::int64_t n() const { return n_; }
  const std::vector<int>& lengths() const { return lengths_; }
  int length(int cycle) const { return lengths_[cycle - 1]; }  // 1-based

  // sort_permutation()[i-1] is the 1-based position the i-th sorted cycle
  // had in the constructor input (stable for equal lengths).
  const std::vector<int>& sort_permutation() const { return perm_; }

  bool valid(Vertex v) const;
  void require_valid(Vertex v) const;  // throws InvalidVertexError

  // Dense index: center -> 0, (i, p) -> 1-based running offset. Useful for
  // flat per-vertex arrays.
  std::int64_t index_of(Vertex v) const;
  Vertex vertex_at(std::int64_t index) const;

  std::vector<Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;
  int dist_to_center(Vertex v) const;

 private:
  std::vector<int> lengths_;
  std::vector<int> perm_;
  std::vector<std::int64_t> offset_;  // offset_[i] = index_of((i+1, 1)) - 1
  std::int64_t n_ = 0;
};

// Shortest-path distance from an originator to the center (0 for the
// center itself).
int originator_distance(const KCycleGraph& g, Originator o);

}  // namespace kcycle
