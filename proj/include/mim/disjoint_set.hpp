#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "mim/types.hpp"

namespace mim {

// Disjoint sets over 1..capacity whose find() reports the minimum element of
// the queried set rather than an arbitrary root. Path compression plus union
// by rank gives near-constant amortized cost; the minimum is carried on the
// winning root at every union, so the reported name never depends on which
// root won.
class MinNameDisjointSet {
 public:
  explicit MinNameDisjointSet(Vertex capacity) {
    if (capacity < 0) throw OutOfRange("capacity must be non-negative");
    capacity_ = capacity;
    parent_.resize(static_cast<std::size_t>(capacity) + 1);
    min_.resize(static_cast<std::size_t>(capacity) + 1);
    rank_.assign(static_cast<std::size_t>(capacity) + 1, 0);
    std::iota(parent_.begin(), parent_.end(), 0);
    std::iota(min_.begin(), min_.end(), 0);
  }

  Vertex capacity() const { return capacity_; }

  // Minimum element of the set containing x.
  Vertex find(Vertex x) {
    check(x);
    return min_[root(x)];
  }

  void unite(Vertex x, Vertex y) {
    check(x);
    check(y);
    Vertex rx = root(x);
    Vertex ry = root(y);
    if (rx == ry)
      throw AlreadySameSet(std::to_string(x) + " and " + std::to_string(y) + " are already joined");
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    if (min_[ry] < min_[rx]) min_[rx] = min_[ry];
  }

  bool same_set(Vertex x, Vertex y) {
    check(x);
    check(y);
    return root(x) == root(y);
  }

 private:
  void check(Vertex x) const {
    if (x < 1 || x > capacity_)
      throw OutOfRange("element " + std::to_string(x) + " outside 1.." + std::to_string(capacity_));
  }

  Vertex root(Vertex x) {
    Vertex r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      Vertex next = parent_[x];
      parent_[x] = r;
      x = next;
    }
    return r;
  }

  Vertex capacity_ = 0;
  std::vector<Vertex> parent_;
  std::vector<Vertex> min_;
  std::vector<unsigned char> rank_;
};

}  // namespace mim
