#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mim/types.hpp"

namespace mim {

// A trapezoid spans two horizontal lines: interval [x1, x2] on the upper line
// and [y1, y2] on the lower one. Degenerate intervals (points) are allowed on
// raw input; normalization spreads ties apart.
struct Trapezoid {
  Vertex id = 0;
  std::int64_t x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

struct TrapezoidModel {
  Vertex n = 0;
  bool normalized = false;
  std::vector<Trapezoid> traps;  // indexed by id, slot 0 unused
};

namespace detail {

inline void check_trap_id(const TrapezoidModel& t, Vertex id) {
  if (id < 1 || id > t.n)
    throw OutOfRange("trapezoid id " + std::to_string(id) + " outside 1.." + std::to_string(t.n));
}

inline void require_normalized(const TrapezoidModel& t) {
  if (!t.normalized) throw NotNormalized("operation requires a normalized model");
}

}  // namespace detail

// Replaces the corner coordinates on each axis by their ranks 1..2n. Ties are
// broken by (coordinate value, left corner before right corner, id), which
// keeps every strict order and every closed-interval intersection intact:
// touching intervals become properly overlapping ones.
inline TrapezoidModel normalize_trapezoids(const std::vector<Trapezoid>& raw) {
  if (raw.empty()) throw InvalidTrapezoid("no trapezoids given");
  TrapezoidModel model;
  model.n = static_cast<Vertex>(raw.size());
  model.traps.assign(static_cast<std::size_t>(model.n) + 1, Trapezoid{});
  for (Vertex id = 1; id <= model.n; ++id) {
    Trapezoid t = raw[static_cast<std::size_t>(id) - 1];
    if (t.x1 > t.x2 || t.y1 > t.y2)
      throw InvalidTrapezoid("trapezoid " + std::to_string(id) + " has a reversed interval");
    t.id = id;
    model.traps[id] = t;
  }

  struct Corner {
    std::int64_t value;
    int role;  // 0 = left end (x1/y1), 1 = right end (x2/y2)
    Vertex id;
  };
  auto spread = [&](auto get_left, auto get_right, auto set_left, auto set_right) {
    std::vector<Corner> corners;
    corners.reserve(2 * static_cast<std::size_t>(model.n));
    for (Vertex id = 1; id <= model.n; ++id) {
      corners.push_back({get_left(model.traps[id]), 0, id});
      corners.push_back({get_right(model.traps[id]), 1, id});
    }
    std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.role != b.role) return a.role < b.role;
      return a.id < b.id;
    });
    for (std::size_t rank = 0; rank < corners.size(); ++rank) {
      const Corner& c = corners[rank];
      if (c.role == 0)
        set_left(model.traps[c.id], static_cast<std::int64_t>(rank) + 1);
      else
        set_right(model.traps[c.id], static_cast<std::int64_t>(rank) + 1);
    }
  };
  spread([](const Trapezoid& t) { return t.x1; }, [](const Trapezoid& t) { return t.x2; },
         [](Trapezoid& t, std::int64_t v) { t.x1 = v; }, [](Trapezoid& t, std::int64_t v) { t.x2 = v; });
  spread([](const Trapezoid& t) { return t.y1; }, [](const Trapezoid& t) { return t.y2; },
         [](Trapezoid& t, std::int64_t v) { t.y1 = v; }, [](Trapezoid& t, std::int64_t v) { t.y2 = v; });
  model.normalized = true;
  return model;
}

// Intersection test on a normalized model. Two trapezoids are disjoint only
// when one ends strictly before the other begins on both axes.
inline bool has_edge(const TrapezoidModel& t, Vertex a, Vertex b) {
  detail::require_normalized(t);
  detail::check_trap_id(t, a);
  detail::check_trap_id(t, b);
  if (a == b) return false;
  const Trapezoid& A = t.traps[a];
  const Trapezoid& B = t.traps[b];
  const bool a_before_b = A.x2 < B.x1 && A.y2 < B.y1;
  const bool b_before_a = B.x2 < A.x1 && B.y2 < A.y1;
  return !a_before_b && !b_before_a;
}

// Ordered pair (a, b) is a candidate match when they intersect and a's
// x-interval ends first.
inline bool is_match(const TrapezoidModel& t, Vertex a, Vertex b) {
  detail::require_normalized(t);
  detail::check_trap_id(t, a);
  detail::check_trap_id(t, b);
  const Trapezoid& A = t.traps[a];
  const Trapezoid& B = t.traps[b];
  return A.x2 < B.x2 && (A.x2 >= B.x1 || A.y2 >= B.y1);
}

// Strict order on matches: the bounding rectangle of e lies strictly to the
// bottom-left of the bounding rectangle of e2 on both axes. Chains under this
// order are exactly induced matchings.
inline bool match_less(const TrapezoidModel& t, const Match& e, const Match& e2) {
  detail::require_normalized(t);
  const Trapezoid& A = t.traps[e.left];
  const Trapezoid& B = t.traps[e.right];
  const Trapezoid& C = t.traps[e2.left];
  const Trapezoid& D = t.traps[e2.right];
  return std::max(A.x2, B.x2) < std::min(C.x1, D.x1) &&
         std::max(A.y2, B.y2) < std::min(C.y1, D.y1);
}

// Materializes all edges; quadratic, intended for validation and small runs.
inline EdgeList edges_from_model(const TrapezoidModel& t) {
  detail::require_normalized(t);
  EdgeList out;
  out.n = t.n;
  for (Vertex a = 1; a <= t.n; ++a)
    for (Vertex b = a + 1; b <= t.n; ++b)
      if (has_edge(t, a, b)) out.edges.push_back({a, b});
  return out;
}

// Per-coordinate lookup tables for one sweep over a normalized model: which
// trapezoid owns each of the 2n coordinates on each axis, and whether that
// coordinate is the right end of its interval.
struct CornerIndex {
  std::vector<Vertex> x_owner, y_owner;            // slots 1..2n
  std::vector<std::uint8_t> x_is_right, y_is_right;
};

inline CornerIndex build_corner_index(const TrapezoidModel& t) {
  detail::require_normalized(t);
  const std::size_t size = 2 * static_cast<std::size_t>(t.n) + 1;
  CornerIndex idx;
  idx.x_owner.assign(size, 0);
  idx.y_owner.assign(size, 0);
  idx.x_is_right.assign(size, 0);
  idx.y_is_right.assign(size, 0);
  auto place = [&](std::vector<Vertex>& owner, std::vector<std::uint8_t>& is_right,
                   std::int64_t coord, Vertex id, bool right) {
    if (coord < 1 || coord >= static_cast<std::int64_t>(size) || owner[coord] != 0)
      throw NotNormalized("coordinates are not a permutation of 1..2n");
    owner[coord] = id;
    is_right[coord] = right ? 1 : 0;
  };
  for (Vertex id = 1; id <= t.n; ++id) {
    const Trapezoid& tr = t.traps[id];
    place(idx.x_owner, idx.x_is_right, tr.x1, id, false);
    place(idx.x_owner, idx.x_is_right, tr.x2, id, true);
    place(idx.y_owner, idx.y_is_right, tr.y1, id, false);
    place(idx.y_owner, idx.y_is_right, tr.y2, id, true);
  }
  return idx;
}

}  // namespace mim
