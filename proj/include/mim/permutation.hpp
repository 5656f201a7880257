#pragma once

#include <string>
#include <vector>

#include "mim/types.hpp"

namespace mim {

// A permutation together with its inverse, both 1-based, so value->position
// and position->value lookups are O(1).
struct PermutationModel {
  Vertex n = 0;
  std::vector<Vertex> pi;       // pi[a] = value at position a, slots 1..n
  std::vector<Vertex> pi_inv;   // pi_inv[v] = position of value v
};

inline PermutationModel make_permutation(const std::vector<Vertex>& values) {
  if (values.empty()) throw NotAPermutation("empty value sequence");
  const auto n = static_cast<Vertex>(values.size());
  PermutationModel model;
  model.n = n;
  model.pi.assign(static_cast<std::size_t>(n) + 1, 0);
  model.pi_inv.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex pos = 1; pos <= n; ++pos) {
    const Vertex v = values[static_cast<std::size_t>(pos) - 1];
    if (v < 1 || v > n)
      throw NotAPermutation("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (model.pi_inv[v] != 0)
      throw NotAPermutation("duplicate value " + std::to_string(v));
    model.pi[pos] = v;
    model.pi_inv[v] = pos;
  }
  return model;
}

namespace detail {
inline void check_vertex(const PermutationModel& m, Vertex v) {
  if (v < 1 || v > m.n)
    throw OutOfRange("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m.n));
}
}  // namespace detail

// Two vertices are adjacent exactly when their value order and position order
// disagree.
inline bool has_edge(const PermutationModel& m, Vertex u, Vertex v) {
  detail::check_vertex(m, u);
  detail::check_vertex(m, v);
  if (u == v) return false;
  return (u < v) == (m.pi_inv[u] > m.pi_inv[v]);
}

// An ordered pair (a, b) is a candidate match when a < b by value and a comes
// after b by position, i.e. the pair is an edge with a as the smaller value.
inline bool is_match(const PermutationModel& m, Vertex a, Vertex b) {
  detail::check_vertex(m, a);
  detail::check_vertex(m, b);
  return a < b && m.pi_inv[a] > m.pi_inv[b];
}

// Strict order on matches under which a chain of matches is exactly an
// induced matching: every vertex of e is below every vertex of e2 in both the
// value order and the position order.
inline bool match_less(const PermutationModel& m, const Match& e, const Match& e2) {
  return e.right < e2.left && m.pi_inv[e.left] < m.pi_inv[e2.right];
}

// Materializes all edges; quadratic, intended for validation and small runs.
inline EdgeList edges_from_model(const PermutationModel& m) {
  EdgeList out;
  out.n = m.n;
  for (Vertex u = 1; u <= m.n; ++u)
    for (Vertex v = u + 1; v <= m.n; ++v)
      if (m.pi_inv[u] > m.pi_inv[v]) out.edges.push_back({u, v});
  return out;
}

}  // namespace mim
