#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mim/types.hpp"

namespace mim {

inline constexpr std::int32_t kDefaultOracleCap = 20;

namespace detail {

// Fixed 128-bit set, enough for the largest guarded oracle input
// (n <= 12 gives at most 66 edges).
struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;

  void set(int i) { (i < 64 ? w0 : w1) |= 1ULL << (i & 63); }
  bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1ULL; }
  void clear(int i) { (i < 64 ? w0 : w1) &= ~(1ULL << (i & 63)); }
  bool any() const { return (w0 | w1) != 0; }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  int first() const { return w0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1); }
  Bits128 and_not(const Bits128& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
  Bits128 operator&(const Bits128& o) const { return {w0 & o.w0, w1 & o.w1}; }
};

inline bool pair_in_sorted(const std::vector<std::pair<Vertex, Vertex>>& edges, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

// Branch and bound for maximum independent set on a conflict graph given as
// bit masks. Branches on the most-conflicted remaining candidate; candidates
// without conflicts are all taken at once.
struct MisSearch {
  const std::vector<Bits128>& conflict;
  int best = 0;
  std::vector<int> best_set, current;

  void run(Bits128 cand) {
    if (current.size() + static_cast<std::size_t>(cand.count()) <= static_cast<std::size_t>(best))
      return;
    if (!cand.any()) {
      best = static_cast<int>(current.size());
      best_set = current;
      return;
    }
    int pick = -1, pick_deg = -1;
    for (Bits128 scan = cand; scan.any();) {
      const int v = scan.first();
      scan.clear(v);
      const int deg = (conflict[v] & cand).count();
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    if (pick_deg == 0) {
      // No conflicts left: everything remaining is independent.
      std::size_t added = 0;
      for (Bits128 scan = cand; scan.any();) {
        const int v = scan.first();
        scan.clear(v);
        current.push_back(v);
        ++added;
      }
      if (current.size() > static_cast<std::size_t>(best)) {
        best = static_cast<int>(current.size());
        best_set = current;
      }
      current.resize(current.size() - added);
      return;
    }
    Bits128 with = cand.and_not(conflict[pick]);
    with.clear(pick);
    current.push_back(pick);
    run(with);
    current.pop_back();
    Bits128 without = cand;
    without.clear(pick);
    run(without);
  }
};

}  // namespace detail

struct OracleResult {
  std::int32_t size = 0;
  InducedMatching witness;
};

// Exact maximum induced matching by exhaustive search over the edge conflict
// graph: two edges conflict when they share a vertex or some endpoint pair is
// itself an edge. Guarded by a cap because the search is exponential; inputs
// with n <= 12 are always allowed since they have at most 66 edges.
inline OracleResult oracle_mim(const EdgeList& g, std::int32_t cap = kDefaultOracleCap) {
  const auto m = static_cast<std::int64_t>(g.edges.size());
  if (m > cap && g.n > 12)
    throw TooLarge("oracle refused: " + std::to_string(m) + " edges exceeds cap " +
                   std::to_string(cap) + " and n = " + std::to_string(g.n) + " > 12");
  if (m == 0) return {};

  std::vector<std::pair<Vertex, Vertex>> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<detail::Bits128> conflict(m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i + 1; j < m; ++j) {
      const auto [a, b] = g.edges[i];
      const auto [c, d] = g.edges[j];
      const bool clash = a == c || a == d || b == c || b == d ||
                         detail::pair_in_sorted(sorted, a, c) || detail::pair_in_sorted(sorted, a, d) ||
                         detail::pair_in_sorted(sorted, b, c) || detail::pair_in_sorted(sorted, b, d);
      if (clash) {
        conflict[i].set(static_cast<int>(j));
        conflict[j].set(static_cast<int>(i));
      }
    }
  }
  detail::MisSearch search{conflict, 0, {}, {}};
  detail::Bits128 all;
  for (std::int64_t i = 0; i < m; ++i) all.set(static_cast<int>(i));
  search.run(all);

  OracleResult result;
  result.size = search.best;
  for (const int i : search.best_set)
    result.witness.edges.push_back({g.edges[i].first, g.edges[i].second});
  std::sort(result.witness.edges.begin(), result.witness.edges.end(),
            [](const Match& a, const Match& b) { return a.left != b.left ? a.left < b.left : a.right < b.right; });
  return result;
}

struct ValidationResult {
  bool ok = true;
  std::string reason;
};

// Checks that a candidate is an induced matching of the given graph: every
// pair is an edge, no vertex repeats, and no graph edge joins two matched
// vertices from different pairs. Runs in O((m + k) log m).
inline ValidationResult validate_induced_matching(const EdgeList& g, const InducedMatching& cand) {
  std::vector<std::pair<Vertex, Vertex>> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::pair<Vertex, int>> owner;  // matched vertex -> candidate index
  for (std::size_t i = 0; i < cand.edges.size(); ++i) {
    const Match& e = cand.edges[i];
    if (!detail::pair_in_sorted(sorted, e.left, e.right))
      throw UnknownEdge("pair (" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                        ") is not an edge");
    owner.push_back({e.left, static_cast<int>(i)});
    owner.push_back({e.right, static_cast<int>(i)});
  }
  std::sort(owner.begin(), owner.end());
  for (std::size_t i = 1; i < owner.size(); ++i)
    if (owner[i].first == owner[i - 1].first)
      return {false, "vertex " + std::to_string(owner[i].first) + " appears in two pairs"};

  auto owner_of = [&](Vertex v) -> int {
    auto it = std::lower_bound(owner.begin(), owner.end(), std::make_pair(v, 0));
    if (it != owner.end() && it->first == v) return it->second;
    return -1;
  };
  for (const auto& [u, v] : g.edges) {
    const int iu = owner_of(u);
    const int iv = owner_of(v);
    if (iu >= 0 && iv >= 0 && iu != iv)
      return {false, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") joins two different pairs"};
  }
  return {};
}

// Same checks against a geometric model instead of an explicit edge list,
// using the model's O(1) adjacency test. A cross edge joins two matched
// vertices, so scanning the O(k^2) matched-vertex pairs is enough and the
// full edge list is never materialized.
template <typename Model>
ValidationResult validate_matching_in_model(const Model& model, const InducedMatching& cand) {
  std::vector<std::pair<Vertex, int>> owner;
  for (std::size_t i = 0; i < cand.edges.size(); ++i) {
    const Match& e = cand.edges[i];
    if (e.left == e.right || !has_edge(model, e.left, e.right))
      throw UnknownEdge("pair (" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                        ") is not an edge");
    owner.push_back({e.left, static_cast<int>(i)});
    owner.push_back({e.right, static_cast<int>(i)});
  }
  std::sort(owner.begin(), owner.end());
  for (std::size_t i = 1; i < owner.size(); ++i)
    if (owner[i].first == owner[i - 1].first)
      return {false, "vertex " + std::to_string(owner[i].first) + " appears in two pairs"};
  for (std::size_t i = 0; i < owner.size(); ++i)
    for (std::size_t j = i + 1; j < owner.size(); ++j)
      if (owner[i].second != owner[j].second && has_edge(model, owner[i].first, owner[j].first))
        return {false, "edge (" + std::to_string(owner[i].first) + ", " +
                           std::to_string(owner[j].first) + ") joins two different pairs"};
  return {};
}

}  // namespace mim
