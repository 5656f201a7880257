#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mim/match_lists.hpp"
#include "mim/permutation.hpp"
#include "mim/types.hpp"

namespace mim {

namespace detail {

// One pass of the match-collection walk. Values still alive in the linked
// list are exactly those at positions <= the current one, kept in decreasing
// value order, so every node passed before reaching pi[a] forms a match with
// pi[a] as the smaller value. Calls emit(right, left) for each such pair and
// returns the number of walk steps taken.
template <class Emit>
std::int64_t walk_all_matches(const PermutationModel& m, Emit&& emit) {
  const Vertex n = m.n;
  std::vector<Vertex> next(static_cast<std::size_t>(n) + 2);
  for (Vertex i = 0; i <= n + 1; ++i) next[i] = i - 1;
  std::int64_t ops = 0;
  for (Vertex a = n; a >= 1; --a) {
    const Vertex v = m.pi[a];
    Vertex prev = n + 1;
    Vertex p = next[prev];
    while (p > v) {
      emit(p, v);
      prev = p;
      p = next[p];
      ++ops;
    }
    next[prev] = next[p];  // unlink v itself
    ++ops;
  }
  return ops;
}

}  // namespace detail

// Collects every candidate match grouped by right end. Two identical walks:
// the first one sizes the groups so the flat layout is allocated exactly, the
// second one fills it. Within a group the left ends come out in decreasing
// position order, which the sweep engines rely on.
inline MatchLists build_all_matches(const PermutationModel& m) {
  const Vertex n = m.n;
  MatchLists out;
  out.n = n;
  out.head.assign(static_cast<std::size_t>(n) + 2, 0);
  std::int64_t ops = detail::walk_all_matches(m, [&](Vertex right, Vertex) { ++out.head[right + 1]; });
  for (Vertex r = 1; r <= n; ++r) out.head[r + 1] += out.head[r];
  out.total = out.head[n + 1];
  if (out.total >= std::numeric_limits<MatchId>::max())
    throw TooLarge("match count exceeds id space");
  out.left.resize(static_cast<std::size_t>(out.total));
  std::vector<std::int64_t> cursor(out.head.begin(), out.head.end());
  ops += detail::walk_all_matches(m, [&](Vertex right, Vertex left) { out.left[cursor[right]++] = left; });
  out.build_ops = ops;
  return out;
}

namespace detail {

struct BestTracker {
  MatchId id = kNoMatch;
  std::int32_t len = 0;
  Vertex right = 0, left = 0;

  void offer(MatchId e, std::int32_t l, Vertex r, Vertex lft) {
    if (id == kNoMatch || l > len ||
        (l == len && (r < right || (r == right && lft < left)))) {
      id = e;
      len = l;
      right = r;
      left = lft;
    }
  }
};

}  // namespace detail

// Sweep from the largest value down; one shared pointer z per sweep position
// walks the table once, so the whole run costs O(n) per position plus O(1)
// per match. Writes for a match are deferred until the sweep reaches its left
// end, which keeps smaller matches invisible to the ones they must not chain
// with.
inline ChainDP chain_dp_quadratic(const PermutationModel& m, const MatchLists& lists) {
  const Vertex n = m.n;
  ChainDP dp;
  dp.len.assign(static_cast<std::size_t>(lists.total), 0);
  dp.next.assign(static_cast<std::size_t>(lists.total), kNoMatch);
  std::vector<SweepCell> cells(static_cast<std::size_t>(n) + 1);
  PendingStore pending(n);
  WorkCounters& w = dp.work;
  detail::BestTracker best;

  for (Vertex x = n; x >= 1; --x) {
    Vertex z = n;
    std::int32_t max_len = 0;
    MatchId trace = kNoMatch;
    const auto group = lists.partners(x);
    for (std::size_t k = 0; k < group.size(); ++k) {
      const Vertex y = group[k];
      const Vertex boundary = m.pi_inv[y];
      while (z > boundary) {
        ++w.cell_visits;
        if (cells[z].len > max_len) {
          max_len = cells[z].len;
          trace = cells[z].trace;
        }
        --z;
      }
      const MatchId e = lists.id_at(x, static_cast<std::int64_t>(k));
      dp.len[e] = max_len + 1;
      dp.next[e] = trace;
      best.offer(e, max_len + 1, x, y);
      pending.push(y, {max_len + 1, e, m.pi_inv[x]});
      ++w.list_ops;
    }
    pending.drain(x, [&](const PendingStore::Entry& en) {
      ++w.list_ops;
      if (cells[en.row].len < en.len) {
        cells[en.row].len = en.len;
        cells[en.row].trace = en.id;
      }
    });
  }
  dp.best = best.id;
  dp.best_len = best.len;
  return dp;
}

// Same sweep, but the pointer skips rows that have already been swept by
// jumping over them through the disjoint-set runs, and a row's value is
// pushed down to the next live row when the row is retired. Total work is
// O(1) per match plus O(1) amortized per position.
inline ChainDP chain_dp_linear(const PermutationModel& m, const MatchLists& lists) {
  const Vertex n = m.n;
  ChainDP dp;
  dp.len.assign(static_cast<std::size_t>(lists.total), 0);
  dp.next.assign(static_cast<std::size_t>(lists.total), kNoMatch);
  std::vector<SweepCell> cells(static_cast<std::size_t>(n) + 1);
  MinNameDisjointSet runs(n);
  PendingStore pending(n);
  WorkCounters& w = dp.work;
  detail::BestTracker best;

  for (Vertex x = n; x >= 1; --x) {
    Vertex z = next_unswept_below(cells, runs, n + 1);
    ++w.list_ops;
    std::int32_t max_len = 0;
    MatchId trace = kNoMatch;
    const auto group = lists.partners(x);
    for (std::size_t k = 0; k < group.size(); ++k) {
      const Vertex y = group[k];
      const Vertex boundary = m.pi_inv[y];
      while (z >= boundary) {
        ++w.cell_visits;
        if (cells[z].len > max_len) {
          max_len = cells[z].len;
          trace = cells[z].trace;
        }
        z = next_unswept_below(cells, runs, z);
      }
      const MatchId e = lists.id_at(x, static_cast<std::int64_t>(k));
      dp.len[e] = max_len + 1;
      dp.next[e] = trace;
      best.offer(e, max_len + 1, x, y);
      pending.push(y, {max_len + 1, e, m.pi_inv[x]});
      ++w.list_ops;
    }
    pending.drain(x, [&](const PendingStore::Entry& en) {
      ++w.list_ops;
      const Vertex b = next_unswept_below(cells, runs, en.row);
      if (b > 0 && cells[b].len < en.len) {
        cells[b].len = en.len;
        cells[b].trace = en.id;
      }
    });
    // Retire the row of x: join it to adjacent swept runs and push its value
    // down to the next live row so later queries still see it.
    const Vertex row = m.pi_inv[x];
    cells[row].swept = 1;
    if (row > 1 && cells[row - 1].swept) {
      runs.unite(row - 1, row);
      ++w.list_ops;
    }
    if (row < n && cells[row + 1].swept) {
      runs.unite(row, row + 1);
      ++w.list_ops;
    }
    const Vertex below = next_unswept_below(cells, runs, row);
    ++w.list_ops;
    if (below > 0 && cells[below].len < cells[row].len) {
      cells[below].len = cells[row].len;
      cells[below].trace = cells[row].trace;
    }
  }
  dp.best = best.id;
  dp.best_len = best.len;
  return dp;
}

struct PipelineRun {
  InducedMatching matching;
  std::int64_t match_count = 0;
  std::int64_t build_ops = 0;
  WorkCounters work;
};

inline PipelineRun run_permutation_pipeline(const PermutationModel& m, Engine engine = Engine::linear) {
  PipelineRun run;
  const MatchLists lists = build_all_matches(m);
  run.match_count = lists.total;
  run.build_ops = lists.build_ops;
  const ChainDP dp =
      engine == Engine::quadratic ? chain_dp_quadratic(m, lists) : chain_dp_linear(m, lists);
  run.work = dp.work;
  run.matching = build_mim(dp, lists);
  return run;
}

inline InducedMatching mim_permutation(const PermutationModel& m, Engine engine = Engine::linear) {
  return run_permutation_pipeline(m, engine).matching;
}

}  // namespace mim
