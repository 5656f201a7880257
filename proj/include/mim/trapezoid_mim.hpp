#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "mim/match_lists.hpp"
#include "mim/permutation_mim.hpp"
#include "mim/trapezoid.hpp"
#include "mim/types.hpp"

namespace mim {

// Oriented intersecting pairs before deduplication: partners[a] holds, for
// every candidate match with a as the left end, the right-end partner. A pair
// is emitted once per corner interaction, so it can appear up to four times.
struct RevMatchLists {
  std::vector<std::vector<Vertex>> partners;
  std::int64_t total = 0;
  std::int64_t build_ops = 0;
};

namespace detail {

// Sweeps the lower-line corners from high to low while peeling a linked list
// of upper-line corners. Every upper corner passed before reaching the
// diagonal partner of the current lower corner belongs to a trapezoid that
// intersects the current one; orientation is fixed by comparing x-interval
// right ends.
inline RevMatchLists build_rev_matches(const TrapezoidModel& t, const CornerIndex& idx) {
  const Vertex n = t.n;
  const Vertex last = 2 * n;
  RevMatchLists rm;
  rm.partners.assign(static_cast<std::size_t>(n) + 1, {});
  std::vector<Vertex> next(static_cast<std::size_t>(last) + 2);
  for (Vertex i = 0; i <= last + 1; ++i) next[i] = i - 1;
  for (Vertex y = last; y >= 1; --y) {
    const Vertex r = idx.y_owner[y];
    const Trapezoid& R = t.traps[r];
    // The diagonal pairs the top of one interval with the bottom of the other.
    const Vertex partner = static_cast<Vertex>(idx.y_is_right[y] ? R.x1 : R.x2);
    Vertex prev = last + 1;
    Vertex p = next[prev];
    while (true) {
      ++rm.build_ops;
      if (p == partner) break;
      if (p == 0) throw ModelCorrupt("diagonal partner missing from corner list");
      const Vertex a = idx.x_owner[p];
      if (a != r) {
        const Trapezoid& A = t.traps[a];
        if (A.x2 < R.x2)
          rm.partners[a].push_back(r);
        else
          rm.partners[r].push_back(a);
        ++rm.total;
      }
      prev = p;
      p = next[p];
    }
    next[prev] = next[p];  // retire the partner corner
  }
  return rm;
}

}  // namespace detail

// Deduplicates the oriented pairs into per-right-end groups. Walking the
// upper ends of the lower-line intervals from high to low and stamping the
// last receiver keeps each pair once and orders every group by decreasing
// left-end y2, the order the sweep engine consumes.
inline MatchLists build_all_matches_trap(const TrapezoidModel& t, const CornerIndex& idx) {
  const Vertex n = t.n;
  RevMatchLists rm = detail::build_rev_matches(t, idx);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> stamp(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t ops = rm.build_ops;
  for (Vertex y = 2 * n; y >= 1; --y) {
    if (!idx.y_is_right[y]) continue;
    const Vertex a = idx.y_owner[y];
    for (const Vertex b : rm.partners[a]) {
      ++ops;
      if (stamp[b] != y) {
        stamp[b] = y;
        groups[b].push_back(a);
      }
    }
  }
  MatchLists out;
  out.n = n;
  out.head.assign(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex r = 1; r <= n; ++r) out.head[r + 1] = out.head[r] + static_cast<std::int64_t>(groups[r].size());
  out.total = out.head[n + 1];
  if (out.total >= std::numeric_limits<MatchId>::max())
    throw TooLarge("match count exceeds id space");
  out.left.resize(static_cast<std::size_t>(out.total));
  for (Vertex r = 1; r <= n; ++r) {
    std::copy(groups[r].begin(), groups[r].end(), out.left.begin() + out.head[r]);
    ops += static_cast<std::int64_t>(groups[r].size());
  }
  out.build_ops = ops;
  return out;
}

// Sweep over the upper-line coordinates from high to low. A right end closes
// its trapezoid: chain lengths are computed for every match it completes,
// then its lower-line row is retired. A left end is where deferred writes for
// matches straddling it become safe to apply. Rows for lower-line left ends
// are never written, so they start swept.
inline ChainDP chain_dp_trapezoid(const TrapezoidModel& t, const CornerIndex& idx, const MatchLists& lists) {
  const Vertex n = t.n;
  const Vertex last = 2 * n;
  ChainDP dp;
  dp.len.assign(static_cast<std::size_t>(lists.total), 0);
  dp.next.assign(static_cast<std::size_t>(lists.total), kNoMatch);
  std::vector<SweepCell> cells(static_cast<std::size_t>(last) + 1);
  MinNameDisjointSet runs(last);
  PendingStore pending(last);
  WorkCounters& w = dp.work;
  detail::BestTracker best;

  std::vector<Vertex> x1(static_cast<std::size_t>(n) + 1), y1(static_cast<std::size_t>(n) + 1),
      y2(static_cast<std::size_t>(n) + 1);
  for (Vertex id = 1; id <= n; ++id) {
    x1[id] = static_cast<Vertex>(t.traps[id].x1);
    y1[id] = static_cast<Vertex>(t.traps[id].y1);
    y2[id] = static_cast<Vertex>(t.traps[id].y2);
  }

  for (Vertex c = 1; c <= last; ++c) {
    if (idx.y_is_right[c]) continue;
    cells[c].swept = 1;
    if (c > 1 && cells[c - 1].swept) runs.unite(c - 1, c);
    ++w.list_ops;
  }

  for (Vertex x = last; x >= 1; --x) {
    const Vertex a = idx.x_owner[x];
    if (idx.x_is_right[x]) {
      Vertex z = next_unswept_below(cells, runs, last + 1);
      ++w.list_ops;
      std::int32_t max_len = 0;
      MatchId trace = kNoMatch;
      const auto group = lists.partners(a);
      for (std::size_t k = 0; k < group.size(); ++k) {
        const Vertex b = group[k];
        const Vertex boundary = std::max(y2[a], y2[b]);
        while (z >= boundary) {
          ++w.cell_visits;
          if (cells[z].len > max_len) {
            max_len = cells[z].len;
            trace = cells[z].trace;
          }
          z = next_unswept_below(cells, runs, z);
        }
        const MatchId e = lists.id_at(a, static_cast<std::int64_t>(k));
        dp.len[e] = max_len + 1;
        dp.next[e] = trace;
        best.offer(e, max_len + 1, a, b);
        pending.push(std::min(x1[a], x1[b]), {max_len + 1, e, std::min(y1[a], y1[b])});
        ++w.list_ops;
      }
      const Vertex row = y2[a];
      cells[row].swept = 1;
      if (row > 1 && cells[row - 1].swept) {
        runs.unite(row - 1, row);
        ++w.list_ops;
      }
      if (row < last && cells[row + 1].swept) {
        runs.unite(row, row + 1);
        ++w.list_ops;
      }
      const Vertex below = next_unswept_below(cells, runs, row);
      ++w.list_ops;
      if (below > 0 && cells[below].len < cells[row].len) {
        cells[below].len = cells[row].len;
        cells[below].trace = cells[row].trace;
      }
    } else {
      pending.drain(x, [&](const PendingStore::Entry& en) {
        ++w.list_ops;
        const Vertex b = next_unswept_below(cells, runs, en.row);
        if (b > 0 && cells[b].len < en.len) {
          cells[b].len = en.len;
          cells[b].trace = en.id;
        }
      });
    }
  }
  dp.best = best.id;
  dp.best_len = best.len;
  return dp;
}

inline PipelineRun run_trapezoid_pipeline(const TrapezoidModel& t) {
  detail::require_normalized(t);
  PipelineRun run;
  const CornerIndex idx = build_corner_index(t);
  const MatchLists lists = build_all_matches_trap(t, idx);
  run.match_count = lists.total;
  run.build_ops = lists.build_ops;
  const ChainDP dp = chain_dp_trapezoid(t, idx, lists);
  run.work = dp.work;
  run.matching = build_mim(dp, lists);
  return run;
}

inline InducedMatching mim_trapezoid(const TrapezoidModel& t) {
  return run_trapezoid_pipeline(t).matching;
}

}  // namespace mim
