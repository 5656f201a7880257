#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "mim/disjoint_set.hpp"
#include "mim/types.hpp"

namespace mim {

// Instrumentation shared by every solver engine. cell_visits counts reads of
// sweep cells by the scanning pointer; list_ops counts appends, deferred-write
// flush steps, pointer reseeds, push-downs and unions.
struct WorkCounters {
  std::int64_t cell_visits = 0;
  std::int64_t list_ops = 0;
  std::int64_t total() const { return cell_visits + list_ops; }
};

// Candidate matches grouped by right end in a flat layout: the left partners
// of right end r occupy left[head[r] .. head[r+1]). A match's id is its
// position in `left`, which makes the id both stable and order-preserving
// within a group.
struct MatchLists {
  Vertex n = 0;
  std::int64_t total = 0;
  std::vector<std::int64_t> head;  // size n+2
  std::vector<Vertex> left;
  std::int64_t build_ops = 0;

  std::span<const Vertex> partners(Vertex right) const {
    return {left.data() + head[right], static_cast<std::size_t>(head[right + 1] - head[right])};
  }

  MatchId id_at(Vertex right, std::int64_t k) const {
    return static_cast<MatchId>(head[right] + k);
  }

  Match match_of(MatchId id) const {
    if (id < 0 || id >= total) throw OutOfRange("match id " + std::to_string(id));
    auto it = std::upper_bound(head.begin() + 1, head.end(), static_cast<std::int64_t>(id));
    const auto right = static_cast<Vertex>(it - head.begin() - 1);
    return {left[id], right};
  }
};

// One row of the sweep table: the best chain length seen for this row, the
// match that starts such a chain, and whether the row has been swept over.
struct SweepCell {
  std::int32_t len = 0;
  MatchId trace = kNoMatch;
  std::uint8_t swept = 0;
};

// Dynamic-programming output of an engine: for every match id the length of
// the longest chain starting at it and the next match on one such chain,
// plus the argmax with ties broken toward the lexicographically smallest
// (right end, left end).
struct ChainDP {
  std::vector<std::int32_t> len;
  std::vector<MatchId> next;
  MatchId best = kNoMatch;
  std::int32_t best_len = 0;
  WorkCounters work;
};

// Deferred cell writes keyed by the coordinate at which they become safe to
// apply. Buckets are singly linked chunk chains in a paged arena: the dense
// case stays close to the live entry count (drained chunks are recycled) and
// the sparse case stays O(keys + entries). A deque backs the arena so growth
// never copies or doubles the resident footprint.
class PendingStore {
 public:
  struct Entry {
    std::int32_t len;
    MatchId id;
    std::int32_t row;
  };

  explicit PendingStore(Vertex keys) : bucket_(static_cast<std::size_t>(keys) + 1, -1) {}

  void push(Vertex key, Entry e) {
    std::int32_t c = bucket_[key];
    if (c < 0 || pool_[c].count == kChunkCap) {
      c = grab_chunk(c);
      bucket_[key] = c;
    }
    Chunk& chunk = pool_[c];
    chunk.item[chunk.count++] = e;
  }

  // Visits the entries of one bucket oldest first, then recycles its chunks.
  template <class Fn>
  void drain(Vertex key, Fn&& fn) {
    scratch_.clear();
    for (std::int32_t c = bucket_[key]; c >= 0; c = pool_[c].prev) scratch_.push_back(c);
    for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) {
      const Chunk& chunk = pool_[*it];
      for (std::int32_t i = 0; i < chunk.count; ++i) fn(chunk.item[i]);
    }
    std::int32_t c = bucket_[key];
    while (c >= 0) {
      const std::int32_t prev = pool_[c].prev;
      pool_[c].prev = free_;
      pool_[c].count = 0;
      free_ = c;
      c = prev;
    }
    bucket_[key] = -1;
  }

 private:
  static constexpr std::int32_t kChunkCap = 12;
  struct Chunk {
    std::int32_t prev;
    std::int32_t count;
    Entry item[kChunkCap];
  };

  std::int32_t grab_chunk(std::int32_t prev) {
    std::int32_t c;
    if (free_ >= 0) {
      c = free_;
      free_ = pool_[c].prev;
    } else {
      c = static_cast<std::int32_t>(pool_.size());
      pool_.push_back(Chunk{});
    }
    pool_[c].prev = prev;
    pool_[c].count = 0;
    return c;
  }

  std::vector<std::int32_t> bucket_;
  std::deque<Chunk> pool_;
  std::int32_t free_ = -1;
  std::vector<std::int32_t> scratch_;
};

// Greatest unswept cell strictly below x, or 0 when there is none. Swept
// cells form contiguous runs joined in the disjoint-set structure, whose
// min-name find jumps a whole run in near-constant time.
inline Vertex next_unswept_below(const std::vector<SweepCell>& cells, MinNameDisjointSet& d, Vertex x) {
  if (x < 1 || static_cast<std::size_t>(x) > cells.size())
    throw OutOfRange("sweep position " + std::to_string(x));
  if (x == 1) return 0;
  if (!cells[static_cast<std::size_t>(x) - 1].swept) return x - 1;
  return d.find(x - 1) - 1;
}

// Walks the stored chain from the best match upward. Works unchanged for both
// model kinds because it only touches ids.
inline InducedMatching build_mim(const ChainDP& dp, const MatchLists& lists) {
  InducedMatching out;
  for (MatchId e = dp.best; e != kNoMatch; e = dp.next[e]) out.edges.push_back(lists.match_of(e));
  return out;
}

}  // namespace mim
