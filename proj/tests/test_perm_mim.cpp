#include "catch2/catch_amalgamated.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "mim/generate.hpp"
#include "mim/io.hpp"
#include "mim/oracle.hpp"
#include "mim/permutation_mim.hpp"

using namespace mim;

namespace {

PermutationModel random_perm(SplitMix64& rng, Vertex n) {
  return std::get<PermutationModel>(
      generate({Kind::permutation, n, rng.next(), Family::uniform_random, -1}));
}

// Reference match collection straight from the definitions.
std::vector<Match> brute_matches(const PermutationModel& m) {
  std::vector<Match> out;
  for (Vertex a = 1; a <= m.n; ++a)
    for (Vertex b = 1; b <= m.n; ++b)
      if (a != b && is_match(m, a, b)) out.push_back({a, b});
  return out;
}

void next_lexicographic(std::vector<Vertex>& v) { std::next_permutation(v.begin(), v.end()); }

}  // namespace

TEST_CASE("collected matches are exactly the matches, grouped and ordered", "[perm-mim]") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(1 + rng.below(40));
    const auto m = random_perm(rng, n);
    const MatchLists lists = build_all_matches(m);

    std::vector<Match> expect = brute_matches(m);
    std::vector<Match> got;
    for (Vertex r = 1; r <= n; ++r) {
      const auto group = lists.partners(r);
      for (std::size_t k = 0; k < group.size(); ++k) {
        got.push_back({group[k], r});
        // Left ends arrive in strictly decreasing position order.
        if (k > 0) REQUIRE(m.pi_inv[group[k]] < m.pi_inv[group[k - 1]]);
        // Ids are stable and invertible.
        const MatchId id = lists.id_at(r, static_cast<std::int64_t>(k));
        CHECK((lists.match_of(id) == Match{group[k], r}));
      }
    }
    auto key = [](const Match& e) { return std::pair{e.left, e.right}; };
    std::sort(expect.begin(), expect.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(got.begin(), got.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    REQUIRE(got == expect);
    CHECK(lists.total == static_cast<std::int64_t>(expect.size()));
  }
  CHECK_THROWS_AS(build_all_matches(make_permutation({2, 1})).match_of(5), OutOfRange);
}

TEST_CASE("six-element fixture: lists, lengths, and the tie break", "[perm-mim]") {
  const auto m = make_permutation({2, 3, 1, 4, 6, 5});
  const MatchLists lists = build_all_matches(m);
  REQUIRE(lists.total == 3);
  REQUIRE(lists.partners(2).size() == 1);
  CHECK(lists.partners(2)[0] == 1);
  REQUIRE(lists.partners(3).size() == 1);
  CHECK(lists.partners(3)[0] == 1);
  REQUIRE(lists.partners(6).size() == 1);
  CHECK(lists.partners(6)[0] == 5);

  for (const Engine engine : {Engine::quadratic, Engine::linear}) {
    const ChainDP dp = engine == Engine::quadratic ? chain_dp_quadratic(m, lists)
                                                   : chain_dp_linear(m, lists);
    // Both two-long chains end in (5, 6); the lone chain from (5, 6) has length 1.
    CHECK(dp.len[lists.id_at(2, 0)] == 2);
    CHECK(dp.len[lists.id_at(3, 0)] == 2);
    CHECK(dp.len[lists.id_at(6, 0)] == 1);
    CHECK(dp.best_len == 2);
    // Tie on length is broken toward the smaller right end: (1, 2) not (1, 3).
    CHECK((lists.match_of(dp.best) == Match{1, 2}));
    const InducedMatching got = build_mim(dp, lists);
    CHECK(matching_to_string(got) == "2\n1 2\n5 6\n");
  }
}

TEST_CASE("twelve-element fixture solves to the known matching", "[perm-mim]") {
  const auto m = make_permutation({5, 7, 2, 1, 4, 8, 11, 10, 3, 6, 12, 9});
  for (const Engine engine : {Engine::quadratic, Engine::linear}) {
    const PipelineRun run = run_permutation_pipeline(m, engine);
    CHECK(run.matching.size() == 3);
    // (1, 5) would do equally well as the opening pair; the sweep reaches the
    // cell of (1, 2) first among the length-1 predecessors of (6, 8).
    CHECK(matching_to_string(run.matching) == "3\n1 2\n6 8\n9 12\n");
    CHECK(validate_matching_in_model(m, run.matching).ok);
  }
}

TEST_CASE("degenerate inputs", "[perm-mim]") {
  for (const Engine engine : {Engine::quadratic, Engine::linear}) {
    CHECK(mim_permutation(make_permutation({1}), engine).size() == 0);
    CHECK(mim_permutation(make_permutation({1, 2, 3, 4}), engine).size() == 0);
    CHECK(mim_permutation(make_permutation({2, 1}), engine).size() == 1);
    CHECK(mim_permutation(make_permutation({4, 3, 2, 1}), engine).size() == 1);
  }
}

TEST_CASE("both engines match exhaustive search on every tiny permutation", "[perm-mim]") {
  for (Vertex n = 1; n <= 6; ++n) {
    std::vector<Vertex> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
      const auto m = make_permutation(values);
      const std::int32_t exact = oracle_mim(edges_from_model(m), 1000).size;
      for (const Engine engine : {Engine::quadratic, Engine::linear}) {
        const InducedMatching got = mim_permutation(m, engine);
        REQUIRE(static_cast<std::int32_t>(got.size()) == exact);
        REQUIRE(validate_matching_in_model(m, got).ok);
      }
      next_lexicographic(values);
    } while (!std::is_sorted(values.begin(), values.end()));
  }
}

TEST_CASE("both engines match exhaustive search on random instances", "[perm-mim]") {
  SplitMix64 rng(707);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<Vertex>(1 + rng.below(10));
    const auto m = random_perm(rng, n);
    const std::int32_t exact = oracle_mim(edges_from_model(m), 1000).size;
    for (const Engine engine : {Engine::quadratic, Engine::linear}) {
      const InducedMatching got = mim_permutation(m, engine);
      REQUIRE(static_cast<std::int32_t>(got.size()) == exact);
      REQUIRE(validate_matching_in_model(m, got).ok);
    }
  }
}

TEST_CASE("stored chains are genuine chains with consistent lengths", "[perm-mim]") {
  SplitMix64 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<Vertex>(2 + rng.below(50));
    const auto m = random_perm(rng, n);
    const MatchLists lists = build_all_matches(m);
    for (const Engine engine : {Engine::quadratic, Engine::linear}) {
      const ChainDP dp = engine == Engine::quadratic ? chain_dp_quadratic(m, lists)
                                                     : chain_dp_linear(m, lists);
      std::int32_t max_len = 0;
      for (MatchId e = 0; e < lists.total; ++e) {
        max_len = std::max(max_len, dp.len[e]);
        if (dp.next[e] == kNoMatch) {
          CHECK(dp.len[e] == 1);
        } else {
          CHECK(dp.len[e] == 1 + dp.len[dp.next[e]]);
          CHECK(match_less(m, lists.match_of(e), lists.match_of(dp.next[e])));
        }
      }
      CHECK(dp.best_len == max_len);
      const InducedMatching got = build_mim(dp, lists);
      CHECK(static_cast<std::int32_t>(got.size()) == dp.best_len);
      if (lists.total > 0) CHECK(validate_matching_in_model(m, got).ok);
    }
  }
}

TEST_CASE("engines agree on size at moderate scale", "[perm-mim]") {
  SplitMix64 rng(27182);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_perm(rng, 300);
    const auto quad = run_permutation_pipeline(m, Engine::quadratic);
    const auto lin = run_permutation_pipeline(m, Engine::linear);
    REQUIRE(quad.matching.size() == lin.matching.size());
    CHECK(validate_matching_in_model(m, quad.matching).ok);
    CHECK(validate_matching_in_model(m, lin.matching).ok);
  }
}

TEST_CASE("linear-engine work stays within the linear budget", "[perm-mim]") {
  SplitMix64 rng(31415);
  for (const Vertex n : {100, 1000, 5000}) {
    const auto m = std::get<PermutationModel>(
        generate({Kind::permutation, n, rng.next(), Family::identity_plus_k_swaps, -1}));
    const PipelineRun run = run_permutation_pipeline(m, Engine::linear);
    const std::int64_t total = run.build_ops + run.work.total();
    CHECK(total <= 8 * (run.match_count + n));
  }
  // Dense worst case: the budget must hold there too.
  const auto rev = std::get<PermutationModel>(generate({Kind::permutation, 400, 0, Family::reversal, -1}));
  const PipelineRun run = run_permutation_pipeline(rev, Engine::linear);
  CHECK(run.build_ops + run.work.total() <= 8 * (run.match_count + 400));
}

TEST_CASE("deferred-write store drains oldest first and recycles chunks", "[perm-mim]") {
  PendingStore store(5);
  for (std::int32_t i = 0; i < 30; ++i) store.push(3, {i, i, i});  // spans three chunks
  store.push(1, {99, 99, 99});

  std::vector<std::int32_t> seen;
  store.drain(3, [&](const PendingStore::Entry& e) { seen.push_back(e.len); });
  REQUIRE(seen.size() == 30);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == 0);
  CHECK(seen.back() == 29);

  seen.clear();
  store.drain(3, [&](const PendingStore::Entry&) { seen.push_back(0); });
  CHECK(seen.empty());  // drained buckets are empty

  // Recycled chunks serve new pushes; order is still oldest first.
  for (std::int32_t i = 0; i < 14; ++i) store.push(2, {i, i, i});
  seen.clear();
  store.drain(2, [&](const PendingStore::Entry& e) { seen.push_back(e.len); });
  REQUIRE(seen.size() == 14);
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  seen.clear();
  store.drain(1, [&](const PendingStore::Entry& e) { seen.push_back(e.len); });
  REQUIRE(seen == std::vector<std::int32_t>{99});
}

TEST_CASE("unswept-run jumps skip exactly the swept rows", "[perm-mim]") {
  std::vector<SweepCell> cells(8);  // rows 1..7
  MinNameDisjointSet runs(7);
  auto sweep = [&](Vertex row) {
    cells[row].swept = 1;
    if (row > 1 && cells[row - 1].swept) runs.unite(row - 1, row);
    if (row < 7 && cells[row + 1].swept) runs.unite(row, row + 1);
  };

  CHECK(next_unswept_below(cells, runs, 8) == 7);
  CHECK(next_unswept_below(cells, runs, 1) == 0);
  sweep(7);
  CHECK(next_unswept_below(cells, runs, 8) == 6);
  sweep(5);
  sweep(6);
  CHECK(next_unswept_below(cells, runs, 8) == 4);
  CHECK(next_unswept_below(cells, runs, 5) == 4);
  sweep(1);
  sweep(2);
  CHECK(next_unswept_below(cells, runs, 3) == 0);
  CHECK(next_unswept_below(cells, runs, 4) == 3);
  CHECK_THROWS_AS(next_unswept_below(cells, runs, 9), OutOfRange);
  CHECK_THROWS_AS(next_unswept_below(cells, runs, 0), OutOfRange);
}
