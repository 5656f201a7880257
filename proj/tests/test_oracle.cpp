#include "catch2/catch_amalgamated.hpp"

#include "mim/generate.hpp"
#include "mim/oracle.hpp"
#include "mim/permutation.hpp"

using namespace mim;

namespace {

EdgeList graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  return {n, std::move(edges)};
}

EdgeList path(Vertex n) {
  EdgeList g{n, {}};
  for (Vertex i = 1; i < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

EdgeList complete(Vertex n) {
  EdgeList g{n, {}};
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.edges.push_back({u, v});
  return g;
}

}  // namespace

TEST_CASE("exhaustive search on named small graphs", "[oracle]") {
  CHECK(oracle_mim(graph(5, {})).size == 0);
  CHECK(oracle_mim(graph(4, {{1, 2}, {3, 4}})).size == 2);
  CHECK(oracle_mim(path(4)).size == 1);
  CHECK(oracle_mim(path(5)).size == 2);
  CHECK(oracle_mim(complete(4)).size == 1);

  EdgeList cycle6 = path(6);
  cycle6.edges.push_back({1, 6});
  CHECK(oracle_mim(cycle6).size == 2);

  EdgeList star = graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(oracle_mim(star).size == 1);
}

TEST_CASE("witness has the reported size and passes the validator", "[oracle]") {
  for (const EdgeList& g : {path(7), complete(5), graph(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}})}) {
    const OracleResult r = oracle_mim(g);
    CHECK(r.witness.size() == static_cast<std::size_t>(r.size));
    CHECK(validate_induced_matching(g, r.witness).ok);
  }
}

TEST_CASE("size cap refuses large inputs unless n is tiny", "[oracle]") {
  CHECK_THROWS_AS(oracle_mim(complete(13)), TooLarge);  // 78 edges, n = 13
  CHECK(oracle_mim(complete(12)).size == 1);            // 66 edges but n <= 12
  CHECK(oracle_mim(complete(13), 100).size == 1);       // raised cap admits it
  CHECK_THROWS_AS(oracle_mim(path(30), 20), TooLarge);
  CHECK(oracle_mim(path(30), 29).size == 10);  // path MIM = ceil((n-1)/3)
}

TEST_CASE("validator accepts exactly the induced matchings", "[oracle]") {
  const EdgeList g = path(6);  // edges 1-2 .. 5-6

  CHECK(validate_induced_matching(g, {}).ok);
  CHECK(validate_induced_matching(g, {{{1, 2}}}).ok);
  CHECK(validate_induced_matching(g, {{{1, 2}, {4, 5}}}).ok);
  CHECK(validate_induced_matching(g, {{{1, 2}, {5, 6}}}).ok);

  // 2-3 and 3-4 share vertex 3.
  CHECK_FALSE(validate_induced_matching(g, {{{2, 3}, {3, 4}}}).ok);
  // 1-2 and 3-4 are joined by the edge 2-3.
  const ValidationResult joined = validate_induced_matching(g, {{{1, 2}, {3, 4}}});
  CHECK_FALSE(joined.ok);
  CHECK_FALSE(joined.reason.empty());
  // 1-3 is not an edge of the path at all.
  CHECK_THROWS_AS(validate_induced_matching(g, {{{1, 3}}}), UnknownEdge);
}

TEST_CASE("model-aware validator agrees with the edge-list validator", "[oracle]") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(4 + rng.below(7));
    InstanceSpec spec{Kind::permutation, n, rng.next(), Family::uniform_random, -1};
    const auto model = std::get<PermutationModel>(generate(spec));
    const EdgeList g = edges_from_model(model);
    if (g.edges.empty()) continue;

    // A genuine result plus random two-pair candidates, valid or not.
    const OracleResult exact = oracle_mim(g, 1000);
    CHECK(validate_matching_in_model(model, exact.witness).ok);

    const auto& e1 = g.edges[rng.below(g.edges.size())];
    const auto& e2 = g.edges[rng.below(g.edges.size())];
    if (e1 == e2) continue;
    const InducedMatching cand{{{e1.first, e1.second}, {e2.first, e2.second}}};
    const ValidationResult via_list = validate_induced_matching(g, cand);
    const ValidationResult via_model = validate_matching_in_model(model, cand);
    CHECK(via_list.ok == via_model.ok);
  }
}

TEST_CASE("validator rejections carry the offending vertices", "[oracle]") {
  const EdgeList g = path(6);
  const auto dup = validate_induced_matching(g, {{{2, 3}, {3, 4}}});
  CHECK(dup.reason.find('3') != std::string::npos);
  const auto cross = validate_induced_matching(g, {{{1, 2}, {3, 4}}});
  CHECK(cross.reason.find("joins") != std::string::npos);
}
