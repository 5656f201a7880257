#include "catch2/catch_amalgamated.hpp"

#include <sstream>

#include "mim/generate.hpp"
#include "mim/io.hpp"

using namespace mim;

TEST_CASE("permutation files round trip byte for byte", "[io]") {
  const std::string text = "perm 4\n2 1 4 3\n";
  std::istringstream in(text);
  const auto parsed = parse_instance(in);
  const auto& m = std::get<PermutationModel>(parsed);
  CHECK(m.n == 4);
  CHECK(m.pi[1] == 2);

  std::ostringstream out;
  write_permutation(out, m);
  CHECK(out.str() == text);
}

TEST_CASE("trapezoid files round trip byte for byte", "[io]") {
  const std::string text = "trap 2\n1 3 1 3\n2 4 2 4\n";
  std::istringstream in(text);
  const auto parsed = parse_instance(in);
  const auto& m = std::get<TrapezoidModel>(parsed);
  CHECK(m.n == 2);
  CHECK_FALSE(m.normalized);
  CHECK(m.traps[2].y2 == 4);

  std::ostringstream out;
  write_trapezoids(out, m);
  CHECK(out.str() == text);
}

TEST_CASE("negative and huge trapezoid coordinates survive parsing", "[io]") {
  std::istringstream in("trap 1\n-9000000000 9000000000 -1 1\n");
  const auto& m = std::get<TrapezoidModel>(parse_instance(in));
  CHECK(m.traps[1].x1 == -9000000000LL);
  CHECK(m.traps[1].x2 == 9000000000LL);
}

TEST_CASE("parse diagnostics name the failure", "[io]") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
  };
  CHECK_THROWS_AS(parse(""), EmptyModel);
  CHECK_THROWS_AS(parse("perm 0\n"), EmptyModel);
  CHECK_THROWS_AS(parse("perm -3\n"), EmptyModel);
  CHECK_THROWS_AS(parse("graph 4\n"), ParseError);
  CHECK_THROWS_AS(parse("perm 3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("perm 3\n1 2 x\n"), ParseError);
  CHECK_THROWS_AS(parse("perm 3\n1 2 2\n"), NotAPermutation);
  CHECK_THROWS_AS(parse("trap 2\n1 2 3 4\n"), ParseError);        // second row missing
  CHECK_THROWS_AS(parse("trap 1\n5 4 1 2\n"), InvalidTrapezoid);  // reversed interval
  CHECK_THROWS_AS(parse_instance_file("/no/such/file"), ParseError);
}

TEST_CASE("matching output is canonical", "[io]") {
  InducedMatching matching;
  matching.edges = {{9, 12}, {6, 8}, {5, 1}};  // unsorted, one pair reversed
  CHECK(matching_to_string(matching) == "3\n1 5\n6 8\n9 12\n");
  CHECK(matching_to_string({}) == "0\n");
}

TEST_CASE("gen output parses back for every family and kind", "[io]") {
  for (const Kind kind : {Kind::permutation, Kind::trapezoid})
    for (const Family family : {Family::uniform_random, Family::identity_plus_k_swaps,
                                Family::reversal, Family::separated, Family::nested}) {
      const InstanceSpec spec{kind, 20, 4242, family, -1};
      const auto instance = generate(spec);
      std::ostringstream out;
      if (const auto* p = std::get_if<PermutationModel>(&instance))
        write_permutation(out, *p);
      else
        write_trapezoids(out, std::get<TrapezoidModel>(instance));
      std::istringstream in(out.str());
      const auto reparsed = parse_instance(in);
      CHECK(std::holds_alternative<PermutationModel>(reparsed) == (kind == Kind::permutation));
    }
}
