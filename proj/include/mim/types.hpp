#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mim {

using Vertex = std::int32_t;
using MatchId = std::int32_t;

inline constexpr MatchId kNoMatch = -1;

// One exception type per failure class so callers and tests can catch
// precisely the condition they care about.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPermutation : Error { using Error::Error; };
struct InvalidTrapezoid : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct AlreadySameSet : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadSpec : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct EmptyModel : ParseError { using ParseError::ParseError; };
struct ModelCorrupt : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// A matched pair of adjacent vertices. For permutations left/right are vertex
// values with left < right. For trapezoids they are trapezoid ids and "right"
// is the one whose x-interval ends later.
struct Match {
  Vertex left = 0;
  Vertex right = 0;
  friend bool operator==(const Match&, const Match&) = default;
};

struct EdgeList {
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, no duplicates
};

// Result of a solver run: a set of edges that is pairwise disjoint and has no
// edge of the graph joining two of its members.
struct InducedMatching {
  std::vector<Match> edges;
  std::size_t size() const { return edges.size(); }
};

enum class Engine { quadratic, linear };

}  // namespace mim
