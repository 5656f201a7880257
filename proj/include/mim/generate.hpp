#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mim/permutation.hpp"
#include "mim/trapezoid.hpp"
#include "mim/types.hpp"

namespace mim {

// Deterministic across platforms: fixed-width arithmetic only, no
// implementation-defined distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased value in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~0ULL) / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

enum class Kind { permutation, trapezoid };
enum class Family { uniform_random, identity_plus_k_swaps, reversal, separated, nested };

inline std::string to_string(Kind k) { return k == Kind::permutation ? "perm" : "trap"; }

inline std::string to_string(Family f) {
  switch (f) {
    case Family::uniform_random: return "uniform-random";
    case Family::identity_plus_k_swaps: return "identity-plus-k-swaps";
    case Family::reversal: return "reversal";
    case Family::separated: return "separated";
    case Family::nested: return "nested";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "uniform-random") return Family::uniform_random;
  if (s == "identity-plus-k-swaps") return Family::identity_plus_k_swaps;
  if (s == "reversal") return Family::reversal;
  if (s == "separated") return Family::separated;
  if (s == "nested") return Family::nested;
  throw BadSpec("unknown family: " + s);
}

struct InstanceSpec {
  Kind kind = Kind::permutation;
  Vertex n = 0;
  std::uint64_t seed = 0;
  Family family = Family::uniform_random;
  std::int64_t k = -1;  // identity_plus_k_swaps only; -1 means n / 10
};

namespace detail {

inline std::vector<Vertex> identity_values(Vertex n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

inline std::vector<Vertex> permutation_values(const InstanceSpec& spec) {
  const Vertex n = spec.n;
  if (n <= 0) throw BadSpec("instance size must be positive");
  switch (spec.family) {
    case Family::uniform_random: {
      auto v = identity_values(n);
      SplitMix64 rng(spec.seed);
      for (Vertex i = n - 1; i > 0; --i)
        std::swap(v[i], v[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      return v;
    }
    case Family::identity_plus_k_swaps: {
      // Swap the two values inside k distinct disjoint slots (2i-1, 2i).
      // Each swap contributes exactly one crossing, so the result has
      // exactly k edges, all independent.
      const std::int64_t slots = n / 2;
      const std::int64_t k = spec.k >= 0 ? spec.k : n / 10;
      if (k > slots)
        throw BadSpec("identity-plus-k-swaps needs k <= n/2, got k = " + std::to_string(k) +
                      " with n = " + std::to_string(n));
      auto v = identity_values(n);
      std::vector<std::int64_t> slot(slots);
      for (std::int64_t i = 0; i < slots; ++i) slot[i] = i;
      SplitMix64 rng(spec.seed);
      for (std::int64_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(slots - i)));
        std::swap(slot[i], slot[j]);
        std::swap(v[2 * slot[i]], v[2 * slot[i] + 1]);
      }
      return v;
    }
    case Family::reversal: {
      std::vector<Vertex> v(n);
      for (Vertex i = 0; i < n; ++i) v[i] = n - i;
      return v;
    }
    // Identity: no two chords cross, every pair is separated.
    case Family::separated:
      return identity_values(n);
    // Chords of a permutation diagram cannot nest without crossing, so the
    // closest analogue of fully nested intervals is the all-pairs-crossing
    // reversal.
    case Family::nested: {
      std::vector<Vertex> v(n);
      for (Vertex i = 0; i < n; ++i) v[i] = n - i;
      return v;
    }
  }
  throw BadSpec("unknown family");
}

}  // namespace detail

// Maps vertex v of a permutation model to the degenerate trapezoid whose top
// interval is the point v and bottom interval the point pi_inv(v), then
// normalizes. Intersections — and the match relation — carry over exactly.
inline std::vector<Trapezoid> embed_permutation_points(const PermutationModel& m) {
  std::vector<Trapezoid> traps;
  traps.reserve(m.n);
  for (Vertex v = 1; v <= m.n; ++v)
    traps.push_back({v, v, v, m.pi_inv[v], m.pi_inv[v]});
  return traps;
}

inline std::variant<PermutationModel, TrapezoidModel> generate(const InstanceSpec& spec) {
  if (spec.kind == Kind::permutation)
    return make_permutation(detail::permutation_values(spec));

  const Vertex n = spec.n;
  if (n <= 0) throw BadSpec("instance size must be positive");
  switch (spec.family) {
    case Family::uniform_random: {
      // Independent random boxes: corner order is decided by the normalizer.
      SplitMix64 rng(spec.seed);
      std::vector<Trapezoid> traps;
      traps.reserve(n);
      const auto span = static_cast<std::uint64_t>(n) * 4;
      for (Vertex i = 1; i <= n; ++i) {
        auto a = static_cast<std::int64_t>(rng.below(span)) + 1;
        auto b = static_cast<std::int64_t>(rng.below(span)) + 1;
        auto c = static_cast<std::int64_t>(rng.below(span)) + 1;
        auto d = static_cast<std::int64_t>(rng.below(span)) + 1;
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        traps.push_back({i, a, b, c, d});
      }
      return normalize_trapezoids(traps);
    }
    case Family::nested: {
      // Concentric squares: trapezoid i spans [i, 2n+1-i] on both lines.
      std::vector<Trapezoid> traps;
      traps.reserve(n);
      for (Vertex i = 1; i <= n; ++i)
        traps.push_back({i, i, 2 * static_cast<std::int64_t>(n) + 1 - i, i,
                         2 * static_cast<std::int64_t>(n) + 1 - i});
      return normalize_trapezoids(traps);
    }
    default: {
      // Point embedding of the same-named permutation family keeps the two
      // kinds comparable instance-for-instance.
      InstanceSpec perm_spec = spec;
      perm_spec.kind = Kind::permutation;
      const auto model = make_permutation(detail::permutation_values(perm_spec));
      return normalize_trapezoids(embed_permutation_points(model));
    }
  }
}

}  // namespace mim
