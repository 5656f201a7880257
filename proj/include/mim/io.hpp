#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mim/permutation.hpp"
#include "mim/trapezoid.hpp"
#include "mim/types.hpp"

namespace mim {

// Instance file formats. Header line names the kind and size, body is raw
// integers:
//
//   perm <n>              trap <n>
//   <pi(1)> ... <pi(n)>   <x1 x2 y1 y2>   (one line per trapezoid, id by order)
//
// Trapezoid coordinates may be arbitrary 64-bit integers; callers normalize.

namespace detail {

template <typename Int>
Int parse_int(std::istream& in, const std::string& what) {
  Int v;
  if (!(in >> v)) throw ParseError("expected " + what);
  return v;
}

}  // namespace detail

inline std::variant<PermutationModel, TrapezoidModel> parse_instance(std::istream& in) {
  std::string kind;
  if (!(in >> kind)) throw EmptyModel("empty input");
  if (kind != "perm" && kind != "trap")
    throw ParseError("expected header 'perm <n>' or 'trap <n>', got '" + kind + "'");
  const auto n = detail::parse_int<std::int64_t>(in, "instance size after '" + kind + "'");
  if (n <= 0) throw EmptyModel("instance size must be positive, got " + std::to_string(n));
  if (n > (1LL << 30)) throw ParseError("instance size too large: " + std::to_string(n));

  if (kind == "perm") {
    std::vector<Vertex> values(n);
    for (std::int64_t i = 0; i < n; ++i)
      values[i] = detail::parse_int<Vertex>(in, "permutation value " + std::to_string(i + 1) +
                                                    " of " + std::to_string(n));
    return make_permutation(values);
  }
  std::vector<Trapezoid> traps;
  traps.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) {
    Trapezoid t;
    t.id = static_cast<Vertex>(i + 1);
    t.x1 = detail::parse_int<std::int64_t>(in, "x1 of trapezoid " + std::to_string(i + 1));
    t.x2 = detail::parse_int<std::int64_t>(in, "x2 of trapezoid " + std::to_string(i + 1));
    t.y1 = detail::parse_int<std::int64_t>(in, "y1 of trapezoid " + std::to_string(i + 1));
    t.y2 = detail::parse_int<std::int64_t>(in, "y2 of trapezoid " + std::to_string(i + 1));
    traps.push_back(t);
  }
  TrapezoidModel model;
  model.n = static_cast<Vertex>(n);
  model.normalized = false;
  model.traps.resize(n + 1);
  for (const Trapezoid& t : traps) {
    if (t.x1 > t.x2 || t.y1 > t.y2)
      throw InvalidTrapezoid("trapezoid " + std::to_string(t.id) + " has an empty interval");
    model.traps[t.id] = t;
  }
  return model;
}

inline std::variant<PermutationModel, TrapezoidModel> parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_instance(in);
}

inline void write_permutation(std::ostream& out, const PermutationModel& m) {
  out << "perm " << m.n << "\n";
  for (Vertex i = 1; i <= m.n; ++i) out << m.pi[i] << (i == m.n ? "\n" : " ");
}

inline void write_trapezoids(std::ostream& out, const TrapezoidModel& m) {
  out << "trap " << m.n << "\n";
  for (Vertex i = 1; i <= m.n; ++i) {
    const Trapezoid& t = m.traps[i];
    out << t.x1 << " " << t.x2 << " " << t.y1 << " " << t.y2 << "\n";
  }
}

// Canonical result format: size line, then one "u v" line per pair with
// u < v, pairs sorted lexicographically.
inline void write_matching(std::ostream& out, const InducedMatching& matching) {
  std::vector<Match> rows = matching.edges;
  for (Match& e : rows)
    if (e.left > e.right) std::swap(e.left, e.right);
  std::sort(rows.begin(), rows.end(), [](const Match& a, const Match& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  out << rows.size() << "\n";
  for (const Match& e : rows) out << e.left << " " << e.right << "\n";
}

inline std::string matching_to_string(const InducedMatching& matching) {
  std::ostringstream out;
  write_matching(out, matching);
  return out.str();
}

}  // namespace mim
