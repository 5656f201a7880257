#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "mim/mim.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::int32_t resolve_oracle_cap(std::int32_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("MIM_ORACLE_CAP")) {
    try {
      std::size_t used = 0;
      const long v = std::stol(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return static_cast<std::int32_t>(v);
    } catch (const std::exception&) {
      throw mim::BadSpec(std::string("MIM_ORACLE_CAP is not an integer: ") + env);
    }
  }
  return mim::kDefaultOracleCap;
}

template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    if (!std::cout) throw mim::IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mim::IoError("cannot open " + path + " for writing");
  fn(out);
  out.flush();
  if (!out) throw mim::IoError("write to " + path + " failed");
}

// Every candidate match is exactly one graph edge, so the edge list falls out
// of the match-collection step in O(m + n) — no quadratic adjacency scan.
mim::EdgeList edges_via_matches(const mim::PermutationModel& m) {
  const mim::MatchLists lists = mim::build_all_matches(m);
  mim::EdgeList g;
  g.n = m.n;
  g.edges.reserve(static_cast<std::size_t>(lists.total));
  for (mim::Vertex r = 1; r <= m.n; ++r)
    for (const mim::Vertex l : lists.partners(r)) g.edges.push_back({l, r});
  return g;
}

mim::EdgeList edges_via_matches(const mim::TrapezoidModel& t) {
  const mim::CornerIndex idx = mim::build_corner_index(t);
  const mim::MatchLists lists = mim::build_all_matches_trap(t, idx);
  mim::EdgeList g;
  g.n = t.n;
  g.edges.reserve(static_cast<std::size_t>(lists.total));
  for (mim::Vertex r = 1; r <= t.n; ++r)
    for (const mim::Vertex l : lists.partners(r))
      g.edges.push_back({std::min(l, r), std::max(l, r)});
  return g;
}

// Shared by solve and bench: validator always, oracle only when the instance
// is small enough for exhaustive search. Returns the verification status for
// reporting; hard failures are collected in `failure`.
template <class Model>
std::string verify_matching(const Model& model, std::int64_t match_count,
                            const mim::InducedMatching& got, std::int32_t cap,
                            std::string& failure) {
  const mim::ValidationResult valid = mim::validate_matching_in_model(model, got);
  if (!valid.ok) {
    failure = "validator: " + valid.reason;
    return "FAIL";
  }
  if (match_count <= cap || model.n <= 12) {
    const mim::OracleResult exact = mim::oracle_mim(edges_via_matches(model), cap);
    if (static_cast<std::size_t>(exact.size) != got.size()) {
      failure = "oracle disagrees: exhaustive search finds " + std::to_string(exact.size) +
                ", solver reported " + std::to_string(got.size());
      return "FAIL";
    }
    return "oracle-ok";
  }
  std::cerr << "verify: oracle skipped, " << match_count << " edges exceeds cap " << cap
            << " (validator passed)\n";
  return "ok";
}

struct SolveArgs {
  std::string input;
  std::string output = "-";
  std::string kind;
  std::string algo = "auto";
  bool verify = false;
  bool dump_normalized = false;
  std::int32_t oracle_cap = mim::kDefaultOracleCap;
  bool oracle_cap_given = false;
};

int run_solve(const SolveArgs& args) {
  auto parsed = mim::parse_instance_file(args.input);
  const bool is_perm = std::holds_alternative<mim::PermutationModel>(parsed);
  const std::string file_kind = is_perm ? "perm" : "trap";
  if (!args.kind.empty() && args.kind != file_kind)
    throw mim::BadSpec("--kind " + args.kind + " does not match input file (found '" + file_kind +
                       "')");
  if (!is_perm && args.algo == "quadratic")
    throw mim::BadSpec("the trapezoid solver has a single engine; drop --algo quadratic");
  const mim::Engine engine =
      args.algo == "quadratic" ? mim::Engine::quadratic : mim::Engine::linear;
  const std::int32_t cap = resolve_oracle_cap(args.oracle_cap, args.oracle_cap_given);

  mim::PipelineRun run;
  std::string verification;
  std::string failure;
  if (is_perm) {
    const auto& model = std::get<mim::PermutationModel>(parsed);
    run = mim::run_permutation_pipeline(model, engine);
    if (args.verify) verification = verify_matching(model, run.match_count, run.matching, cap, failure);
    if (args.dump_normalized)
      with_output(args.output, [&](std::ostream& out) {
        mim::write_permutation(out, model);
        mim::write_matching(out, run.matching);
      });
  } else {
    auto& model = std::get<mim::TrapezoidModel>(parsed);
    if (!model.normalized)
      model = mim::normalize_trapezoids(
          std::vector<mim::Trapezoid>(model.traps.begin() + 1, model.traps.end()));
    run = mim::run_trapezoid_pipeline(model);
    if (args.verify) verification = verify_matching(model, run.match_count, run.matching, cap, failure);
    if (args.dump_normalized)
      with_output(args.output, [&](std::ostream& out) {
        mim::write_trapezoids(out, model);
        mim::write_matching(out, run.matching);
      });
  }
  if (!args.dump_normalized)
    with_output(args.output, [&](std::ostream& out) { mim::write_matching(out, run.matching); });
  if (!failure.empty()) {
    std::cerr << "verification failed: " << failure << "\n";
    return 1;
  }
  if (args.verify) std::cerr << "verify: " << verification << "\n";
  return 0;
}

struct GenArgs {
  std::string kind = "perm";
  std::string family = "uniform-random";
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t k = -1;
  std::string output = "-";
};

int run_gen(const GenArgs& args) {
  mim::InstanceSpec spec;
  spec.kind = args.kind == "perm" ? mim::Kind::permutation : mim::Kind::trapezoid;
  spec.family = mim::family_from_string(args.family);
  spec.n = static_cast<mim::Vertex>(args.n);
  spec.seed = args.seed;
  spec.k = args.k;
  const auto instance = mim::generate(spec);
  with_output(args.output, [&](std::ostream& out) {
    if (const auto* perm = std::get_if<mim::PermutationModel>(&instance))
      mim::write_permutation(out, *perm);
    else
      mim::write_trapezoids(out, std::get<mim::TrapezoidModel>(instance));
  });
  return 0;
}

struct BenchArgs {
  std::string kind = "perm";
  std::string family = "identity-plus-k-swaps";
  std::string algo = "auto";
  std::vector<std::int64_t> sizes;
  std::int64_t reps = 5;
  std::uint64_t seed = 1;
  std::int64_t k = -1;
  bool verify = false;
  std::int32_t oracle_cap = mim::kDefaultOracleCap;
  bool oracle_cap_given = false;
  std::string csv = "-";
};

struct BenchRow {
  std::string instance, kind, family, algorithm, rep, verification;
  std::int64_t n = 0, m = 0, mim_size = 0, wall_ns = 0, cell_visits = 0, list_ops = 0;
  std::uint64_t seed = 0;
};

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,kind,family,n,seed,algorithm,rep,m,mim_size,wall_ns,cell_visits,list_ops,"
         "verification\n";
  for (const BenchRow& r : rows)
    out << r.instance << ',' << r.kind << ',' << r.family << ',' << r.n << ',' << r.seed << ','
        << r.algorithm << ',' << r.rep << ',' << r.m << ',' << r.mim_size << ',' << r.wall_ns
        << ',' << r.cell_visits << ',' << r.list_ops << ',' << r.verification << '\n';
}

int run_bench(const BenchArgs& args) {
  if (args.sizes.empty()) throw mim::BadSpec("--sizes must list at least one instance size");
  if (args.reps < 1) throw mim::BadSpec("--reps must be at least 1");
  const std::int32_t cap = resolve_oracle_cap(args.oracle_cap, args.oracle_cap_given);

  std::vector<std::string> algos;
  if (args.kind == "trap") {
    if (args.algo == "quadratic" || args.algo == "both")
      throw mim::BadSpec("the trapezoid solver has a single engine; use --algo linear");
    algos = {"linear"};
  } else if (args.algo == "quadratic" || args.algo == "linear") {
    algos = {args.algo};
  } else {
    algos = {"quadratic", "linear"};
  }

  std::vector<BenchRow> rows;
  bool any_failure = false;
  for (std::size_t si = 0; si < args.sizes.size(); ++si) {
    mim::InstanceSpec spec;
    spec.kind = args.kind == "perm" ? mim::Kind::permutation : mim::Kind::trapezoid;
    spec.family = mim::family_from_string(args.family);
    spec.n = static_cast<mim::Vertex>(args.sizes[si]);
    spec.seed = args.seed + si;
    spec.k = args.k;
    const auto instance = mim::generate(spec);

    for (const std::string& algo : algos) {
      const mim::Engine engine = algo == "quadratic" ? mim::Engine::quadratic : mim::Engine::linear;
      std::vector<BenchRow> reps;
      for (std::int64_t rep = 0; rep < args.reps; ++rep) {
        BenchRow row;
        row.kind = args.kind;
        row.family = args.family;
        row.n = spec.n;
        row.seed = spec.seed;
        row.algorithm = algo;
        row.rep = std::to_string(rep);
        row.instance = args.family + "-n" + std::to_string(spec.n) + "-seed" +
                       std::to_string(spec.seed);

        mim::PipelineRun run;
        const auto t0 = Clock::now();
        if (const auto* perm = std::get_if<mim::PermutationModel>(&instance))
          run = mim::run_permutation_pipeline(*perm, engine);
        else
          run = mim::run_trapezoid_pipeline(std::get<mim::TrapezoidModel>(instance));
        const auto t1 = Clock::now();

        row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        row.m = run.match_count;
        row.mim_size = static_cast<std::int64_t>(run.matching.size());
        row.cell_visits = run.work.cell_visits;
        row.list_ops = run.build_ops + run.work.list_ops;

        if (args.verify) {
          if (spec.n > 4096) {
            row.verification = "verify-skipped";
          } else {
            std::string failure;
            if (const auto* perm = std::get_if<mim::PermutationModel>(&instance))
              row.verification = verify_matching(*perm, run.match_count, run.matching, cap, failure);
            else
              row.verification = verify_matching(std::get<mim::TrapezoidModel>(instance),
                                                 run.match_count, run.matching, cap, failure);
            if (!failure.empty()) {
              any_failure = true;
              std::cerr << "bench verification failed on " << row.instance << " (" << algo
                        << "): " << failure << "\n";
            }
          }
        }
        reps.push_back(row);
      }
      rows.insert(rows.end(), reps.begin(), reps.end());

      BenchRow median = reps.front();
      median.rep = "median";
      median.verification.clear();
      auto middle = [&](auto field) {
        std::vector<std::int64_t> v;
        for (const BenchRow& r : reps) v.push_back(r.*field);
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
      };
      median.wall_ns = middle(&BenchRow::wall_ns);
      median.cell_visits = middle(&BenchRow::cell_visits);
      median.list_ops = middle(&BenchRow::list_ops);
      rows.push_back(median);
    }
  }
  with_output(args.csv, [&](std::ostream& out) { write_csv(out, rows); });
  return any_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum induced matching solver for permutation and trapezoid models"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("--input", solve_args.input, "Instance file (perm/trap format)")->required();
  solve->add_option("--output", solve_args.output, "Result file, '-' for stdout");
  solve->add_option("--kind", solve_args.kind, "Require the input to be this kind")
      ->check(CLI::IsMember({"perm", "trap"}));
  solve->add_option("--algo", solve_args.algo, "Engine: quadratic or linear (default linear)")
      ->check(CLI::IsMember({"auto", "quadratic", "linear"}));
  solve->add_flag("--verify", solve_args.verify,
                  "Validate the result; cross-check against exhaustive search when small enough");
  auto* cap_opt = solve->add_option("--oracle-cap", solve_args.oracle_cap,
                                    "Edge-count cap for the exhaustive cross-check");
  solve->add_flag("--dump-normalized", solve_args.dump_normalized,
                  "Echo the normalized model before the result");
  solve->callback([&] { solve_args.oracle_cap_given = cap_opt->count() > 0; });

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", gen_args.kind, "Instance kind")->check(CLI::IsMember({"perm", "trap"}));
  gen->add_option("--n", gen_args.n, "Instance size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("--family", gen_args.family,
                  "uniform-random, identity-plus-k-swaps, reversal, separated, nested");
  gen->add_option("--k", gen_args.k, "Swap count for identity-plus-k-swaps (default n/10)");
  gen->add_option("--output", gen_args.output, "Instance file, '-' for stdout");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time solver runs and emit CSV");
  bench->add_option("--kind", bench_args.kind, "Instance kind")
      ->check(CLI::IsMember({"perm", "trap"}));
  bench->add_option("--family", bench_args.family, "Instance family");
  bench->add_option("--algo", bench_args.algo, "quadratic, linear, or both (default both)")
      ->check(CLI::IsMember({"auto", "quadratic", "linear", "both"}));
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated instance sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", bench_args.reps, "Timed repetitions per instance");
  bench->add_option("--seed", bench_args.seed, "Base seed; instance i uses seed+i");
  bench->add_option("--k", bench_args.k, "Swap count for identity-plus-k-swaps (default n/10)");
  bench->add_flag("--verify", bench_args.verify, "Verify results (skipped above n = 4096)");
  auto* bench_cap = bench->add_option("--oracle-cap", bench_args.oracle_cap,
                                      "Edge-count cap for the exhaustive cross-check");
  bench->add_option("--csv", bench_args.csv, "CSV output file, '-' for stdout");
  bench->callback([&] { bench_args.oracle_cap_given = bench_cap->count() > 0; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (gen->parsed()) return run_gen(gen_args);
    return run_bench(bench_args);
  } catch (const mim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
