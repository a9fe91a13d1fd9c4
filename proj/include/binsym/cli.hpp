// Copyright 2026 The binsym authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINSYM_CLI_HPP_
#define BINSYM_CLI_HPP_

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "binsym/automorphism.hpp"
#include "binsym/errors.hpp"
#include "binsym/format.hpp"
#include "binsym/heuristics.hpp"
#include "binsym/lift.hpp"
#include "binsym/problem.hpp"
#include "binsym/solver.hpp"
#include "binsym/symmetry.hpp"

namespace binsym {

// Exit codes, stable across subcommands: 0 success, 2 input error,
// 3 resource limit reached.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceLimit = 3;

namespace cli_detail {

inline constexpr size_t kOrderClosureCap = 100'000;

inline std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

inline std::string display_name(const BinaryProblem& problem) {
  return problem.name.empty() ? "the problem" : problem.name;
}

inline std::string mode_text(SymmetryMode mode, bool is_signed) {
  std::string out = mode == SymmetryMode::kConstraintOnly
                        ? "constraint symmetries"
                        : "full symmetries";
  out += is_signed ? ", signed" : ", unsigned";
  return out;
}

inline void print_header(std::ostream& out, const BinaryProblem& problem) {
  out << "problem: " << display_name(problem) << "  (" << problem.n
      << " variables, " << problem.m() << " rows)\n";
}

// Column permutations of a generator list, deduplicated, identity dropped.
inline std::vector<SignedPermutation> column_generators(
    const std::vector<SymmetryPair>& pairs) {
  std::vector<SignedPermutation> cols;
  for (const SymmetryPair& pair : pairs) {
    if (pair.cols.is_identity()) continue;
    if (std::find(cols.begin(), cols.end(), pair.cols) == cols.end())
      cols.push_back(pair.cols);
  }
  return cols;
}

struct DetectOptions {
  std::string problem_path;
  bool constraint_only = false;
  bool signed_mode = false;
  bool json = false;
  long long budget = kDefaultNodeBudget;
};

inline int cmd_detect(const DetectOptions& options, std::ostream& out,
                      std::ostream& err) {
  const BinaryProblem problem =
      parse_problem(read_file(options.problem_path));
  const SymmetryMode mode = options.constraint_only
                                ? SymmetryMode::kConstraintOnly
                                : SymmetryMode::kFull;
  std::vector<SignedPermutation> generators;
  bool complete = true;
  if (options.signed_mode) {
    const SignedDetectionResult result =
        detect_signed(problem, mode, options.budget);
    generators = column_generators(result.generators);
    complete = result.complete;
  } else {
    const UnsignedDetectionResult result =
        detect_unsigned(problem, mode, options.budget);
    generators = column_generators(result.generators);
    complete = result.complete;
  }

  std::optional<size_t> order;
  {
    const ClosureResult group =
        closure(generators, kOrderClosureCap, problem.n);
    if (!group.overflow) order = group.elements.size();
  }

  if (options.json) {
    nlohmann::ordered_json document;
    document["problem"] = problem.name;
    document["variables"] = problem.n;
    document["mode"] = options.constraint_only ? "constraint-only" : "full";
    document["signed"] = options.signed_mode;
    document["complete"] = complete;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const SignedPermutation& generator : generators)
      gens.push_back(format_cycles(generator));
    document["generators"] = std::move(gens);
    if (order)
      document["group_order"] = *order;
    else
      document["group_order_at_least"] = kOrderClosureCap;
    nlohmann::ordered_json orbit_list = nlohmann::ordered_json::array();
    if (options.signed_mode) {
      for (const auto& members :
           signed_orbits(generators, problem.n).classes) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        for (const Literal& literal : members)
          entry.push_back((literal.complemented ? "~" : "") +
                          problem.variable_name(literal.var));
        orbit_list.push_back(std::move(entry));
      }
    } else {
      for (const auto& members : orbits(generators, problem.n).classes) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        for (int j : members) entry.push_back(problem.variable_name(j));
        orbit_list.push_back(std::move(entry));
      }
    }
    document["orbits"] = std::move(orbit_list);
    out << document.dump(2) << "\n";
  } else {
    print_header(out, problem);
    out << "mode: " << mode_text(mode, options.signed_mode) << "\n";
    out << "generators (" << generators.size() << "):\n";
    for (const SignedPermutation& generator : generators)
      out << "  " << format_cycles(generator) << "\n";
    if (order)
      out << "group order: " << *order << "\n";
    else
      out << "group order: >= " << kOrderClosureCap
          << " (closure cap reached)\n";
    if (order && *order == 1) out << "group is trivial\n";
    if (options.signed_mode) {
      const SignedOrbitPartition partition =
          signed_orbits(generators, problem.n);
      out << "signed orbits (" << partition.classes.size() << "):\n";
      for (const auto& members : partition.classes)
        out << "  " << format_signed_orbit(problem, members) << "\n";
    } else {
      const OrbitPartition partition = orbits(generators, problem.n);
      out << "orbits (" << partition.classes.size() << "):\n";
      for (const auto& members : partition.classes)
        out << "  " << format_orbit(problem, members) << "\n";
    }
    if (!complete)
      out << "note: node budget exceeded, generator list is incomplete\n";
  }
  if (!complete) {
    err << "detection incomplete: node budget exceeded\n";
    return kExitResourceLimit;
  }
  return kExitOk;
}

struct ImproveOptions {
  std::string problem_path;
  std::string solution_path;
  bool signed_mode = false;
  bool json = false;
  int rounds = 100;
  int pool = 10;
  unsigned seed = 0;
  long long budget = kDefaultNodeBudget;
};

inline int cmd_improve(const ImproveOptions& options, std::ostream& out,
                       std::ostream& err) {
  const BinaryProblem problem =
      parse_problem(read_file(options.problem_path));
  const BitVector bits =
      parse_solution(read_file(options.solution_path), problem.n);
  const Solution seed = evaluate(problem, bits);
  if (!seed.feasible) {
    err << "input solution is infeasible\n";
    return kExitInputError;
  }

  std::vector<SignedPermutation> generators;
  bool complete = true;
  if (options.signed_mode) {
    const SignedDetectionResult detected = detect_signed(
        problem, SymmetryMode::kConstraintOnly, options.budget);
    generators = column_generators(detected.generators);
    complete = detected.complete;
  } else {
    const UnsignedDetectionResult detected = detect_unsigned(
        problem, SymmetryMode::kConstraintOnly, options.budget);
    generators = column_generators(detected.generators);
    complete = detected.complete;
  }

  HeurConfig config;
  config.rounds = options.rounds;
  config.pool_capacity = options.pool;
  config.seed = options.seed;
  const ImproveResult result =
      direct_improve(problem, {seed}, generators, config);

  if (options.json) {
    nlohmann::ordered_json document;
    document["problem"] = problem.name;
    document["seed"] = {{"solution", format_solution(seed.values)},
                        {"objective", rational_to_string(seed.objective)}};
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const TraceStep& step : result.trace.steps)
      steps.push_back(
          {{"symmetry", format_cycles(step.symmetry)},
           {"source_objective", rational_to_string(step.source_objective)},
           {"objective", rational_to_string(step.new_objective)},
           {"solution", format_solution(step.solution)}});
    document["steps"] = std::move(steps);
    document["final"] = {
        {"solution", format_solution(result.best.values)},
        {"objective", rational_to_string(result.best.objective)}};
    document["rounds"] = result.rounds_used;
    document["complete"] = complete;
    out << document.dump(2) << "\n";
  } else {
    print_header(out, problem);
    out << "generators: " << generators.size() << "\n";
    const int width =
        std::max(8, problem.n) + 2;  // solution column width
    out << "  nr  " << std::setw(-1) << "";
    out << std::left << std::setw(width) << "solution" << std::setw(11)
        << "objective"
        << "symmetry\n";
    out << "   0  " << std::left << std::setw(width)
        << format_solution(seed.values) << std::setw(11)
        << rational_to_string(seed.objective) << "(seed)\n";
    int step_number = 0;
    for (const TraceStep& step : result.trace.steps) {
      out << std::right << std::setw(4) << ++step_number << "  " << std::left
          << std::setw(width) << format_solution(step.solution)
          << std::setw(11) << rational_to_string(step.new_objective)
          << format_cycles(step.symmetry) << "\n";
    }
    out << "final: " << format_solution(result.best.values) << "  objective "
        << rational_to_string(result.best.objective) << "\n";
    if (result.trace.steps.empty())
      out << "no improvement found; the orbitmip subcommand searches a "
             "wider neighborhood\n";
  }
  if (!complete) {
    err << "detection incomplete: node budget exceeded\n";
    return kExitResourceLimit;
  }
  return kExitOk;
}

struct OrbitMipOptions {
  std::string problem_path;
  std::string solution_path;
  bool signed_mode = false;
  long long nodes = 10'000'000;
  long long budget = kDefaultNodeBudget;
};

inline int cmd_orbitmip(const OrbitMipOptions& options, std::ostream& out,
                        std::ostream& err) {
  const BinaryProblem problem =
      parse_problem(read_file(options.problem_path));
  const BitVector bits =
      parse_solution(read_file(options.solution_path), problem.n);
  const Solution reference = evaluate(problem, bits);
  if (!reference.feasible) {
    err << "input solution is infeasible\n";
    return kExitInputError;
  }

  std::vector<SignedPermutation> generators;
  bool complete = true;
  BinaryProblem restricted;
  if (options.signed_mode) {
    const SignedDetectionResult detected = detect_signed(
        problem, SymmetryMode::kConstraintOnly, options.budget);
    generators = column_generators(detected.generators);
    complete = detected.complete;
  } else {
    const UnsignedDetectionResult detected = detect_unsigned(
        problem, SymmetryMode::kConstraintOnly, options.budget);
    generators = column_generators(detected.generators);
    complete = detected.complete;
  }

  print_header(out, problem);
  out << "reference: " << format_solution(reference.values) << "  objective "
      << rational_to_string(reference.objective) << "\n";

  SolveLimits limits;
  limits.node_cap = options.nodes;
  OrbitMipResult result;
  if (options.signed_mode) {
    const SignedOrbitPartition partition =
        signed_orbits(generators, problem.n);
    restricted = build_orbit_subproblem(problem, reference, partition);
    // Self-mirrored classes are constant on both sides and add no row.
    for (const auto& members : partition.classes) {
      const bool self_mirrored =
          std::find(members.begin(), members.end(),
                    complement(members.front())) != members.end();
      if (self_mirrored)
        out << "skipped constant class "
            << format_signed_orbit(problem, members) << "\n";
    }
    result = orbit_mip(problem, reference, partition, limits);
  } else {
    const OrbitPartition partition = orbits(generators, problem.n);
    restricted = build_orbit_subproblem(problem, reference, partition);
    result = orbit_mip(problem, reference, partition, limits);
  }

  out << "orbit rows (" << restricted.m() - problem.m() << "):\n";
  for (int r = problem.m(); r < restricted.m(); ++r) {
    const Constraint& row = restricted.rows[r];
    out << "  " << detail::expression_text(restricted, row.terms, Rat(0))
        << " = " << rational_to_string(row.rhs) << "\n";
  }
  out << "status: "
      << (result.status == SolveStatus::kOptimal
              ? "optimal"
              : result.status == SolveStatus::kInfeasible ? "infeasible"
                                                          : "limit reached")
      << "\n";
  out << "solution: " << format_solution(result.best.values) << "  objective "
      << rational_to_string(result.best.objective) << "\n";
  out << "nodes: " << result.nodes << "\n";

  if (result.status == SolveStatus::kLimitReached || !complete) {
    err << (complete ? "solver node limit reached\n"
                     : "detection incomplete: node budget exceeded\n");
    return kExitResourceLimit;
  }
  return kExitOk;
}

inline int cmd_lift(const std::string& problem_path, std::ostream& out) {
  const BinaryProblem problem = parse_problem(read_file(problem_path));
  const LiftedProblem lifted = lift(split_equalities(problem));
  out << print_problem(lifted.problem);
  return kExitOk;
}

struct CheckOptions {
  std::string problem_path;
  std::string cycles;
  bool constraint_only = false;
};

inline int cmd_check(const CheckOptions& options, std::ostream& out) {
  const BinaryProblem problem =
      parse_problem(read_file(options.problem_path));
  const SignedPermutation perm = parse_cycles(options.cycles, problem.n);
  const SymmetryMode mode = options.constraint_only
                                ? SymmetryMode::kConstraintOnly
                                : SymmetryMode::kFull;
  const std::optional<RowPermutation> witness =
      check_symmetry(problem, perm, mode);
  const std::string kind = options.constraint_only
                               ? "a constraint symmetry"
                               : "a symmetry";
  if (witness) {
    out << format_cycles(perm) << " is " << kind << " of "
        << display_name(problem) << "\n";
    out << "row witness: " << format_row_cycles(*witness) << "\n";
  } else {
    out << format_cycles(perm) << " is not " << kind << " of "
        << display_name(problem) << "\n";
  }
  return kExitOk;
}

struct SolveOptions {
  std::string problem_path;
  long long nodes = 10'000'000;
  double time_limit = 0;
};

inline int cmd_solve(const SolveOptions& options, std::ostream& out,
                     std::ostream& err) {
  const BinaryProblem problem =
      parse_problem(read_file(options.problem_path));
  SolveLimits limits;
  limits.node_cap = options.nodes;
  limits.time_limit_seconds = options.time_limit;
  const SolveResult result = solve(problem, {}, limits);
  print_header(out, problem);
  out << "status: "
      << (result.status == SolveStatus::kOptimal
              ? "optimal"
              : result.status == SolveStatus::kInfeasible ? "infeasible"
                                                          : "limit reached")
      << "\n";
  if (result.best) {
    out << "objective: " << rational_to_string(result.best->objective)
        << "\n";
    out << "solution: " << format_solution(result.best->values) << "\n";
  }
  out << "nodes: " << result.nodes << "\n";
  if (result.status == SolveStatus::kLimitReached) {
    err << "solver node limit reached\n";
    return kExitResourceLimit;
  }
  return kExitOk;
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests.  `args` excludes the
// program name.  Reports go to `out`, diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{
      "binsym - detect and exploit symmetries of pure binary linear "
      "programs"};
  app.require_subcommand(1);

  cli_detail::DetectOptions detect_options;
  CLI::App* detect = app.add_subcommand(
      "detect", "detect symmetries and print generators and orbits");
  detect->add_option("problem", detect_options.problem_path,
                     "problem file (text or JSON)")
      ->required();
  detect->add_flag("--constraint-only", detect_options.constraint_only,
                   "ignore the objective (constraint symmetries)");
  detect->add_flag("--signed", detect_options.signed_mode,
                   "detect signed (complement) symmetries");
  detect->add_flag("--json", detect_options.json, "machine-readable output");
  detect->add_option("--budget", detect_options.budget,
                     "search node budget");

  cli_detail::ImproveOptions improve_options;
  CLI::App* improve = app.add_subcommand(
      "improve", "improve a feasible solution with detected symmetries");
  improve->add_option("problem", improve_options.problem_path,
                      "problem file (text or JSON)")
      ->required();
  improve->add_option("solution", improve_options.solution_path,
                      "solution file (a line of 0/1 characters)")
      ->required();
  improve->add_flag("--signed", improve_options.signed_mode,
                    "use signed (complement) symmetries");
  improve->add_flag("--json", improve_options.json,
                    "machine-readable output");
  improve->add_option("--rounds", improve_options.rounds,
                      "maximum improvement rounds");
  improve->add_option("--pool", improve_options.pool,
                      "solution pool capacity");
  improve->add_option("--seed", improve_options.seed,
                      "seed for randomized behavior (none today)");
  improve->add_option("--budget", improve_options.budget,
                      "detection node budget");

  cli_detail::OrbitMipOptions orbitmip_options;
  CLI::App* orbitmip = app.add_subcommand(
      "orbitmip",
      "re-solve with per-orbit sums fixed at a reference solution");
  orbitmip->add_option("problem", orbitmip_options.problem_path,
                       "problem file (text or JSON)")
      ->required();
  orbitmip->add_option("solution", orbitmip_options.solution_path,
                       "reference solution file")
      ->required();
  orbitmip->add_flag("--signed", orbitmip_options.signed_mode,
                     "use the signed orbit partition");
  orbitmip->add_option("--nodes", orbitmip_options.nodes,
                       "solver node cap");
  orbitmip->add_option("--budget", orbitmip_options.budget,
                       "detection node budget");

  std::string lift_path;
  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "print the doubled problem used for signed detection");
  lift_cmd->add_option("problem", lift_path, "problem file (text or JSON)")
      ->required();

  cli_detail::CheckOptions check_options;
  CLI::App* check = app.add_subcommand(
      "check", "check whether a permutation is a symmetry");
  check->add_option("problem", check_options.problem_path,
                    "problem file (text or JSON)")
      ->required();
  check->add_option("cycles", check_options.cycles,
                    "permutation in cycle notation, e.g. \"(1 -2 3)(4 5)\"; "
                    "a negative index maps to the complement, \"(-2)\" "
                    "complements x2 in place")
      ->required();
  check->add_flag("--constraint-only", check_options.constraint_only,
                  "ignore the objective");

  cli_detail::SolveOptions solve_options;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve the problem exactly");
  solve_cmd->add_option("problem", solve_options.problem_path,
                        "problem file (text or JSON)")
      ->required();
  solve_cmd->add_option("--nodes", solve_options.nodes, "solver node cap");
  solve_cmd->add_option("--time", solve_options.time_limit,
                        "time limit in seconds");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("binsym");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (detect->parsed())
      return cli_detail::cmd_detect(detect_options, out, err);
    if (improve->parsed())
      return cli_detail::cmd_improve(improve_options, out, err);
    if (orbitmip->parsed())
      return cli_detail::cmd_orbitmip(orbitmip_options, out, err);
    if (lift_cmd->parsed()) return cli_detail::cmd_lift(lift_path, out);
    if (check->parsed()) return cli_detail::cmd_check(check_options, out);
    if (solve_cmd->parsed())
      return cli_detail::cmd_solve(solve_options, out, err);
  } catch (const BudgetError& error) {
    err << "error: " << error.what() << "\n";
    return kExitResourceLimit;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace binsym

#endif  // BINSYM_CLI_HPP_
