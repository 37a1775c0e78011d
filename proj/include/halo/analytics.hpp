#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "halo/core.hpp"
#include "halo/solver.hpp"
#include "halo/testbed.hpp"

namespace halo {

/// One problem run inside a benchmark.
struct RunRecord {
  std::string problem;
  std::string family;
  std::size_t dimension = 0;
  std::string variant;
  bool solved = false;
  std::size_t fevals = 0;  // evaluation that solved it, or total evaluations
  double best_f = 0.0;
  double f_glob = 0.0;
  double rel_err = 0.0;
  std::string status;
  std::string error;  // nonempty when the run threw
  std::vector<double> importance;
  std::size_t local_searches = 0;
  std::size_t total_evals = 0;
};

/// Right-continuous step function: value[i] holds on [gamma[i], gamma[i+1]).
/// Before gamma[0] the curve is 0.
struct StepCurve {
  std::vector<double> gamma;
  std::vector<double> value;
};

/// c(g) = #(solved and fevals <= g) / #records, sampled at each grid point.
/// Needs nonempty records and an ascending grid.
StepCurve operational_characteristic(const std::vector<RunRecord>& records, const std::vector<double>& grid);

/// Reporting grid: sorted distinct solve counts at or below gamma_max, then gamma_max.
std::vector<double> oc_grid(const std::vector<RunRecord>& records, double gamma_max);

/// (1/gamma_max) * integral of the curve over [0, gamma_max], exact.
double auoc(const StepCurve& curve, double gamma_max);

/// Mean slope row over the ledger, normalized to sum 1; uniform if all zero.
/// With `domain`, slopes are first rescaled to problem units.
std::vector<double> variable_importance(const PartitionLedger& ledger, const BoxDomain* domain = nullptr);

struct BenchmarkReport {
  std::vector<RunRecord> rows;
  double percent_solved = 0.0;
  std::optional<double> average_evals;  // over solved runs only
  double auoc = 0.0;
  double gamma_max = 0.0;

  std::string variant;
  std::size_t budget = 0;
  double rel_error_tol = 0.0;
  double beta = 0.0;
  bool local_search = true;
  std::size_t jobs = 1;
  std::string started_at;  // UTC, ISO 8601
  std::string finished_at;
};

/// Runs one problem, catching evaluator failures into the record.
RunRecord run_problem(const TestProblem& problem, const SolverConfig& cfg);

/// Fills the aggregates from `report.rows`; independent of row order.
void aggregate(BenchmarkReport& report);

/// Runs every problem with up to `jobs` threads. Rows keep manifest order.
/// Throws std::invalid_argument("empty manifest") on an empty manifest.
BenchmarkReport run_benchmark(const std::vector<TestProblem>& manifest, const SolverConfig& cfg, std::size_t jobs = 1);

}  // namespace halo
