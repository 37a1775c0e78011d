#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halo/core.hpp"
#include "halo/local_search.hpp"
#include "halo/selector.hpp"

namespace halo {

enum class Variant { kHalo, kHlo, kDirect };

const char* to_string(Variant v);
Variant parse_variant(const std::string& name);

struct SolverConfig {
  Variant variant = Variant::kHalo;
  double beta = 1e-4;
  double exclusion_radius = 1e-4;
  StopRule stop;
  bool local_search = true;
  double direct_epsilon_rel = 1e-4;
  LargestBoxRule largest_box_rule = LargestBoxRule::kLowestBound;
  /// Empty means the built-in coordinate descent.
  LocalOptimizer local_optimizer;

  void validate() const;
};

enum class RunStatus { kRunning, kSolved, kBudgetExhausted, kIterLimit };

const char* to_string(RunStatus s);

enum class EvalSource { kSample, kLocalSearch };

struct EvalRecord {
  std::size_t index = 0;  // 1-based
  Point point;            // problem units
  double value = 0.0;
  double best = 0.0;
  EvalSource source = EvalSource::kSample;
};

struct IterationRecord {
  std::size_t iteration = 0;
  std::vector<PartitionId> selected;
  std::size_t partitions = 0;
  double global_constant = 0.0;
};

struct LocalSearchRecord {
  std::size_t iteration = 0;
  PartitionId start_id = 0;
  Point start;  // normalized
  std::size_t evaluations = 0;
  double value = 0.0;
  bool converged = false;
};

struct RunTrace {
  std::vector<EvalRecord> evals;
  std::vector<IterationRecord> iterations;
  std::vector<LocalSearchRecord> local_searches;
  RunStatus status = RunStatus::kRunning;
  /// 1-based index of the evaluation that met the tolerance, if any.
  std::optional<std::size_t> solved_at;
  Point best_point;
  double best_value = 0.0;
  /// Final partition; absent only if the root evaluation failed.
  std::optional<PartitionLedger> ledger;

  std::size_t evaluations() const { return evals.size(); }
};

/// Evaluator failure during a run. Carries everything recorded up to the failure.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(const std::string& what, RunTrace trace) : std::runtime_error(what), trace_(std::move(trace)) {}
  const RunTrace& trace() const { return trace_; }

 private:
  RunTrace trace_;
};

/// Relative error to a known optimum, falling back to the absolute error
/// when |f_glob| < 1e-12.
double optimum_error(double f_best, double f_glob);

/// kSolved if a known optimum exists and is met within stop.rel_error_tol;
/// else kBudgetExhausted if `evaluations` reached the cap; else kRunning.
RunStatus check_stop(double f_best, std::size_t evaluations, const std::optional<double>& f_glob,
                     const StopRule& stop);

RunStatus check_stop(const RunTrace& trace, const ObjectiveHandle& obj, const StopRule& stop);

/// Runs one optimization. Deterministic: identical objective and config give
/// identical traces. Stopping is checked after every evaluation; a partially
/// evaluated sample is then abandoned so the partition still tiles the cube.
RunTrace run(ObjectiveHandle& obj, const SolverConfig& cfg);

}  // namespace halo
