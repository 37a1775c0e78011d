#pragma once

#include <functional>
#include <span>
#include <vector>

#include "halo/core.hpp"
#include "halo/partitioner.hpp"

namespace halo {

/// Partitions near which a local search has already started (or been
/// refused), with the exclusion radius and the size threshold beta, both in
/// normalized units.
class ExclusionRegistry {
 public:
  explicit ExclusionRegistry(double radius = 1e-4, double beta = 1e-4);

  double radius() const { return radius_; }
  double beta() const { return beta_; }
  const std::vector<PartitionId>& members() const { return members_; }

  bool contains(PartitionId id) const;
  void add(PartitionId id);

 private:
  double radius_;
  double beta_;
  std::vector<PartitionId> members_;
};

enum class GateDecision {
  kRun,                // start a local search from the center; the box is not divided
  kSelectForDivision,  // box too large for local search; divide it as usual
  kSkipDivisionOnly,   // too close to an earlier start; neither search nor divide
};

const char* to_string(GateDecision d);

/// Decides what to do with a partition picked by the lowest-bound or
/// lowest-value criterion, updating the registry:
///  - half-diagonal > beta: divide.
///  - no registry member within `radius` of the center: run, and register the
///    candidate plus every ledger center within `radius` of it.
///  - otherwise: skip, and register the candidate.
GateDecision gate_local_search(PartitionId candidate, const PartitionLedger& ledger, ExclusionRegistry& registry);

struct LocalResult {
  Point point;  // normalized
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct LocalSearchOptions {
  std::size_t budget = 0;
  double tol = 1e-8;
  double initial_step = 1e-3;
  double armijo = 1e-6;
};

/// Derivative-free bound-constrained coordinate descent on [0,1]^N.
///
/// Cycles over coordinates trying x + a_i*e_i, then x - a_i*e_i (projected on
/// the box); a trial is accepted when f drops by more than armijo*step^2.
/// Acceptance doubles a_i for the next sweep, two rejections halve it. Stops
/// once every a_i < tol (converged) or when `budget` evaluations are spent or
/// the evaluator asks to stop (not converged). `start_value` is f(x0) and is
/// not re-evaluated.
LocalResult coordinate_descent(const PointEvaluator& eval, Point x0, double start_value,
                               const LocalSearchOptions& opts);

/// Convenience overload that evaluates x0 through the handle; that evaluation
/// counts against `budget`.
LocalResult coordinate_descent_minimize(ObjectiveHandle& obj, std::span<const double> x0, std::size_t budget,
                                        double tol = 1e-8, double initial_step = 1e-3);

/// Pluggable local optimizer used by the solver.
using LocalOptimizer =
    std::function<LocalResult(const PointEvaluator&, Point x0, double start_value, const LocalSearchOptions&)>;

}  // namespace halo
