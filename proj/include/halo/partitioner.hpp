#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "halo/core.hpp"

namespace halo {

/// Evaluation callback in normalized coordinates. Returning std::nullopt asks
/// the caller to stop; anything sampled so far is then discarded.
using PointEvaluator = std::function<std::optional<double>(std::span<const double> unit_point)>;

/// Points to sample inside one partition: a pair x +/- delta*e_p for each
/// longest coordinate p.
struct SamplePlan {
  PartitionId parent = 0;
  double delta = 0.0;
  std::vector<std::size_t> coords;
  std::vector<std::array<Point, 2>> points;
  std::vector<std::array<double, 2>> values;

  std::size_t evaluations() const { return 2 * coords.size(); }
  bool evaluated() const { return values.size() == coords.size(); }
};

/// Coordinate indices in the order the parent box is cut.
using DivisionOrder = std::vector<std::size_t>;

/// Ledger holding only the unit hypercube, with `center_value` at its center.
PartitionLedger root_ledger(std::size_t dimension, double center_value);

/// Evaluates the objective at the center of the unit cube and returns the
/// one-partition ledger.
PartitionLedger init_root(ObjectiveHandle& obj);

/// Coordinates whose half-side attains the maximum (relative tolerance 1e-12).
std::vector<std::size_t> longest_sides(const Partition& part);

/// Geometry of the sample for a partition, without evaluating anything.
SamplePlan plan_sample(const Partition& part);

/// Fills plan.values through `eval`. Returns false (and clears the values)
/// if the evaluator asked to stop before the plan was complete.
bool evaluate_plan(SamplePlan& plan, const PointEvaluator& eval);

/// Plans and evaluates the sample for partition `id`. Throws BudgetExhausted
/// without evaluating anything if the 2|P| evaluations would take the handle's
/// count past stop.max_fun_evals.
SamplePlan sample_partition(const PartitionLedger& ledger, PartitionId id, ObjectiveHandle& obj,
                            const StopRule& stop);

/// Coordinates sorted by the smaller of their two sampled values, ascending.
/// Equal minima keep ascending coordinate order.
DivisionOrder division_order(const SamplePlan& plan);

/// Trisects the parent along each planned coordinate in `order`. At each step
/// the box holding the parent center is cut in three along that coordinate and
/// the two outer thirds become new partitions centered at the sampled points.
///
/// Children start with a copy of the parent's slope row. The returned ids
/// follow plan order: entry 2k is the child at x + delta*e_{coords[k]}, entry
/// 2k+1 the child at x - delta*e_{coords[k]}.
std::vector<PartitionId> divide_partition(PartitionLedger& ledger, const SamplePlan& plan,
                                          const DivisionOrder& order);

}  // namespace halo
