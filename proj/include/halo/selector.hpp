#pragma once

#include <span>
#include <vector>

#include "halo/core.hpp"

namespace halo {

/// Why a partition was chosen. A partition may satisfy several criteria.
struct SelectionReason {
  bool lowest_bound = false;        // smallest lower bound overall
  bool min_value = false;           // smallest center value
  bool largest_best_bound = false;  // best lower bound among the largest boxes

  /// Only the first two criteria may start a local search.
  bool local_search_candidate() const { return lowest_bound || min_value; }
};

/// Deduplicated ids in processing order, with the reasons for each.
struct SelectionOutcome {
  std::vector<PartitionId> chosen;
  std::vector<SelectionReason> reasons;

  bool contains(PartitionId id) const;
};

/// How the largest-box criterion picks among boxes of maximal half-diagonal.
enum class LargestBoxRule {
  kLowestBound,     // minimum lower bound within the largest boxes
  kLowestConstant,  // minimum Lipschitz estimate within the largest boxes
};

/// Picks the partition with the lowest lower bound, the one with the lowest
/// value, and the largest box with the lowest lower bound (or lowest constant,
/// per `rule`). Ties go to the lowest id. `constants[i]` is the Lipschitz
/// estimate of partition i.
SelectionOutcome select_halo(const PartitionLedger& ledger, std::span<const double> constants,
                             LargestBoxRule rule = LargestBoxRule::kLowestBound);

/// select_halo with every partition sharing the same constant.
SelectionOutcome select_hlo(const PartitionLedger& ledger, double global_constant,
                            LargestBoxRule rule = LargestBoxRule::kLowestBound);

/// Absolute epsilon used by the potentially-optimal test: epsilon_rel*|f_min|,
/// or 1e-8 when f_min is exactly zero and epsilon_rel is positive.
double direct_epsilon(double f_min, double epsilon_rel);

/// Indices i for which some rate K > 0 makes sizes/values point i a minimizer
/// of value - K*size over all points and also satisfies
/// value_i - K*size_i <= f_min - epsilon_abs. Built from the lower convex hull
/// of the per-size minima. Result is sorted ascending.
std::vector<std::size_t> potentially_optimal(std::span<const double> sizes, std::span<const double> values,
                                             double epsilon_abs);

/// DIRECT's potentially optimal hyperrectangles over (half-diagonal, value).
std::vector<PartitionId> select_potentially_optimal(const PartitionLedger& ledger, double epsilon_rel);

}  // namespace halo
