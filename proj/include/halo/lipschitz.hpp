#pragma once

#include <span>
#include <vector>

#include "halo/core.hpp"
#include "halo/partitioner.hpp"

namespace halo {

/// One entry written into the slope matrix.
struct SlopeUpdate {
  PartitionId partition = 0;
  std::size_t coord = 0;
  double slope = 0.0;
};

/// Refreshes slope rows after a division.
///
/// For each divided coordinate p the parent gets the central difference
/// |f(x+) - f(x-)| / (2 delta); the child born at x +/- delta*e_p keeps its
/// inherited row except coordinate p, which becomes the one-sided difference
/// |f(child) - f(parent)| / delta. Other coordinates are left untouched.
/// `child_ids` must be in the order returned by divide_partition.
std::vector<SlopeUpdate> update_slopes_on_division(PartitionLedger& ledger, PartitionId parent_id,
                                                   const SamplePlan& plan,
                                                   std::span<const PartitionId> child_ids);

/// Largest slope-row norm over every partition in the ledger.
double global_slope_max(const PartitionLedger& ledger);

/// Weight on the global estimate: full diagonal of the box over sqrt(N).
/// Equals 1 for the whole unit cube.
double size_weight(const Partition& part);

/// alpha * global + (1 - alpha) * local.
double blend(double alpha, double global_constant, double local_norm);

/// Local Lipschitz estimate of a partition from its slope row and the
/// ledger-wide maximum slope norm.
double blend_local_constant(const Partition& part, double global_constant);

/// value - constant * half_diagonal.
double lower_bound(const Partition& part, double local_constant);

/// Blended estimates for every partition, indexed by id.
std::vector<double> local_constants(const PartitionLedger& ledger);

}  // namespace halo
