#include "halo/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halo {

std::vector<SlopeUpdate> update_slopes_on_division(PartitionLedger& ledger, PartitionId parent_id,
                                                   const SamplePlan& plan,
                                                   std::span<const PartitionId> child_ids) {
  if (!plan.evaluated()) throw std::logic_error("slope update needs an evaluated plan");
  if (child_ids.size() != plan.evaluations())
    throw std::invalid_argument("child id list does not match the sample plan");
  // Sides that have underflowed to zero carry no slope information.
  if (!(plan.delta > 0.0)) return {};

  const double center_value = ledger[parent_id].value;
  std::vector<SlopeUpdate> updates;
  updates.reserve(3 * plan.coords.size());

  for (std::size_t k = 0; k < plan.coords.size(); ++k) {
    const std::size_t p = plan.coords[k];
    const auto& v = plan.values[k];
    const double central = std::abs(v[0] - v[1]) / (2.0 * plan.delta);
    ledger.set_slope(parent_id, p, central);
    updates.push_back({parent_id, p, central});
    for (std::size_t j = 0; j < 2; ++j) {
      const double forward = std::abs(v[j] - center_value) / plan.delta;
      ledger.set_slope(child_ids[2 * k + j], p, forward);
      updates.push_back({child_ids[2 * k + j], p, forward});
    }
  }
  return updates;
}

double global_slope_max(const PartitionLedger& ledger) {
  double best = 0.0;
  for (PartitionId id = 0; id < ledger.size(); ++id) best = std::max(best, ledger.slope_norm(id));
  return best;
}

double size_weight(const Partition& part) {
  return 2.0 * half_diagonal(part) / std::sqrt(static_cast<double>(part.half_sides.size()));
}

double blend(double alpha, double global_constant, double local_norm) {
  if (alpha >= 1.0) return global_constant;
  // Rounding in the weighted sum can step one ulp past either end.
  const double mixed = local_norm + alpha * (global_constant - local_norm);
  return std::clamp(mixed, std::min(global_constant, local_norm), std::max(global_constant, local_norm));
}

namespace {

double row_norm(const Point& slopes) {
  double s = 0.0;
  for (double g : slopes) s += g * g;
  return std::sqrt(s);
}

}  // namespace

double blend_local_constant(const Partition& part, double global_constant) {
  return blend(size_weight(part), global_constant, row_norm(part.slopes));
}

double lower_bound(const Partition& part, double local_constant) {
  return part.value - local_constant * half_diagonal(part);
}

std::vector<double> local_constants(const PartitionLedger& ledger) {
  const double global = global_slope_max(ledger);
  const double root_diag = std::sqrt(static_cast<double>(ledger.dimension()));
  std::vector<double> out(ledger.size());
  for (PartitionId id = 0; id < ledger.size(); ++id) {
    const double alpha = 2.0 * ledger.half_diagonal(id) / root_diag;
    out[id] = blend(alpha, global, ledger.slope_norm(id));
  }
  return out;
}

}  // namespace halo
