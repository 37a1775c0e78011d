#include "halo/partitioner.hpp"

#include <algorithm>
#include <string>

namespace halo {

PartitionLedger root_ledger(std::size_t dimension, double center_value) {
  PartitionLedger ledger(dimension);
  ledger.add(Point(dimension, 0.5), Point(dimension, 0.5), center_value, Point(dimension, 0.0));
  return ledger;
}

PartitionLedger init_root(ObjectiveHandle& obj) {
  const Point center(obj.dimension(), 0.5);
  return root_ledger(obj.dimension(), obj.evaluate_normalized(center));
}

std::vector<std::size_t> longest_sides(const Partition& part) {
  const double s_max = *std::max_element(part.half_sides.begin(), part.half_sides.end());
  std::vector<std::size_t> coords;
  for (std::size_t n = 0; n < part.half_sides.size(); ++n) {
    if (same_size(part.half_sides[n], s_max)) coords.push_back(n);
  }
  return coords;
}

SamplePlan plan_sample(const Partition& part) {
  SamplePlan plan;
  plan.parent = part.id;
  plan.coords = longest_sides(part);
  const double s_max = *std::max_element(part.half_sides.begin(), part.half_sides.end());
  plan.delta = 2.0 * s_max / 3.0;
  plan.points.reserve(plan.coords.size());
  for (std::size_t p : plan.coords) {
    Point up = part.center;
    Point down = part.center;
    // Clamped only against rounding once boxes reach machine resolution.
    up[p] = std::min(1.0, up[p] + plan.delta);
    down[p] = std::max(0.0, down[p] - plan.delta);
    plan.points.push_back({std::move(up), std::move(down)});
  }
  return plan;
}

bool evaluate_plan(SamplePlan& plan, const PointEvaluator& eval) {
  plan.values.clear();
  plan.values.reserve(plan.coords.size());
  for (const auto& pair : plan.points) {
    std::array<double, 2> v{};
    for (std::size_t j = 0; j < 2; ++j) {
      const auto value = eval(pair[j]);
      if (!value) {
        plan.values.clear();
        return false;
      }
      v[j] = *value;
    }
    plan.values.push_back(v);
  }
  return true;
}

SamplePlan sample_partition(const PartitionLedger& ledger, PartitionId id, ObjectiveHandle& obj,
                            const StopRule& stop) {
  SamplePlan plan = plan_sample(ledger[id]);
  if (obj.eval_count() + plan.evaluations() > stop.max_fun_evals) {
    throw BudgetExhausted("sampling partition " + std::to_string(id) + " needs " +
                          std::to_string(plan.evaluations()) + " evaluations; budget allows " +
                          std::to_string(stop.max_fun_evals - std::min(stop.max_fun_evals, obj.eval_count())));
  }
  evaluate_plan(plan, [&obj](std::span<const double> q) -> std::optional<double> {
    return obj.evaluate_normalized(q);
  });
  return plan;
}

DivisionOrder division_order(const SamplePlan& plan) {
  std::vector<std::size_t> idx(plan.coords.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  auto smaller = [&plan](std::size_t k) { return std::min(plan.values[k][0], plan.values[k][1]); };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return smaller(a) < smaller(b); });
  DivisionOrder order;
  order.reserve(idx.size());
  for (std::size_t k : idx) order.push_back(plan.coords[k]);
  return order;
}

std::vector<PartitionId> divide_partition(PartitionLedger& ledger, const SamplePlan& plan,
                                          const DivisionOrder& order) {
  if (!plan.evaluated()) throw std::logic_error("cannot divide with an unevaluated sample plan");
  if (order.size() != plan.coords.size())
    throw std::invalid_argument("division order does not match the sample plan");

  const PartitionId parent = plan.parent;
  const double new_side = plan.delta / 2.0;
  std::vector<PartitionId> ids(plan.evaluations());

  for (std::size_t p : order) {
    const auto it = std::find(plan.coords.begin(), plan.coords.end(), p);
    if (it == plan.coords.end()) throw std::invalid_argument("division order names an unplanned coordinate");
    const auto k = static_cast<std::size_t>(it - plan.coords.begin());

    ledger.set_half_side(parent, p, new_side);
    const Partition& cut = ledger[parent];
    const Point sides = cut.half_sides;
    const Point slopes = cut.slopes;
    for (std::size_t j = 0; j < 2; ++j) {
      ids[2 * k + j] = ledger.add(plan.points[k][j], sides, plan.values[k][j], slopes);
    }
  }
  return ids;
}

}  // namespace halo
