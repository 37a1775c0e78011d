#include "halo/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace halo {

ExclusionRegistry::ExclusionRegistry(double radius, double beta) : radius_(radius), beta_(beta) {
  if (!(radius > 0.0)) throw std::invalid_argument("exclusion radius must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
}

bool ExclusionRegistry::contains(PartitionId id) const {
  return std::find(members_.begin(), members_.end(), id) != members_.end();
}

void ExclusionRegistry::add(PartitionId id) {
  if (!contains(id)) members_.push_back(id);
}

const char* to_string(GateDecision d) {
  switch (d) {
    case GateDecision::kRun:
      return "run";
    case GateDecision::kSelectForDivision:
      return "select_for_division";
    case GateDecision::kSkipDivisionOnly:
      return "skip_division_only";
  }
  return "unknown";
}

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += (a[n] - b[n]) * (a[n] - b[n]);
  return std::sqrt(s);
}

}  // namespace

GateDecision gate_local_search(PartitionId candidate, const PartitionLedger& ledger, ExclusionRegistry& registry) {
  if (ledger.half_diagonal(candidate) > registry.beta()) return GateDecision::kSelectForDivision;

  const Point& x = ledger[candidate].center;
  const bool near_previous = std::any_of(registry.members().begin(), registry.members().end(), [&](PartitionId j) {
    return distance(x, ledger[j].center) <= registry.radius();
  });
  if (near_previous) {
    registry.add(candidate);
    return GateDecision::kSkipDivisionOnly;
  }

  registry.add(candidate);
  for (const Partition& p : ledger) {
    if (p.id != candidate && distance(x, p.center) <= registry.radius()) registry.add(p.id);
  }
  return GateDecision::kRun;
}

LocalResult coordinate_descent(const PointEvaluator& eval, Point x0, double start_value,
                               const LocalSearchOptions& opts) {
  LocalResult res{std::move(x0), start_value, 0, false};
  const std::size_t dim = res.point.size();
  std::vector<double> steps(dim, std::min(1.0, opts.initial_step));

  while (true) {
    if (*std::max_element(steps.begin(), steps.end()) < opts.tol) {
      res.converged = true;
      return res;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      bool accepted = false;
      for (double dir : {1.0, -1.0}) {
        Point trial = res.point;
        trial[i] = std::clamp(res.point[i] + dir * steps[i], 0.0, 1.0);
        const double moved = std::abs(trial[i] - res.point[i]);
        if (moved == 0.0) continue;
        if (res.evaluations >= opts.budget) return res;
        const auto value = eval(trial);
        if (!value) return res;
        ++res.evaluations;
        if (*value < res.value - opts.armijo * moved * moved) {
          res.point = std::move(trial);
          res.value = *value;
          accepted = true;
          break;
        }
      }
      steps[i] = accepted ? std::min(1.0, 2.0 * steps[i]) : 0.5 * steps[i];
    }
  }
}

LocalResult coordinate_descent_minimize(ObjectiveHandle& obj, std::span<const double> x0, std::size_t budget,
                                        double tol, double initial_step) {
  if (budget == 0) throw std::invalid_argument("local search needs a budget of at least one evaluation");
  Point start(x0.begin(), x0.end());
  for (double v : start) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("local search start lies outside [0,1]^N");
  }
  const double f0 = obj.evaluate_normalized(start);
  const PointEvaluator eval = [&obj](std::span<const double> q) -> std::optional<double> {
    return obj.evaluate_normalized(q);
  };
  LocalResult res = coordinate_descent(eval, std::move(start), f0,
                                       {.budget = budget - 1, .tol = tol, .initial_step = initial_step});
  res.evaluations += 1;
  return res;
}

}  // namespace halo
