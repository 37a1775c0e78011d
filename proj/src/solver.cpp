#include "halo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "halo/lipschitz.hpp"
#include "halo/partitioner.hpp"

namespace halo {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::kHalo:
      return "halo";
    case Variant::kHlo:
      return "hlo";
    case Variant::kDirect:
      return "direct";
  }
  return "unknown";
}

Variant parse_variant(const std::string& name) {
  if (name == "halo") return Variant::kHalo;
  if (name == "hlo") return Variant::kHlo;
  if (name == "direct") return Variant::kDirect;
  throw std::invalid_argument("unknown variant '" + name + "' (expected halo, hlo or direct)");
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::kRunning:
      return "running";
    case RunStatus::kSolved:
      return "solved";
    case RunStatus::kBudgetExhausted:
      return "budget_exhausted";
    case RunStatus::kIterLimit:
      return "iter_limit";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  stop.validate();
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
  if (!(exclusion_radius > 0.0)) throw std::invalid_argument("exclusion radius must be positive");
  if (!(direct_epsilon_rel >= 0.0)) throw std::invalid_argument("DIRECT epsilon must be nonnegative");
}

double optimum_error(double f_best, double f_glob) {
  if (std::abs(f_glob) < 1e-12) return std::abs(f_best - f_glob);
  return (f_best - f_glob) / std::abs(f_glob);
}

RunStatus check_stop(double f_best, std::size_t evaluations, const std::optional<double>& f_glob,
                     const StopRule& stop) {
  if (f_glob && optimum_error(f_best, *f_glob) <= stop.rel_error_tol) return RunStatus::kSolved;
  if (evaluations >= stop.max_fun_evals) return RunStatus::kBudgetExhausted;
  return RunStatus::kRunning;
}

RunStatus check_stop(const RunTrace& trace, const ObjectiveHandle& obj, const StopRule& stop) {
  if (trace.evals.empty()) return RunStatus::kRunning;
  return check_stop(trace.best_value, trace.evaluations(), obj.known_optimum(), stop);
}

namespace {

class Run {
 public:
  Run(ObjectiveHandle& obj, const SolverConfig& cfg)
      : obj_(obj), cfg_(cfg), registry_(cfg.exclusion_radius, cfg.beta) {
    trace_.best_value = std::numeric_limits<double>::infinity();
    eval_ = [this](std::span<const double> q) { return evaluate(q, EvalSource::kSample); };
    local_eval_ = [this](std::span<const double> q) { return evaluate(q, EvalSource::kLocalSearch); };
  }

  RunTrace execute() {
    const std::size_t dim = obj_.dimension();
    const Point center(dim, 0.5);
    try {
      const auto root_value = evaluate(center, EvalSource::kSample);
      trace_.ledger = root_ledger(dim, *root_value);
      for (std::size_t k = 0; trace_.status == RunStatus::kRunning; ++k) {
        if (k >= cfg_.stop.max_iter) {
          trace_.status = RunStatus::kIterLimit;
          break;
        }
        iterate(k);
      }
    } catch (const std::exception& e) {
      throw RunAborted(std::string("objective evaluation failed: ") + e.what(), std::move(trace_));
    }
    return std::move(trace_);
  }

 private:
  std::optional<double> evaluate(std::span<const double> q, EvalSource source) {
    if (trace_.status != RunStatus::kRunning) return std::nullopt;
    if (trace_.evals.size() >= cfg_.stop.max_fun_evals) {
      trace_.status = RunStatus::kBudgetExhausted;
      return std::nullopt;
    }
    Point x = denormalize_point(q, obj_.domain());
    const double value = obj_(x);
    if (value < trace_.best_value || trace_.evals.empty()) {
      trace_.best_value = value;
      trace_.best_point = x;
    }
    trace_.evals.push_back({trace_.evals.size() + 1, std::move(x), value, trace_.best_value, source});
    trace_.status = check_stop(trace_.best_value, trace_.evals.size(), obj_.known_optimum(), cfg_.stop);
    if (trace_.status == RunStatus::kSolved) trace_.solved_at = trace_.evals.size();
    return value;
  }

  void iterate(std::size_t k) {
    PartitionLedger& ledger = *trace_.ledger;
    const double global = global_slope_max(ledger);

    SelectionOutcome selection;
    switch (cfg_.variant) {
      case Variant::kHalo:
        selection = select_halo(ledger, local_constants(ledger), cfg_.largest_box_rule);
        break;
      case Variant::kHlo:
        selection = select_hlo(ledger, global, cfg_.largest_box_rule);
        break;
      case Variant::kDirect:
        selection.chosen = select_potentially_optimal(ledger, cfg_.direct_epsilon_rel);
        selection.reasons.assign(selection.chosen.size(), SelectionReason{});
        break;
    }
    trace_.iterations.push_back({k, selection.chosen, ledger.size(), global});

    const bool gated = cfg_.local_search && cfg_.variant != Variant::kDirect;
    for (std::size_t c = 0; c < selection.chosen.size(); ++c) {
      const PartitionId id = selection.chosen[c];
      const SelectionReason why = selection.reasons[c];
      bool divide = true;
      if (gated && why.local_search_candidate()) {
        const GateDecision decision = gate_local_search(id, ledger, registry_);
        if (decision == GateDecision::kRun) local_search(k, id);
        // The largest-box pick is always divided, whatever the gate said.
        divide = decision == GateDecision::kSelectForDivision || why.largest_best_bound;
      }
      if (divide && !sample_and_divide(id)) return;
      if (trace_.status != RunStatus::kRunning) return;
    }
  }

  bool sample_and_divide(PartitionId id) {
    PartitionLedger& ledger = *trace_.ledger;
    SamplePlan plan = plan_sample(ledger[id]);
    if (!evaluate_plan(plan, eval_)) return false;
    const auto children = divide_partition(ledger, plan, division_order(plan));
    update_slopes_on_division(ledger, id, plan, children);
    return true;
  }

  void local_search(std::size_t k, PartitionId id) {
    const PartitionLedger& ledger = *trace_.ledger;
    const Partition& start = ledger[id];
    const std::size_t remaining = cfg_.stop.max_fun_evals - std::min(cfg_.stop.max_fun_evals, trace_.evals.size());
    LocalSearchOptions opts;
    opts.budget = std::min(remaining, 100 * ledger.dimension());
    opts.initial_step = std::max(1e-3, ledger.half_diagonal(id));
    const LocalResult res = cfg_.local_optimizer ? cfg_.local_optimizer(local_eval_, start.center, start.value, opts)
                                                 : coordinate_descent(local_eval_, start.center, start.value, opts);
    trace_.local_searches.push_back({k, id, start.center, res.evaluations, res.value, res.converged});
  }

  ObjectiveHandle& obj_;
  const SolverConfig& cfg_;
  ExclusionRegistry registry_;
  RunTrace trace_;
  PointEvaluator eval_;
  PointEvaluator local_eval_;
};

}  // namespace

RunTrace run(ObjectiveHandle& obj, const SolverConfig& cfg) {
  cfg.validate();
  return Run(obj, cfg).execute();
}

}  // namespace halo
