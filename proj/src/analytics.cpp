#include "halo/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>
#include <thread>

namespace halo {

StepCurve operational_characteristic(const std::vector<RunRecord>& records, const std::vector<double>& grid) {
  if (records.empty()) throw std::invalid_argument("operational characteristic needs at least one record");
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("gamma grid must be ascending");
  std::vector<double> solved;
  for (const auto& r : records) {
    if (r.solved) solved.push_back(static_cast<double>(r.fevals));
  }
  std::sort(solved.begin(), solved.end());
  const double total = static_cast<double>(records.size());
  StepCurve curve;
  curve.gamma = grid;
  curve.value.reserve(grid.size());
  for (double g : grid) {
    const auto count = std::upper_bound(solved.begin(), solved.end(), g) - solved.begin();
    curve.value.push_back(static_cast<double>(count) / total);
  }
  return curve;
}

std::vector<double> oc_grid(const std::vector<RunRecord>& records, double gamma_max) {
  std::vector<double> grid;
  for (const auto& r : records) {
    const auto g = static_cast<double>(r.fevals);
    if (r.solved && g <= gamma_max) grid.push_back(g);
  }
  grid.push_back(gamma_max);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double auoc(const StepCurve& curve, double gamma_max) {
  if (!(gamma_max > 0.0)) throw std::invalid_argument("gamma_max must be positive");
  if (curve.gamma.size() != curve.value.size()) throw std::invalid_argument("malformed step curve");
  double area = 0.0;
  for (std::size_t i = 0; i < curve.gamma.size(); ++i) {
    const double lo = std::max(0.0, curve.gamma[i]);
    const double hi = i + 1 < curve.gamma.size() ? std::min(curve.gamma[i + 1], gamma_max) : gamma_max;
    if (hi > lo) area += curve.value[i] * (hi - lo);
  }
  return std::clamp(area / gamma_max, 0.0, 1.0);
}

std::vector<double> variable_importance(const PartitionLedger& ledger, const BoxDomain* domain) {
  if (ledger.empty()) throw std::invalid_argument("variable importance needs a nonempty ledger");
  const std::size_t n = ledger.dimension();
  std::vector<double> mean(n, 0.0);
  for (const Partition& p : ledger) {
    for (std::size_t i = 0; i < n; ++i) mean[i] += p.slopes[i];
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean[i] /= static_cast<double>(ledger.size());
    if (domain != nullptr) mean[i] /= domain->width(i);
    sum += mean[i];
  }
  if (!(sum > 0.0)) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  for (double& v : mean) v /= sum;
  return mean;
}

RunRecord run_problem(const TestProblem& problem, const SolverConfig& cfg) {
  RunRecord rec;
  rec.problem = problem.name;
  rec.family = problem.family;
  rec.dimension = problem.dimension();
  rec.variant = to_string(cfg.variant);
  rec.f_glob = problem.known_optimum;
  ObjectiveHandle obj = problem.objective();
  auto fill = [&](const RunTrace& trace) {
    rec.solved = trace.status == RunStatus::kSolved;
    rec.total_evals = trace.evaluations();
    rec.fevals = trace.solved_at.value_or(rec.total_evals);
    rec.best_f = trace.best_value;
    rec.rel_err = trace.evals.empty() ? 0.0 : optimum_error(trace.best_value, problem.known_optimum);
    rec.status = to_string(trace.status);
    rec.local_searches = trace.local_searches.size();
    if (trace.ledger && !trace.ledger->empty()) rec.importance = variable_importance(*trace.ledger);
  };
  try {
    fill(run(obj, cfg));
  } catch (const RunAborted& e) {
    fill(e.trace());
    rec.solved = false;
    rec.status = "error";
    rec.error = e.what();
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

void aggregate(BenchmarkReport& report) {
  const auto& rows = report.rows;
  if (rows.empty()) throw std::invalid_argument("empty manifest");
  std::size_t solved = 0;
  double evals = 0.0;
  for (const auto& r : rows) {
    if (!r.solved) continue;
    ++solved;
    evals += static_cast<double>(r.fevals);
  }
  report.percent_solved = 100.0 * static_cast<double>(solved) / static_cast<double>(rows.size());
  report.average_evals = solved > 0 ? std::optional<double>(evals / static_cast<double>(solved)) : std::nullopt;
  if (report.gamma_max <= 0.0) report.gamma_max = static_cast<double>(report.budget);
  report.auoc = auoc(operational_characteristic(rows, oc_grid(rows, report.gamma_max)), report.gamma_max);
}

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

BenchmarkReport run_benchmark(const std::vector<TestProblem>& manifest, const SolverConfig& cfg, std::size_t jobs) {
  if (manifest.empty()) throw std::invalid_argument("empty manifest");
  cfg.validate();
  jobs = std::clamp<std::size_t>(jobs, 1, manifest.size());

  BenchmarkReport report;
  report.variant = to_string(cfg.variant);
  report.budget = cfg.stop.max_fun_evals;
  report.rel_error_tol = cfg.stop.rel_error_tol;
  report.beta = cfg.beta;
  report.local_search = cfg.local_search;
  report.jobs = jobs;
  report.gamma_max = static_cast<double>(cfg.stop.max_fun_evals);
  report.started_at = utc_now();
  report.rows.resize(manifest.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++) report.rows[i] = run_problem(manifest[i], cfg);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.finished_at = utc_now();
  aggregate(report);
  return report;
}

}  // namespace halo
