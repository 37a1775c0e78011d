// halo_cli: run the solvers, benchmarks and reports from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "halo/analytics.hpp"
#include "halo/serialization.hpp"
#include "halo/solver.hpp"
#include "halo/testbed.hpp"

namespace {

using namespace halo;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// Accepted forms: manifest.jsonl#idx, schoen-n<N>-seed<k>, schoen (with --n,
// --seed), <classical>[-n<N>][-shift<k>] (--seed shifts when given; center
// functions only).
TestProblem resolve_problem(const std::string& spec, std::size_t n, bool has_seed, std::uint64_t seed) {
  if (const auto hash = spec.rfind('#'); hash != std::string::npos) {
    const auto records = read_manifest_file(spec.substr(0, hash));
    const std::size_t idx = std::stoul(spec.substr(hash + 1));
    if (idx >= records.size()) throw std::invalid_argument("manifest index out of range");
    return make_problem(records[idx]);
  }
  std::smatch m;
  if (std::regex_match(spec, m, std::regex(R"(schoen-n(\d+)-seed(\d+))"))) {
    const std::uint64_t s = std::stoull(m[2]);
    return schoen_generate(s, std::stoul(m[1]), schoen_stationary_count(s));
  }
  if (spec == "schoen") {
    const std::uint64_t s = seed;
    return schoen_generate(s, n, schoen_stationary_count(s));
  }
  if (!std::regex_match(spec, m, std::regex(R"(([a-z0-9_]+?)(?:-n(\d+))?(?:-shift(\d+))?)")))
    throw std::invalid_argument("cannot parse problem '" + spec + "'");
  const std::size_t dim = m[2].matched ? std::stoul(m[2]) : n;
  auto p = classical_problem(m[1], dim);
  if (!p) throw std::invalid_argument("unknown problem '" + spec + "' at N=" + std::to_string(dim));
  if (m[3].matched) return shift_minimizer(*p, std::stoull(m[3]));
  if (has_seed) return shift_minimizer(*p, seed);
  return *p;
}

void print_summary(const BenchmarkReport& r, const std::string& label) {
  std::printf("%s: variant=%s problems=%zu solved=%.2f%% avg_evals=%s auoc=%.6f\n", label.c_str(), r.variant.c_str(),
              r.rows.size(), r.percent_solved,
              r.average_evals ? format_real(*r.average_evals).c_str() : "n/a", r.auoc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HALO deterministic Lipschitz global optimizer"};
  app.require_subcommand(1);

  std::string variant = "halo";
  std::size_t budget = 30000;
  double beta = 1e-4;
  double tol = 1e-4;
  bool no_local = false;

  auto* solve = app.add_subcommand("solve", "Run one problem and write its evaluation trace");
  std::string problem;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::string out_path;
  solve->add_option("--problem", problem, "Problem name, schoen-n<N>-seed<k>, or manifest.jsonl#index")->required();
  solve->add_option("--variant", variant)->check(CLI::IsMember({"halo", "hlo", "direct"}));
  solve->add_option("--budget", budget, "Maximum function evaluations");
  solve->add_option("--beta", beta, "Local-search size threshold");
  solve->add_option("--tol", tol, "Relative error tolerance");
  auto* seed_opt = solve->add_option("--seed", seed, "Schoen seed, or shift seed for classical problems");
  solve->add_option("--n", n, "Dimension when the problem name does not carry one");
  solve->add_flag("--no-local-search", no_local);
  solve->add_option("--out", out_path, "Trace output (JSON lines)");

  auto* bench = app.add_subcommand("bench", "Run every problem of a manifest");
  std::string manifest;
  std::size_t jobs = 1;
  std::string table;
  bench->add_option("--manifest", manifest)->required()->check(CLI::ExistingFile);
  bench->add_option("--variant", variant)->check(CLI::IsMember({"halo", "hlo", "direct"}));
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path, "Report output (JSON)")->required();
  bench->add_option("--table", table, "Flat CSV table output");
  bench->add_option("--budget", budget);
  bench->add_option("--beta", beta);
  bench->add_option("--tol", tol);
  bench->add_flag("--no-local-search", no_local);

  auto* report = app.add_subcommand("report", "Summarize benchmark reports");
  std::vector<std::string> inputs;
  bool want_auoc = false;
  std::string oc_csv;
  std::string importance_csv;
  report->add_option("--in", inputs)->required()->check(CLI::ExistingFile);
  report->add_flag("--auoc", want_auoc, "Print the AUOC of the pooled rows");
  report->add_option("--oc-csv", oc_csv, "Operational characteristic of the pooled rows");
  report->add_option("--importance-csv", importance_csv);

  auto* gen = app.add_subcommand("gen", "Write a problem manifest");
  std::string family = "schoen";
  std::size_t count = 1;
  gen->add_option("--family", family)->check(CLI::IsMember({"schoen", "classical"}));
  gen->add_option("--n", n)->check(CLI::PositiveNumber);
  gen->add_option("--count", count, "Schoen problems, or shift rounds for classical")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    SolverConfig cfg;
    cfg.variant = parse_variant(variant);
    cfg.beta = beta;
    cfg.stop.max_fun_evals = budget;
    cfg.stop.rel_error_tol = tol;
    cfg.local_search = !no_local;

    if (solve->parsed()) {
      const TestProblem p = resolve_problem(problem, n, seed_opt->count() > 0, seed);
      ObjectiveHandle obj = p.objective();
      RunTrace trace;
      try {
        trace = run(obj, cfg);
      } catch (const RunAborted& e) {
        std::fprintf(stderr, "%s\n", e.what());
        trace = e.trace();
      }
      if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_trace(out, trace);
      }
      std::printf("problem=%s N=%zu variant=%s status=%s evals=%zu best_f=%s f_glob=%s\n", p.name.c_str(),
                  p.dimension(), variant.c_str(), to_string(trace.status), trace.evaluations(),
                  format_real(trace.best_value).c_str(), format_real(p.known_optimum).c_str());
      std::printf("best_x=");
      for (std::size_t i = 0; i < trace.best_point.size(); ++i)
        std::printf("%s%s", i ? "," : "", format_real(trace.best_point[i]).c_str());
      std::printf("\n");
      return trace.status == RunStatus::kSolved ? 0 : 2;
    }

    if (bench->parsed()) {
      std::vector<TestProblem> problems;
      for (const auto& r : read_manifest_file(manifest)) problems.push_back(make_problem(r));
      const BenchmarkReport rep = run_benchmark(problems, cfg, jobs);
      auto out = open_out(out_path);
      write_report_json(out, rep);
      if (!table.empty()) {
        auto t = open_out(table);
        write_report_csv(t, rep);
      }
      print_summary(rep, manifest);
      return 0;
    }

    if (report->parsed()) {
      BenchmarkReport pooled;
      for (const auto& path : inputs) {
        std::ifstream in(path);
        BenchmarkReport r = read_report_json(in);
        print_summary(r, path);
        pooled.variant = pooled.rows.empty() ? r.variant : (pooled.variant == r.variant ? r.variant : "mixed");
        pooled.gamma_max = std::max(pooled.gamma_max, r.gamma_max);
        pooled.rows.insert(pooled.rows.end(), r.rows.begin(), r.rows.end());
      }
      aggregate(pooled);
      if (want_auoc) std::printf("auoc=%s\n", format_real(pooled.auoc).c_str());
      if (!oc_csv.empty()) {
        auto out = open_out(oc_csv);
        write_oc_csv(out, operational_characteristic(pooled.rows, oc_grid(pooled.rows, pooled.gamma_max)));
      }
      if (!importance_csv.empty()) {
        auto out = open_out(importance_csv);
        write_importance_csv(out, pooled.rows);
      }
      return 0;
    }

    if (gen->parsed()) {
      std::vector<ProblemRecord> records;
      if (family == "schoen") {
        for (std::size_t k = 0; k < count; ++k) {
          const std::uint64_t s = seed + k;
          records.push_back(describe(schoen_generate(s, n, schoen_stationary_count(s))));
        }
      } else {
        // Round k shifts the center-minimizer functions with seed + k; the
        // other functions appear once.
        for (std::size_t k = 0; k < count; ++k) {
          for (const auto& name : classical_names()) {
            auto p = classical_problem(name, n);
            if (!p) continue;
            if (has_center_minimizer(name)) {
              records.push_back(describe(shift_minimizer(*p, seed + k)));
            } else if (k == 0) {
              records.push_back(describe(*p));
            }
          }
        }
      }
      auto out = open_out(out_path);
      write_manifest(out, records);
      std::printf("wrote %zu problems to %s\n", records.size(), out_path.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
