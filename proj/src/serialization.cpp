#include "halo/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace halo {

using nlohmann::json;

std::string format_real(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// JSON has no literal for non-finite numbers; they become null.
std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

std::string json_string(const std::string& s) { return json(s).dump(); }

double real_or_nan(const json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

}  // namespace

ProblemRecord describe(const TestProblem& problem) {
  ProblemRecord r;
  r.family = problem.family;
  r.dimension = problem.dimension();
  r.f_glob = problem.known_optimum;
  if (problem.family == "schoen") {
    r.name = "schoen";
    r.seed = problem.seed;
    r.stationary_points = problem.stationary_points;
  } else {
    r.name = problem.base_name;
    r.shift_seed = problem.shift_seed;
  }
  return r;
}

namespace {

TestProblem build_problem(const ProblemRecord& record) {
  if (record.family == "schoen") {
    if (!record.stationary_points) throw std::invalid_argument("schoen record needs S");
    return schoen_generate(record.seed, record.dimension, *record.stationary_points);
  }
  if (record.family == "classical") {
    auto base = classical_problem(record.name, record.dimension);
    if (!base) {
      throw std::invalid_argument("unknown classical function '" + record.name + "' at N=" +
                                  std::to_string(record.dimension));
    }
    return record.shift_seed ? shift_minimizer(*base, *record.shift_seed) : std::move(*base);
  }
  throw std::invalid_argument("unknown problem family '" + record.family + "'");
}

}  // namespace

TestProblem make_problem(const ProblemRecord& record) {
  TestProblem p = build_problem(record);
  if (std::abs(p.known_optimum - record.f_glob) > 1e-12 * std::max(1.0, std::abs(record.f_glob))) {
    throw std::invalid_argument("manifest optimum " + format_real(record.f_glob) + " disagrees with " + p.name +
                                " (" + format_real(p.known_optimum) + ")");
  }
  return p;
}

std::string manifest_line(const ProblemRecord& r) {
  std::string s = "{\"family\":" + json_string(r.family) + ",\"name\":" + json_string(r.name) +
                  ",\"N\":" + std::to_string(r.dimension) + ",\"seed\":" + std::to_string(r.seed) + ",\"S\":" +
                  (r.stationary_points ? std::to_string(*r.stationary_points) : "null") + ",\"shift_seed\":" +
                  (r.shift_seed ? std::to_string(*r.shift_seed) : "null") + ",\"f_glob\":" + json_real(r.f_glob) + "}";
  return s;
}

ProblemRecord parse_manifest_line(const std::string& line) {
  const json j = json::parse(line);
  ProblemRecord r;
  r.family = j.at("family").get<std::string>();
  r.name = j.at("name").get<std::string>();
  r.dimension = j.at("N").get<std::size_t>();
  r.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("S") && !j["S"].is_null()) r.stationary_points = j["S"].get<int>();
  if (j.contains("shift_seed") && !j["shift_seed"].is_null()) r.shift_seed = j["shift_seed"].get<std::uint64_t>();
  r.f_glob = j.at("f_glob").get<double>();
  return r;
}

void write_manifest(std::ostream& out, const std::vector<ProblemRecord>& records) {
  for (const auto& r : records) out << manifest_line(r) << '\n';
}

std::vector<ProblemRecord> read_manifest(std::istream& in) {
  std::vector<ProblemRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    try {
      out.push_back(parse_manifest_line(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("manifest line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::vector<ProblemRecord> read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  return read_manifest(in);
}

void write_trace(std::ostream& out, const RunTrace& trace) {
  for (const auto& e : trace.evals) {
    out << "{\"eval_index\":" << e.index << ",\"value\":" << json_real(e.value) << ",\"best\":" << json_real(e.best)
        << "}\n";
  }
}

void write_report_json(std::ostream& out, const BenchmarkReport& r) {
  out << "{\n  \"metadata\": {\"variant\":" << json_string(r.variant) << ",\"budget\":" << r.budget
      << ",\"rel_error_tol\":" << json_real(r.rel_error_tol) << ",\"beta\":" << json_real(r.beta)
      << ",\"local_search\":" << (r.local_search ? "true" : "false") << ",\"jobs\":" << r.jobs
      << ",\"started_at\":" << json_string(r.started_at) << ",\"finished_at\":" << json_string(r.finished_at)
      << ",\"average_evals_over\":\"solved runs only\"},\n";
  out << "  \"aggregate\": {\"problems\":" << r.rows.size() << ",\"percent_solved\":" << json_real(r.percent_solved)
      << ",\"average_evals\":" << (r.average_evals ? json_real(*r.average_evals) : "null")
      << ",\"auoc\":" << json_real(r.auoc) << ",\"gamma_max\":" << json_real(r.gamma_max) << "},\n";
  out << "  \"rows\": [";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const RunRecord& x = r.rows[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"problem\":" << json_string(x.problem)
        << ",\"family\":" << json_string(x.family) << ",\"N\":" << x.dimension << ",\"variant\":" << json_string(x.variant)
        << ",\"solved\":" << (x.solved ? "true" : "false") << ",\"fevals\":" << x.fevals
        << ",\"total_evals\":" << x.total_evals << ",\"best_f\":" << json_real(x.best_f)
        << ",\"f_glob\":" << json_real(x.f_glob) << ",\"rel_err\":" << json_real(x.rel_err)
        << ",\"status\":" << json_string(x.status) << ",\"error\":" << json_string(x.error)
        << ",\"local_searches\":" << x.local_searches << ",\"importance\":[";
    for (std::size_t k = 0; k < x.importance.size(); ++k) out << (k ? "," : "") << json_real(x.importance[k]);
    out << "]}";
  }
  out << "\n  ]\n}\n";
}

BenchmarkReport read_report_json(std::istream& in) {
  const json j = json::parse(in);
  BenchmarkReport r;
  const json& meta = j.at("metadata");
  r.variant = meta.at("variant").get<std::string>();
  r.budget = meta.at("budget").get<std::size_t>();
  r.rel_error_tol = real_or_nan(meta.at("rel_error_tol"));
  r.beta = real_or_nan(meta.at("beta"));
  r.local_search = meta.at("local_search").get<bool>();
  r.jobs = meta.at("jobs").get<std::size_t>();
  r.started_at = meta.at("started_at").get<std::string>();
  r.finished_at = meta.at("finished_at").get<std::string>();
  const json& agg = j.at("aggregate");
  r.gamma_max = real_or_nan(agg.at("gamma_max"));
  for (const json& x : j.at("rows")) {
    RunRecord row;
    row.problem = x.at("problem").get<std::string>();
    row.family = x.at("family").get<std::string>();
    row.dimension = x.at("N").get<std::size_t>();
    row.variant = x.at("variant").get<std::string>();
    row.solved = x.at("solved").get<bool>();
    row.fevals = x.at("fevals").get<std::size_t>();
    row.total_evals = x.at("total_evals").get<std::size_t>();
    row.best_f = real_or_nan(x.at("best_f"));
    row.f_glob = real_or_nan(x.at("f_glob"));
    row.rel_err = real_or_nan(x.at("rel_err"));
    row.status = x.at("status").get<std::string>();
    row.error = x.at("error").get<std::string>();
    row.local_searches = x.at("local_searches").get<std::size_t>();
    for (const json& v : x.at("importance")) row.importance.push_back(real_or_nan(v));
    r.rows.push_back(std::move(row));
  }
  aggregate(r);
  return r;
}

void write_report_csv(std::ostream& out, const BenchmarkReport& report) {
  out << "problem,N,variant,solved,fevals,best_f,rel_err\n";
  for (const auto& r : report.rows) {
    out << r.problem << ',' << r.dimension << ',' << r.variant << ',' << (r.solved ? 1 : 0) << ',' << r.fevals << ','
        << format_real(r.best_f) << ',' << format_real(r.rel_err) << '\n';
  }
}

void write_oc_csv(std::ostream& out, const StepCurve& curve) {
  out << "gamma,c\n";
  for (std::size_t i = 0; i < curve.gamma.size(); ++i) {
    out << format_real(curve.gamma[i]) << ',' << format_real(curve.value[i]) << '\n';
  }
}

void write_importance_csv(std::ostream& out, const std::vector<RunRecord>& rows) {
  out << "problem,N,variant,coord,importance\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.importance.size(); ++k) {
      out << r.problem << ',' << r.dimension << ',' << r.variant << ',' << (k + 1) << ',' << format_real(r.importance[k])
          << '\n';
    }
  }
}

}  // namespace halo
