#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "halo/analytics.hpp"
#include "halo/solver.hpp"
#include "halo/testbed.hpp"

namespace halo {

/// 17 significant digits, so every double round-trips.
std::string format_real(double v);

/// One manifest line. Schoen problems use seed and S; classical problems use
/// the function name and an optional shift seed.
struct ProblemRecord {
  std::string family;  // "schoen" or "classical"
  std::string name;    // function name: "schoen" or a classical base name
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  std::optional<int> stationary_points;
  std::optional<std::uint64_t> shift_seed;
  double f_glob = 0.0;
};

/// Record describing an existing problem.
ProblemRecord describe(const TestProblem& problem);

/// Rebuilds the problem; throws std::invalid_argument if the record names an
/// unknown function or its f_glob disagrees with the rebuilt problem.
TestProblem make_problem(const ProblemRecord& record);

/// One JSON object per line, keys in fixed order: reading a manifest and
/// writing it back reproduces the file byte for byte.
std::string manifest_line(const ProblemRecord& record);
ProblemRecord parse_manifest_line(const std::string& line);
void write_manifest(std::ostream& out, const std::vector<ProblemRecord>& records);
std::vector<ProblemRecord> read_manifest(std::istream& in);
std::vector<ProblemRecord> read_manifest_file(const std::string& path);

/// Run trace as JSON lines: {"eval_index":..,"value":..,"best":..}.
void write_trace(std::ostream& out, const RunTrace& trace);

/// Report as one JSON document (metadata, aggregates, rows).
void write_report_json(std::ostream& out, const BenchmarkReport& report);
BenchmarkReport read_report_json(std::istream& in);

/// problem,N,variant,solved,fevals,best_f,rel_err
void write_report_csv(std::ostream& out, const BenchmarkReport& report);

/// gamma,c
void write_oc_csv(std::ostream& out, const StepCurve& curve);

/// problem,N,variant,coord,importance; one line per coordinate.
void write_importance_csv(std::ostream& out, const std::vector<RunRecord>& rows);

}  // namespace halo
