#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "halo/core.hpp"

namespace halo {

/// Portable seeded generator: std::mt19937_64 (bit-exact across standard
/// libraries) with our own conversion to doubles and bounded integers, since
/// the standard distributions are implementation-defined.
///
/// Streams: the engine for (seed, stream) is seeded with
/// splitmix64(seed) ^ splitmix64(stream + 0x9e3779b97f4a7c15), so different
/// streams of the same seed are decorrelated.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n), by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Named streams used by the generators.
inline constexpr std::uint64_t kSchoenStream = 1;
inline constexpr std::uint64_t kStationaryCountStream = 2;
inline constexpr std::uint64_t kShiftStream = 3;

/// A problem with known global optimum.
struct TestProblem {
  std::string name;
  std::string family;  // "schoen" or "classical"
  BoxDomain domain;
  Evaluator evaluator;
  double known_optimum = 0.0;
  Point known_minimizer;  // problem units
  Point shift;            // empty when unshifted

  std::uint64_t seed = 0;                          // schoen seed
  std::optional<int> stationary_points;            // schoen S
  std::optional<std::uint64_t> shift_seed;         // classical shift seed
  std::string base_name;                           // classical function name

  std::size_t dimension() const { return domain.dimension(); }

  /// Fresh counting handle carrying the known optimum and minimizer.
  ObjectiveHandle objective() const;
};

/// Parameters of one Schoen function on [0,1]^N:
/// f(x) = sum_j f_j prod_{m!=j} |x-z_m|^a_m / sum_j prod_{m!=j} |x-z_m|^a_m.
struct SchoenSpec {
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  std::vector<Point> anchors;
  std::vector<double> values;
  std::vector<double> exponents;

  int stationary_points() const { return static_cast<int>(anchors.size()); }
};

/// Draws anchors uniformly in [0,1]^N, anchor values uniformly in [-1,1] and
/// exponents uniformly in [2,3], all from stream kSchoenStream of `seed`.
SchoenSpec schoen_spec(std::uint64_t seed, std::size_t dimension, int stationary_points);

/// Evaluates the interpolant; returns the anchor value exactly at an anchor.
double schoen_value(const SchoenSpec& spec, std::span<const double> x);

TestProblem schoen_problem(const SchoenSpec& spec);

/// Requires S >= 2 and N >= 1.
TestProblem schoen_generate(std::uint64_t seed, std::size_t dimension, int stationary_points);

/// Stationary-point count for a seed, uniform in [2, 100].
int schoen_stationary_count(std::uint64_t seed);

/// Names of every classical function, in suite order.
const std::vector<std::string>& classical_names();

/// One classical function at dimension N, unshifted. Returns std::nullopt if
/// the function does not exist at that dimension.
std::optional<TestProblem> classical_problem(const std::string& name, std::size_t dimension);

/// True for functions whose minimizer is the center of their domain; the
/// suite shifts these.
bool has_center_minimizer(const std::string& name);

/// Every classical function defined at N; center-minimizer functions are
/// shifted with `shift_seed`. N outside {2,3,4,6,8,10} gives what exists.
std::vector<TestProblem> classical_suite(std::size_t dimension, std::uint64_t shift_seed = 0);

/// x -> f(x - delta). The minimizer moves by delta; the optimum is unchanged.
TestProblem shift_by(const TestProblem& problem, const Point& delta);

/// Seeded shift that moves the minimizer to a uniform point of the inner 80%
/// of the domain (stream kShiftStream). Only center-minimizer functions can
/// be shifted; others throw std::invalid_argument.
TestProblem shift_minimizer(const TestProblem& problem, std::uint64_t seed);

}  // namespace halo
