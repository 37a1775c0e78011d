#include "halo/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace halo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed) ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

ObjectiveHandle TestProblem::objective() const {
  return ObjectiveHandle(evaluator, domain, known_optimum, known_minimizer);
}

SchoenSpec schoen_spec(std::uint64_t seed, std::size_t dimension, int stationary_points) {
  if (dimension == 0) throw std::invalid_argument("Schoen function needs N >= 1");
  if (stationary_points < 2) throw std::invalid_argument("Schoen function needs at least two anchors");
  Rng rng(seed, kSchoenStream);
  SchoenSpec spec;
  spec.seed = seed;
  spec.dimension = dimension;
  const auto count = static_cast<std::size_t>(stationary_points);
  spec.anchors.resize(count, Point(dimension));
  spec.values.resize(count);
  spec.exponents.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    for (double& c : spec.anchors[j]) c = rng.uniform();
    spec.values[j] = rng.uniform(-1.0, 1.0);
    spec.exponents[j] = rng.uniform(2.0, 3.0);
  }
  return spec;
}

double schoen_value(const SchoenSpec& spec, std::span<const double> x) {
  // Dividing numerator and denominator by prod_m |x - z_m|^a_m turns the
  // product form into inverse-distance weights, O(S*N) per evaluation.
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < spec.anchors.size(); ++j) {
    double d2 = 0.0;
    for (std::size_t n = 0; n < spec.dimension; ++n) {
      const double t = x[n] - spec.anchors[j][n];
      d2 += t * t;
    }
    if (d2 == 0.0) return spec.values[j];
    const double w = std::pow(d2, -0.5 * spec.exponents[j]);
    num += w * spec.values[j];
    den += w;
  }
  if (!std::isfinite(den) || den == 0.0) {
    // Weights overflowed: x is numerically on top of the closest anchor.
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < spec.anchors.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t n = 0; n < spec.dimension; ++n) d2 += (x[n] - spec.anchors[j][n]) * (x[n] - spec.anchors[j][n]);
      if (d2 < best) {
        best = d2;
        nearest = j;
      }
    }
    return spec.values[nearest];
  }
  return num / den;
}

TestProblem schoen_problem(const SchoenSpec& spec) {
  const auto best = std::min_element(spec.values.begin(), spec.values.end()) - spec.values.begin();
  auto shared = std::make_shared<const SchoenSpec>(spec);
  TestProblem p{
      .name = "schoen-n" + std::to_string(spec.dimension) + "-seed" + std::to_string(spec.seed),
      .family = "schoen",
      .domain = BoxDomain::unit(spec.dimension),
      .evaluator = [shared](std::span<const double> x) { return schoen_value(*shared, x); },
      .known_optimum = spec.values[static_cast<std::size_t>(best)],
      .known_minimizer = spec.anchors[static_cast<std::size_t>(best)],
      .shift = {},
      .seed = spec.seed,
      .stationary_points = spec.stationary_points(),
      .shift_seed = std::nullopt,
      .base_name = "schoen",
  };
  return p;
}

TestProblem schoen_generate(std::uint64_t seed, std::size_t dimension, int stationary_points) {
  return schoen_problem(schoen_spec(seed, dimension, stationary_points));
}

int schoen_stationary_count(std::uint64_t seed) {
  Rng rng(seed, kStationaryCountStream);
  return 2 + static_cast<int>(rng.below(99));
}

TestProblem shift_by(const TestProblem& problem, const Point& delta) {
  if (delta.size() != problem.dimension()) throw std::invalid_argument("shift has wrong dimension");
  TestProblem out = problem;
  Evaluator base = problem.evaluator;
  out.evaluator = [base, delta](std::span<const double> x) {
    Point y(x.begin(), x.end());
    for (std::size_t n = 0; n < y.size(); ++n) y[n] -= delta[n];
    return base(y);
  };
  for (std::size_t n = 0; n < delta.size(); ++n) out.known_minimizer[n] += delta[n];
  if (out.shift.empty()) out.shift.assign(delta.size(), 0.0);
  for (std::size_t n = 0; n < delta.size(); ++n) out.shift[n] += delta[n];
  return out;
}

TestProblem shift_minimizer(const TestProblem& problem, std::uint64_t seed) {
  // Other functions may dip below their optimum once the domain slides.
  if (!has_center_minimizer(problem.base_name))
    throw std::invalid_argument("'" + problem.name + "' has no center minimizer and cannot be shifted");
  Rng rng(seed, kShiftStream);
  Point delta(problem.dimension());
  for (std::size_t n = 0; n < delta.size(); ++n) {
    const double lo = problem.domain.lower()[n];
    const double w = problem.domain.width(n);
    const double target = rng.uniform(lo + 0.1 * w, lo + 0.9 * w);
    delta[n] = target - problem.known_minimizer[n];
  }
  TestProblem out = shift_by(problem, delta);
  out.shift_seed = seed;
  out.name = problem.name + "-shift" + std::to_string(seed);
  return out;
}

}  // namespace halo
