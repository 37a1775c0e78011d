#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

using Point = std::vector<double>;
using PartitionId = std::size_t;

/// Raised when a point lies outside the box it is mapped against, or a box is malformed.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would consume more evaluations than the budget allows.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-aligned box {x : lower <= x <= upper} in problem units.
class BoxDomain {
 public:
  BoxDomain(Point lower, Point upper);

  static BoxDomain unit(std::size_t dimension);

  std::size_t dimension() const { return lower_.size(); }
  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }
  double width(std::size_t n) const { return upper_[n] - lower_[n]; }

  bool contains(std::span<const double> p) const;

 private:
  Point lower_;
  Point upper_;
};

/// Maps a point in problem units onto the unit hypercube.
Point normalize_point(std::span<const double> p, const BoxDomain& d);

/// Inverse of normalize_point.
Point denormalize_point(std::span<const double> q, const BoxDomain& d);

/// One hyperrectangle of the partition, stored in normalized units.
/// `half_sides[n]` is half the side length along n; `slopes` is the row of
/// absolute directional slope estimates.
struct Partition {
  PartitionId id = 0;
  Point center;
  Point half_sides;
  double value = 0.0;
  Point slopes;
};

/// Euclidean norm of the half-side vector: distance from center to any vertex.
double half_diagonal(const Partition& p);

/// Volume of the box in the unit hypercube.
double volume(const Partition& p);

/// Append-only store of every partition created during a run. Partitions are
/// never removed: a divided box keeps its id and center and shrinks in place,
/// so the stored boxes always tile [0,1]^N.
///
/// Mutation goes through the ledger so the cached half-diagonal and slope norm
/// of each entry stay consistent with its fields.
class PartitionLedger {
 public:
  explicit PartitionLedger(std::size_t dimension);

  PartitionId add(Point center, Point half_sides, double value, Point slopes);

  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::size_t dimension() const { return dimension_; }

  const Partition& operator[](PartitionId id) const { return parts_.at(id); }
  auto begin() const { return parts_.cbegin(); }
  auto end() const { return parts_.cend(); }

  double half_diagonal(PartitionId id) const { return half_diag_.at(id); }
  double slope_norm(PartitionId id) const { return slope_norm_.at(id); }

  void set_half_side(PartitionId id, std::size_t n, double s);
  void set_slope(PartitionId id, std::size_t n, double g);
  void set_slopes(PartitionId id, Point slopes);

  /// Sum of all box volumes; equals 1 while the tiling invariant holds.
  double total_volume() const;

 private:
  void refresh(PartitionId id);

  std::size_t dimension_;
  std::vector<Partition> parts_;
  std::vector<double> half_diag_;
  std::vector<double> slope_norm_;
};

using Evaluator = std::function<double(std::span<const double>)>;

/// Counting wrapper around a black-box objective over a box domain.
///
/// The evaluator itself is shared between copies and must be stateless; each
/// copy owns its own evaluation counter, so independent solver runs can hold
/// copies of the same handle concurrently.
class ObjectiveHandle {
 public:
  ObjectiveHandle(Evaluator f, BoxDomain domain, std::optional<double> known_optimum = std::nullopt,
                  std::optional<Point> known_minimizer = std::nullopt);

  /// Evaluates at a point in problem units.
  double operator()(std::span<const double> x);

  /// Evaluates at a point of the unit hypercube.
  double evaluate_normalized(std::span<const double> q);

  std::size_t eval_count() const { return count_; }
  void reset_count() { count_ = 0; }

  const BoxDomain& domain() const { return domain_; }
  std::size_t dimension() const { return domain_.dimension(); }
  const std::optional<double>& known_optimum() const { return known_optimum_; }
  const std::optional<Point>& known_minimizer() const { return known_minimizer_; }

 private:
  std::shared_ptr<const Evaluator> f_;
  BoxDomain domain_;
  std::optional<double> known_optimum_;
  std::optional<Point> known_minimizer_;
  std::size_t count_ = 0;
};

struct StopRule {
  std::size_t max_fun_evals = 30000;
  double rel_error_tol = 1e-4;
  std::size_t max_iter = 1'000'000;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/// Relative tolerance used to decide whether two half-sides or half-diagonals
/// belong to the same size class.
inline constexpr double kSizeRelTol = 1e-12;

bool same_size(double a, double b);

}  // namespace halo
