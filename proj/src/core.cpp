#include "halo/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace halo {

BoxDomain::BoxDomain(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw DomainError("box domain needs at least one dimension");
  if (lower_.size() != upper_.size()) throw DomainError("box bounds differ in dimension");
  for (std::size_t n = 0; n < lower_.size(); ++n) {
    if (!(lower_[n] < upper_[n]))
      throw DomainError("box bound " + std::to_string(n) + " has lower >= upper");
  }
}

BoxDomain BoxDomain::unit(std::size_t dimension) {
  return BoxDomain(Point(dimension, 0.0), Point(dimension, 1.0));
}

bool BoxDomain::contains(std::span<const double> p) const {
  if (p.size() != dimension()) return false;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (!(p[n] >= lower_[n] && p[n] <= upper_[n])) return false;
  }
  return true;
}

Point normalize_point(std::span<const double> p, const BoxDomain& d) {
  if (!d.contains(p)) throw DomainError("point lies outside the box domain");
  Point q(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) q[n] = (p[n] - d.lower()[n]) / d.width(n);
  return q;
}

Point denormalize_point(std::span<const double> q, const BoxDomain& d) {
  if (q.size() != d.dimension()) throw DomainError("point dimension does not match the domain");
  Point p(q.size());
  for (std::size_t n = 0; n < q.size(); ++n) {
    if (!(q[n] >= 0.0 && q[n] <= 1.0)) throw DomainError("normalized point lies outside [0,1]^N");
    p[n] = d.lower()[n] + q[n] * d.width(n);
    // Clamp against rounding so problem-space points never escape the box.
    p[n] = std::clamp(p[n], d.lower()[n], d.upper()[n]);
  }
  return p;
}

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double half_diagonal(const Partition& p) { return norm2(p.half_sides); }

double volume(const Partition& p) {
  double v = 1.0;
  for (double s : p.half_sides) v *= 2.0 * s;
  return v;
}

PartitionLedger::PartitionLedger(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DomainError("ledger dimension must be at least 1");
}

PartitionId PartitionLedger::add(Point center, Point half_sides, double value, Point slopes) {
  if (center.size() != dimension_ || half_sides.size() != dimension_ || slopes.size() != dimension_)
    throw std::invalid_argument("partition fields do not match ledger dimension");
  const PartitionId id = parts_.size();
  parts_.push_back(Partition{id, std::move(center), std::move(half_sides), value, std::move(slopes)});
  half_diag_.push_back(0.0);
  slope_norm_.push_back(0.0);
  refresh(id);
  return id;
}

void PartitionLedger::set_half_side(PartitionId id, std::size_t n, double s) {
  parts_.at(id).half_sides.at(n) = s;
  refresh(id);
}

void PartitionLedger::set_slope(PartitionId id, std::size_t n, double g) {
  parts_.at(id).slopes.at(n) = g;
  refresh(id);
}

void PartitionLedger::set_slopes(PartitionId id, Point slopes) {
  if (slopes.size() != dimension_) throw std::invalid_argument("slope row has wrong dimension");
  parts_.at(id).slopes = std::move(slopes);
  refresh(id);
}

double PartitionLedger::total_volume() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0.0,
                         [](double acc, const Partition& p) { return acc + volume(p); });
}

void PartitionLedger::refresh(PartitionId id) {
  half_diag_[id] = norm2(parts_[id].half_sides);
  slope_norm_[id] = norm2(parts_[id].slopes);
}

ObjectiveHandle::ObjectiveHandle(Evaluator f, BoxDomain domain, std::optional<double> known_optimum,
                                 std::optional<Point> known_minimizer)
    : f_(std::make_shared<const Evaluator>(std::move(f))),
      domain_(std::move(domain)),
      known_optimum_(known_optimum),
      known_minimizer_(std::move(known_minimizer)) {
  if (!*f_) throw std::invalid_argument("objective handle needs an evaluator");
}

double ObjectiveHandle::operator()(std::span<const double> x) {
  ++count_;
  return (*f_)(x);
}

double ObjectiveHandle::evaluate_normalized(std::span<const double> q) {
  const Point x = denormalize_point(q, domain_);
  return (*this)(x);
}

void StopRule::validate() const {
  if (max_fun_evals == 0 || max_iter == 0 || !(rel_error_tol > 0.0))
    throw std::invalid_argument("stop rule fields must be strictly positive");
}

bool same_size(double a, double b) {
  return std::abs(a - b) <= kSizeRelTol * std::max(std::abs(a), std::abs(b));
}

}  // namespace halo
