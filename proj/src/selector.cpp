#include "halo/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace halo {

bool SelectionOutcome::contains(PartitionId id) const {
  return std::find(chosen.begin(), chosen.end(), id) != chosen.end();
}

namespace {

// Lowest index attaining the minimum of key(i) over `ids`.
template <typename Ids, typename Key>
PartitionId argmin(const Ids& ids, Key key) {
  PartitionId best = *ids.begin();
  double best_key = key(best);
  for (PartitionId i : ids) {
    const double k = key(i);
    if (k < best_key) {
      best = i;
      best_key = k;
    }
  }
  return best;
}

void add_choice(SelectionOutcome& out, PartitionId id, SelectionReason why) {
  const auto it = std::find(out.chosen.begin(), out.chosen.end(), id);
  if (it == out.chosen.end()) {
    out.chosen.push_back(id);
    out.reasons.push_back(why);
    return;
  }
  auto& r = out.reasons[static_cast<std::size_t>(it - out.chosen.begin())];
  r.lowest_bound |= why.lowest_bound;
  r.min_value |= why.min_value;
  r.largest_best_bound |= why.largest_best_bound;
}

}  // namespace

SelectionOutcome select_halo(const PartitionLedger& ledger, std::span<const double> constants,
                             LargestBoxRule rule) {
  if (ledger.empty()) throw std::invalid_argument("cannot select from an empty ledger");
  if (constants.size() != ledger.size()) throw std::invalid_argument("one constant per partition required");

  const std::size_t count = ledger.size();
  std::vector<double> bounds(count);
  double max_diag = 0.0;
  for (PartitionId i = 0; i < count; ++i) {
    bounds[i] = ledger[i].value - constants[i] * ledger.half_diagonal(i);
    max_diag = std::max(max_diag, ledger.half_diagonal(i));
  }

  std::vector<PartitionId> all(count);
  std::iota(all.begin(), all.end(), PartitionId{0});
  std::vector<PartitionId> largest;
  for (PartitionId i = 0; i < count; ++i) {
    if (same_size(ledger.half_diagonal(i), max_diag)) largest.push_back(i);
  }

  const PartitionId by_bound = argmin(all, [&](PartitionId i) { return bounds[i]; });
  const PartitionId by_value = argmin(all, [&](PartitionId i) { return ledger[i].value; });
  const PartitionId by_size =
      rule == LargestBoxRule::kLowestBound
          ? argmin(largest, [&](PartitionId i) { return bounds[i]; })
          : argmin(largest, [&](PartitionId i) { return constants[i]; });

  SelectionOutcome out;
  add_choice(out, by_bound, {.lowest_bound = true});
  add_choice(out, by_value, {.min_value = true});
  add_choice(out, by_size, {.largest_best_bound = true});
  return out;
}

SelectionOutcome select_hlo(const PartitionLedger& ledger, double global_constant, LargestBoxRule rule) {
  const std::vector<double> constants(ledger.size(), global_constant);
  return select_halo(ledger, constants, rule);
}

double direct_epsilon(double f_min, double epsilon_rel) {
  if (f_min == 0.0 && epsilon_rel > 0.0) return 1e-8;
  return epsilon_rel * std::abs(f_min);
}

std::vector<std::size_t> potentially_optimal(std::span<const double> sizes, std::span<const double> values,
                                             double epsilon_abs) {
  if (sizes.size() != values.size()) throw std::invalid_argument("sizes and values differ in length");
  if (sizes.empty()) return {};

  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  // Size classes in ascending order, each with its minimum value and the
  // members attaining it.
  struct Group {
    double size;
    double value;
    std::vector<std::size_t> members;
  };
  std::vector<Group> groups;
  for (std::size_t i : order) {
    if (groups.empty() || !same_size(groups.back().size, sizes[i])) {
      groups.push_back({sizes[i], values[i], {i}});
    } else if (values[i] < groups.back().value) {
      groups.back().value = values[i];
      groups.back().members.assign(1, i);
    } else if (values[i] == groups.back().value) {
      groups.back().members.push_back(i);
    }
  }

  // Start of the hull: the lowest value, largest size among ties.
  std::size_t start = 0;
  for (std::size_t g = 1; g < groups.size(); ++g) {
    if (groups[g].value <= groups[start].value) start = g;
  }
  const double f_min = groups[start].value;

  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (groups[a].size - groups[o].size) * (groups[b].value - groups[o].value) -
           (groups[a].value - groups[o].value) * (groups[b].size - groups[o].size);
  };
  std::vector<std::size_t> hull;
  for (std::size_t g = start; g < groups.size(); ++g) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), g) < 0.0) hull.pop_back();
    hull.push_back(g);
  }

  std::vector<std::size_t> result;
  for (std::size_t m = 0; m < hull.size(); ++m) {
    const Group& g = groups[hull[m]];
    if (m + 1 < hull.size()) {
      const Group& next = groups[hull[m + 1]];
      const double k_high = (next.value - g.value) / (next.size - g.size);
      if (!(k_high > 0.0)) continue;
      if (g.value - k_high * g.size > f_min - epsilon_abs) continue;
    }
    result.insert(result.end(), g.members.begin(), g.members.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<PartitionId> select_potentially_optimal(const PartitionLedger& ledger, double epsilon_rel) {
  if (ledger.empty()) throw std::invalid_argument("cannot select from an empty ledger");
  std::vector<double> sizes(ledger.size());
  std::vector<double> values(ledger.size());
  double f_min = std::numeric_limits<double>::infinity();
  for (PartitionId i = 0; i < ledger.size(); ++i) {
    sizes[i] = ledger.half_diagonal(i);
    values[i] = ledger[i].value;
    f_min = std::min(f_min, values[i]);
  }
  return potentially_optimal(sizes, values, direct_epsilon(f_min, epsilon_rel));
}

}  // namespace halo
