#include <gtest/gtest.h>

#include <cmath>

#include "halo/lipschitz.hpp"
#include "halo/partitioner.hpp"
#include "halo/testbed.hpp"

using namespace halo;

namespace {

struct Division {
  SamplePlan plan;
  std::vector<PartitionId> children;
};

Division divide(PartitionLedger& ledger, PartitionId id, const Evaluator& f) {
  Division d{plan_sample(ledger[id]), {}};
  evaluate_plan(d.plan, [&f](std::span<const double> q) -> std::optional<double> { return f(q); });
  d.children = divide_partition(ledger, d.plan, division_order(d.plan));
  update_slopes_on_division(ledger, id, d.plan, d.children);
  return d;
}

PartitionLedger rooted(std::size_t n, const Evaluator& f) { return root_ledger(n, f(Point(n, 0.5))); }

}  // namespace

TEST(Slopes, LinearFunctionOneDimension) {
  const Evaluator f = [](std::span<const double> x) { return 3.0 * x[0]; };
  PartitionLedger ledger = rooted(1, f);
  divide(ledger, 0, f);
  for (const Partition& p : ledger) EXPECT_NEAR(p.slopes[0], 3.0, 1e-12);
}

TEST(Slopes, ConstantFunctionHasZeroSlopes) {
  const Evaluator f = [](std::span<const double>) { return 2.0; };
  PartitionLedger ledger = rooted(3, f);
  divide(ledger, 0, f);
  divide(ledger, 2, f);
  for (const Partition& p : ledger) {
    for (double g : p.slopes) EXPECT_EQ(g, 0.0);
  }
  EXPECT_EQ(global_slope_max(ledger), 0.0);
}

TEST(Slopes, SquareAlongFirstCoordinate) {
  const Evaluator f = [](std::span<const double> x) { return x[0] * x[0]; };
  PartitionLedger ledger = rooted(2, f);
  divide(ledger, 0, f);
  // Independent long-double central difference at the root center.
  const long double hi = 5.0L / 6.0L, lo = 1.0L / 6.0L;
  const long double expected = (hi * hi - lo * lo) / (2.0L / 3.0L);
  EXPECT_NEAR(ledger[0].slopes[0], static_cast<double>(expected), 1e-15);
  EXPECT_NEAR(ledger[0].slopes[0], 1.0, 1e-15);
  EXPECT_EQ(ledger[0].slopes[1], 0.0);
}

TEST(Slopes, ChildrenInheritParentRowExceptCutCoordinate) {
  const Evaluator f = [](std::span<const double> x) { return 2.0 * x[0] + x[1] * x[1]; };
  PartitionLedger ledger = rooted(2, f);
  divide(ledger, 0, f);
  const Point before = ledger[0].slopes;
  const Division d = divide(ledger, 0, f);
  ASSERT_EQ(d.plan.coords.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t p = d.plan.coords[k];
    for (std::size_t j = 0; j < 2; ++j) {
      const Partition& child = ledger[d.children[2 * k + j]];
      EXPECT_EQ(child.slopes[1 - p], before[1 - p]);
      EXPECT_DOUBLE_EQ(child.slopes[p], std::abs(d.plan.values[k][j] - ledger[0].value) / d.plan.delta);
    }
  }
}

TEST(Slopes, AffineParentsExactAndGlobalConverges) {
  Rng rng(8);
  for (std::size_t n = 1; n <= 5; ++n) {
    Point a(n);
    for (double& v : a) v = rng.uniform(-4.0, 4.0);
    const Evaluator f = [a](std::span<const double> x) {
      double s = 0.7;
      for (std::size_t i = 0; i < x.size(); ++i) s += a[i] * x[i];
      return s;
    };
    PartitionLedger ledger = rooted(n, f);
    for (int k = 0; k < 40; ++k) {
      const PartitionId id = k == 0 ? 0 : rng.below(ledger.size());
      const Division d = divide(ledger, id, f);
      for (std::size_t p : d.plan.coords) EXPECT_NEAR(ledger[id].slopes[p], std::abs(a[p]), 1e-12);
    }
    double norm = 0.0;
    for (double v : a) norm += v * v;
    EXPECT_NEAR(global_slope_max(ledger), std::sqrt(norm), 1e-9);
  }
}

TEST(Slopes, ForwardDifferenceErrorShrinksWithDelta) {
  const Evaluator f = [](std::span<const double> x) { return x[0] * x[0] + 0.5 * x[1] * x[1] + x[0] * x[1]; };
  const auto true_slope = [](const Point& x, std::size_t p) {
    return p == 0 ? std::abs(2.0 * x[0] + x[1]) : std::abs(x[1] + x[0]);
  };
  PartitionLedger ledger = rooted(2, f);
  std::vector<std::vector<double>> errors(2);
  for (int k = 0; k < 10; ++k) {
    const Division d = divide(ledger, 0, f);
    for (std::size_t i = 0; i < d.plan.coords.size(); ++i) {
      const std::size_t p = d.plan.coords[i];
      const Partition& child = ledger[d.children[2 * i]];
      errors[p].push_back(std::abs(child.slopes[p] - true_slope(child.center, p)));
    }
  }
  for (const auto& e : errors) {
    ASSERT_GE(e.size(), 5u);
    for (std::size_t k = 1; k < 5; ++k) EXPECT_LE(e[k], 0.5 * e[k - 1] + 1e-14);
  }
}

TEST(GlobalSlopeMax, Examples) {
  PartitionLedger one(2);
  one.add({0.5, 0.5}, {0.5, 0.5}, 0.0, {3.0, 4.0});
  EXPECT_DOUBLE_EQ(global_slope_max(one), 5.0);
  PartitionLedger two(2);
  two.add({0.5, 0.5}, {0.5, 0.5}, 0.0, {1.0, 0.0});
  two.add({0.5, 0.5}, {0.5, 0.5}, 0.0, {0.0, 2.0});
  EXPECT_DOUBLE_EQ(global_slope_max(two), 2.0);
}

TEST(Blend, Examples) {
  EXPECT_DOUBLE_EQ(blend(0.5, 10.0, 2.0), 6.0);
  EXPECT_EQ(blend(1.0, 7.25, 1.0), 7.25);
  EXPECT_EQ(blend(0.3, 4.5, 4.5), 4.5);
  EXPECT_EQ(blend(0.0, 4.5, 1.5), 1.5);
}

TEST(Blend, RootUsesGlobalConstant) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const PartitionLedger ledger = root_ledger(n, 0.0);
    EXPECT_DOUBLE_EQ(size_weight(ledger[0]), 1.0);
    EXPECT_EQ(blend_local_constant(ledger[0], 3.7), 3.7);
  }
}

TEST(Blend, StaysBetweenArgumentsOnRandomTriples) {
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    const double alpha = rng.uniform();
    const double global = rng.uniform(0.0, 1e3) * std::pow(10.0, rng.uniform(-6.0, 6.0));
    const double local = rng.uniform(0.0, 1e3) * std::pow(10.0, rng.uniform(-6.0, 6.0));
    const double out = blend(alpha, global, local);
    ASSERT_GE(out, std::min(global, local));
    ASSERT_LE(out, std::max(global, local));
    ASSERT_EQ(blend(1.0, global, local), global);
  }
}

TEST(LocalConstants, BracketedForEveryPartition) {
  const Evaluator f = [](std::span<const double> x) { return std::sin(5.0 * x[0]) * std::cos(3.0 * x[1]); };
  PartitionLedger ledger = rooted(2, f);
  Rng rng(4);
  for (int k = 0; k < 100; ++k) divide(ledger, rng.below(ledger.size()), f);
  const double global = global_slope_max(ledger);
  const auto constants = local_constants(ledger);
  for (PartitionId i = 0; i < ledger.size(); ++i) {
    EXPECT_GE(constants[i], std::min(ledger.slope_norm(i), global));
    EXPECT_LE(constants[i], std::max(ledger.slope_norm(i), global));
    EXPECT_DOUBLE_EQ(constants[i], blend_local_constant(ledger[i], global));
  }
}

TEST(LowerBound, Examples) {
  Partition p{0, {0.5}, {0.25}, 1.0, {0.0}};
  EXPECT_DOUBLE_EQ(lower_bound(p, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(lower_bound(p, 0.0), 1.0);
  Partition root{0, {0.5, 0.5}, {0.5, 0.5}, 0.0, {0.0, 0.0}};
  EXPECT_DOUBLE_EQ(lower_bound(root, 1.0), -std::sqrt(2.0) / 2.0);
}
