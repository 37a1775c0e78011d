#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "halo/lipschitz.hpp"
#include "halo/partitioner.hpp"
#include "halo/testbed.hpp"

using namespace halo;

namespace {

ObjectiveHandle unit_objective(std::size_t n, Evaluator f) { return ObjectiveHandle(std::move(f), BoxDomain::unit(n)); }

PointEvaluator from(const Evaluator& f) {
  return [f](std::span<const double> q) -> std::optional<double> { return f(q); };
}

Partition box(Point center, Point half_sides) {
  const std::size_t n = center.size();
  return Partition{0, std::move(center), std::move(half_sides), 0.0, Point(n, 0.0)};
}

// Divides partition `id` of `ledger` with the objective `f`, full update.
std::vector<PartitionId> divide(PartitionLedger& ledger, PartitionId id, const Evaluator& f) {
  SamplePlan plan = plan_sample(ledger[id]);
  EXPECT_TRUE(evaluate_plan(plan, from(f)));
  const auto ids = divide_partition(ledger, plan, division_order(plan));
  update_slopes_on_division(ledger, id, plan, ids);
  return ids;
}

}  // namespace

TEST(InitRoot, SingleCenterEvaluation) {
  for (std::size_t n : {1u, 2u, 10u}) {
    ObjectiveHandle obj = unit_objective(n, [](std::span<const double> x) { return x[0]; });
    const PartitionLedger ledger = init_root(obj);
    EXPECT_EQ(obj.eval_count(), 1u);
    ASSERT_EQ(ledger.size(), 1u);
    EXPECT_EQ(ledger[0].center, Point(n, 0.5));
    EXPECT_EQ(ledger[0].half_sides, Point(n, 0.5));
    EXPECT_DOUBLE_EQ(ledger.half_diagonal(0), std::sqrt(static_cast<double>(n)) / 2.0);
  }
}

TEST(LongestSides, TiesAndSingles) {
  EXPECT_EQ(longest_sides(box({0.5, 0.5}, {0.5, 0.5})), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(longest_sides(box({0.5, 0.5}, {0.5, 1.0 / 6.0})), (std::vector<std::size_t>{0}));
  EXPECT_EQ(longest_sides(box({0.5, 0.5, 0.5}, {1.0 / 6.0, 1.0 / 6.0, 0.5})), (std::vector<std::size_t>{2}));
}

TEST(PlanSample, RootOfUnitSquare) {
  const SamplePlan plan = plan_sample(box({0.5, 0.5}, {0.5, 0.5}));
  EXPECT_DOUBLE_EQ(plan.delta, 1.0 / 3.0);
  ASSERT_EQ(plan.coords, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(plan.evaluations(), 4u);
  EXPECT_DOUBLE_EQ(plan.points[0][0][0], 0.5 + 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(plan.points[0][1][0], 0.5 - 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(plan.points[0][0][1], 0.5);
  EXPECT_DOUBLE_EQ(plan.points[1][0][1], 0.5 + 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(plan.points[1][1][0], 0.5);
}

TEST(PlanSample, OneDimensionalRoot) {
  const SamplePlan plan = plan_sample(box({0.5}, {0.5}));
  EXPECT_DOUBLE_EQ(plan.points[0][0][0], 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(plan.points[0][1][0], 1.0 / 6.0);
}

TEST(PlanSample, OnlyLongestSide) {
  const SamplePlan plan = plan_sample(box({0.3, 0.5}, {1.0 / 6.0, 0.5}));
  EXPECT_DOUBLE_EQ(plan.delta, 1.0 / 3.0);
  ASSERT_EQ(plan.coords, (std::vector<std::size_t>{1}));
  EXPECT_DOUBLE_EQ(plan.points[0][0][0], 0.3);
  EXPECT_DOUBLE_EQ(plan.points[0][0][1], 0.5 + 1.0 / 3.0);
}

TEST(DivisionOrder, SortsBySmallerValueWithIndexTies) {
  SamplePlan plan = plan_sample(box({0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}));
  plan.values = {{3.0, 1.0}, {0.5, 4.0}, {2.0, 1.0}};
  EXPECT_EQ(division_order(plan), (DivisionOrder{1, 0, 2}));
}

TEST(DividePartition, RootOrderZeroThenOne) {
  PartitionLedger ledger = root_ledger(2, 0.0);
  SamplePlan plan = plan_sample(ledger[0]);
  plan.values = {{1.0, 1.0}, {2.0, 2.0}};
  const auto ids = divide_partition(ledger, plan, {0, 1});
  ASSERT_EQ(ledger.size(), 5u);
  const double s = 1.0 / 6.0;
  EXPECT_EQ(ledger[ids[0]].half_sides, (Point{s, 0.5}));
  EXPECT_EQ(ledger[ids[1]].half_sides, (Point{s, 0.5}));
  EXPECT_EQ(ledger[ids[2]].half_sides, (Point{s, s}));
  EXPECT_EQ(ledger[ids[3]].half_sides, (Point{s, s}));
  EXPECT_EQ(ledger[0].half_sides, (Point{s, s}));
  EXPECT_NEAR(ledger.total_volume(), 1.0, 1e-15);
}

TEST(DividePartition, RootOrderOneThenZeroIsMirrored) {
  PartitionLedger ledger = root_ledger(2, 0.0);
  SamplePlan plan = plan_sample(ledger[0]);
  plan.values = {{2.0, 2.0}, {1.0, 1.0}};
  const auto ids = divide_partition(ledger, plan, division_order(plan));
  const double s = 1.0 / 6.0;
  EXPECT_EQ(ledger[ids[2]].half_sides, (Point{0.5, s}));
  EXPECT_EQ(ledger[ids[3]].half_sides, (Point{0.5, s}));
  EXPECT_EQ(ledger[ids[0]].half_sides, (Point{s, s}));
  EXPECT_EQ(ledger[0].half_sides, (Point{s, s}));
}

TEST(DividePartition, OneDimensionalRootGivesThreeThirds) {
  PartitionLedger ledger = root_ledger(1, 0.0);
  divide(ledger, 0, [](std::span<const double> x) { return x[0]; });
  ASSERT_EQ(ledger.size(), 3u);
  for (const auto& p : ledger) EXPECT_DOUBLE_EQ(p.half_sides[0], 1.0 / 6.0);
}

TEST(DividePartition, SampledPointsBecomeCenters) {
  PartitionLedger ledger = root_ledger(3, 0.0);
  const Evaluator f = [](std::span<const double> x) { return x[0] - 2.0 * x[1] + x[2] * x[2]; };
  SamplePlan plan = plan_sample(ledger[0]);
  ASSERT_TRUE(evaluate_plan(plan, from(f)));
  const auto ids = divide_partition(ledger, plan, division_order(plan));
  ASSERT_EQ(ids.size(), plan.evaluations());
  for (std::size_t k = 0; k < plan.coords.size(); ++k) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(ledger[ids[2 * k + j]].center, plan.points[k][j]);
      EXPECT_EQ(ledger[ids[2 * k + j]].value, plan.values[k][j]);
    }
  }
  std::vector<PartitionId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(DividePartition, LowestNewValueGetsLargestChild) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    Point a(n);
    for (double& v : a) v = rng.uniform(-1.0, 1.0);
    const Evaluator f = [a](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::sin(3.0 * a[i] * x[i] + a[i]);
      return s;
    };
    PartitionLedger ledger = root_ledger(n, f(Point(n, 0.5)));
    const auto ids = divide(ledger, 0, f);
    PartitionId lowest = ids[0];
    double biggest = 0.0;
    for (PartitionId id : ids) {
      if (ledger[id].value < ledger[lowest].value) lowest = id;
      biggest = std::max(biggest, ledger.half_diagonal(id));
    }
    EXPECT_DOUBLE_EQ(ledger.half_diagonal(lowest), biggest);
  }
}

TEST(DividePartition, VolumeConservedOverManyDivisions) {
  Rng rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Evaluator f = [](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += std::cos(7.0 * v) + v;
      return s;
    };
    PartitionLedger ledger = root_ledger(n, f(Point(n, 0.5)));
    while (ledger.size() < 3000) divide(ledger, rng.below(ledger.size()), f);
    EXPECT_NEAR(ledger.total_volume(), 1.0, 1e-9);
  }
}

TEST(DividePartition, ChainShrinksStrictly) {
  const Evaluator f = [](std::span<const double> x) { return x[0] * x[0] + x[1]; };
  PartitionLedger ledger = root_ledger(2, f(Point{0.5, 0.5}));
  double previous = ledger.half_diagonal(0);
  for (int k = 0; k < 30; ++k) {
    divide(ledger, 0, f);
    const double now = ledger.half_diagonal(0);
    EXPECT_LT(now, previous);
    previous = now;
  }
  EXPECT_LT(previous, 1e-4);
}

TEST(SamplePartition, ThrowsBeforeEvaluatingPastBudget) {
  ObjectiveHandle obj = unit_objective(2, [](std::span<const double> x) { return x[0]; });
  const PartitionLedger ledger = init_root(obj);
  StopRule stop;
  stop.max_fun_evals = 4;
  EXPECT_THROW(sample_partition(ledger, 0, obj, stop), BudgetExhausted);
  EXPECT_EQ(obj.eval_count(), 1u);
  stop.max_fun_evals = 5;
  const SamplePlan plan = sample_partition(ledger, 0, obj, stop);
  EXPECT_TRUE(plan.evaluated());
  EXPECT_EQ(obj.eval_count(), 5u);
}

TEST(EvaluatePlan, StopRequestDiscardsPartialValues) {
  SamplePlan plan = plan_sample(box({0.5, 0.5}, {0.5, 0.5}));
  int calls = 0;
  const bool done = evaluate_plan(plan, [&calls](std::span<const double>) -> std::optional<double> {
    if (++calls > 2) return std::nullopt;
    return 1.0;
  });
  EXPECT_FALSE(done);
  EXPECT_FALSE(plan.evaluated());
  PartitionLedger ledger = root_ledger(2, 0.0);
  EXPECT_THROW(divide_partition(ledger, plan, {0, 1}), std::logic_error);
}
