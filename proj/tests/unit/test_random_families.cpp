#include <gtest/gtest.h>

#include <dlap/error.hpp>
#include <dlap/families.hpp>
#include <dlap/graph.hpp>
#include <dlap/random.hpp>

#include <cmath>

#include "oracles.hpp"

using namespace dlap;

TEST(SplitMix64, ReferenceStream) {
  // First outputs for seed 0 from the published reference implementation.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, SplitIsIndependentOfParentState) {
  SplitMix64 a(42);
  const auto child_before = a.split(7);
  a();
  const auto child_after = a.split(7);
  SplitMix64 x = child_before, y = child_after;
  EXPECT_NE(x(), y());
  SplitMix64 p(42), q(42);
  SplitMix64 c1 = p.split(3), c2 = q.split(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(c1(), c2());
}

TEST(SplitMix64, Distributions) {
  SplitMix64 rng(1);
  double sum = 0, sq = 0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
    ASSERT_LT(rng.below(7), 7u);
  }
  EXPECT_NEAR(sum / n, 0.0, 0.02);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(BalancedUnit, SumsToZeroWithUnitNorm) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto y = random_balanced_unit(2 + rng.below(20), rng);
    double s = 0, n2 = 0;
    for (double x : y) {
      s += x;
      n2 += x * x;
    }
    EXPECT_NEAR(s, 0, 1e-12);
    EXPECT_NEAR(n2, 1, 1e-12);
  }
}

TEST(Families, NamedInstances) {
  FamilySpec path{.kind = FamilyKind::Path, .n = 5};
  EXPECT_EQ(*generate_one(path, 0).graph, path_graph(5));
  FamilySpec kb{.kind = FamilyKind::CompleteBipartitePlus, .a = 2, .b = 3, .extra = 0};
  EXPECT_TRUE(oracle::permutation_isomorphic(*generate_one(kb, 0).graph, complete_bipartite_graph(2, 3)));
  const Graph bb = barbell_graph(4, 4);
  EXPECT_EQ(bb.order(), 11u);
  EXPECT_EQ(bb.size(), 6u + 6u + 4u);
  EXPECT_TRUE(is_connected(bb));
  EXPECT_EQ(bfs_apsp(bb)(0, 10), 1 + 4 + 1);
}

TEST(Families, KeysAndParsing) {
  EXPECT_EQ(parse_family_kind("random_connected"), FamilyKind::RandomConnected);
  EXPECT_EQ(parse_family_kind("random-cayley"), FamilyKind::RandomCayley);
  EXPECT_THROW(parse_family_kind("petersen"), ValidationError);
  FamilySpec rc{.kind = FamilyKind::RandomConnected, .n = 8, .p = 0.3, .seed = 7};
  EXPECT_EQ(rc.key(), "random-connected:n=8,p=0.3");
  FamilySpec bad{.kind = FamilyKind::Cycle, .n = 2};
  EXPECT_THROW(bad.validate(), ValidationError);
  FamilySpec too_many{.kind = FamilyKind::CompleteBipartitePlus, .a = 2, .b = 3, .extra = 4};
  EXPECT_THROW(too_many.validate(), ValidationError);
}

TEST(Families, DeterministicAndIndexAddressable) {
  FamilySpec rc{.kind = FamilyKind::RandomConnected, .n = 9, .p = 0.3, .seed = 99};
  const auto a = generate(rc, 20);
  const auto b = generate(rc, 20);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(*a[i].graph, *b[i].graph);
    EXPECT_EQ(*generate_one(rc, i).graph, *a[i].graph);
  }
  rc.seed = 100;
  const auto c = generate(rc, 20);
  std::size_t same = 0;
  for (std::size_t i = 0; i < 20; ++i) same += (*a[i].graph == *c[i].graph);
  EXPECT_LT(same, 20u);
}

TEST(Families, EveryInstanceIsAValidMetric) {
  const std::vector<FamilySpec> specs{
      {.kind = FamilyKind::RandomConnected, .n = 7, .p = 0.3, .seed = 1},
      {.kind = FamilyKind::RandomMetric, .n = 9, .seed = 2},
      {.kind = FamilyKind::RandomCayley, .group = "Z3xZ5", .set_size = 2, .seed = 3},
      {.kind = FamilyKind::CompleteBipartitePlus, .a = 3, .b = 4, .extra = 5, .seed = 4},
  };
  for (const auto& spec : specs) {
    for (const auto& inst : generate(spec, 30)) {
      std::vector<std::vector<double>> raw(inst.metric.size(), std::vector<double>(inst.metric.size()));
      for (std::size_t u = 0; u < raw.size(); ++u)
        for (std::size_t v = 0; v < raw.size(); ++v) raw[u][v] = inst.metric.real(u, v);
      EXPECT_NO_THROW(validate_metric(raw, 1e-12)) << inst.label;
    }
  }
}

TEST(Families, RandomMetricIsNotAGraph) {
  SplitMix64 rng(5);
  const auto m = random_metric(6, rng);
  EXPECT_FALSE(m.from_graph);
  EXPECT_FALSE(m.exact.has_value());
}
