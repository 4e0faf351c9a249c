// Copyright 2026 The popdisc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popdisc/stats.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "popdisc/errors.h"

namespace popdisc::stats {
namespace {

constexpr double kRel = 1e-9;
constexpr int kInstances = 25;

std::vector<double> RandomSample(std::mt19937_64& rng, int n, double shift) {
  std::normal_distribution<double> normal(shift, 1.0 + (rng() % 3));
  std::vector<double> x(n);
  for (double& v : x) v = normal(rng);
  return x;
}

#define EXPECT_REL(got, want) \
  EXPECT_LE(oracle::RelativeError((got), (want)), kRel) << (got) << " vs " << (want)

TEST(Descriptive, MeanAndVariance) {
  std::vector<double> x = {2, 4, 4, 4, 5, 5, 7, 9};
  EXPECT_DOUBLE_EQ(Mean(x), 5.0);
  EXPECT_DOUBLE_EQ(Variance(x), 32.0 / 7.0);
  EXPECT_THROW(Mean(std::vector<double>{}), DegenerateDataError);
}

TEST(PValue, TableValues) {
  EXPECT_DOUBLE_EQ(PValueFromT(0.0, 10), 1.0);
  EXPECT_NEAR(PValueFromT(1.96, 1e6), 0.0500, 1e-4);
  EXPECT_NEAR(PValueFromT(2.776, 4), 0.050, 1e-3);
  EXPECT_NEAR(PValueFromT(-2.776, 4), PValueFromT(2.776, 4), 1e-15);
  EXPECT_THROW(PValueFromT(1.0, 0.0), InputError);
}

TEST(PValue, MatchesQuadratureOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> t_dist(0.0, 6.0);
  std::uniform_real_distribution<double> f_dist(0.05, 12.0);
  for (int i = 0; i < kInstances; ++i) {
    const double dof = 2 + static_cast<double>(rng() % 60);
    const double t = t_dist(rng);
    EXPECT_REL(PValueFromT(t, dof), oracle::TwoSidedTPValue(t, dof));
    const double d1 = 1 + static_cast<double>(rng() % 6);
    const double d2 = 3 + static_cast<double>(rng() % 80);
    const double f = f_dist(rng);
    EXPECT_REL(PValueFromF(f, d1, d2), oracle::FTailPValue(f, d1, d2));
  }
}

TEST(Anova, IdenticalGroupsGiveZero) {
  const std::vector<std::vector<double>> groups = {{1, 2, 3}, {1, 2, 3}};
  const TestResult r = OneWayAnova(groups);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.effect_size, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(Anova, HandBuiltThreeGroups) {
  const std::vector<std::vector<double>> groups = {
      {3, 5, 4, 6}, {8, 9, 7, 10, 9}, {1, 2, 2, 3}};
  const TestResult r = OneWayAnova(groups);
  const auto o = oracle::Anova(groups);
  EXPECT_LE(oracle::RelativeError(r.statistic, o.f), 1e-10);
  EXPECT_LE(oracle::RelativeError(r.effect_size, o.eta_sq), 1e-10);
  EXPECT_EQ(r.dof, 2.0);
  EXPECT_EQ(*r.dof2, 10.0);
}

TEST(Anova, MatchesSumOfSquaresOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < kInstances; ++i) {
    const int k = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<double>> groups;
    for (int g = 0; g < k; ++g) {
      groups.push_back(RandomSample(rng, 3 + static_cast<int>(rng() % 8),
                                    0.4 * g));
    }
    const TestResult r = OneWayAnova(groups);
    const auto o = oracle::Anova(groups);
    EXPECT_REL(r.statistic, o.f);
    EXPECT_REL(r.effect_size, o.eta_sq);
    EXPECT_REL(r.p_value, oracle::FTailPValue(o.f, o.df1, o.df2));
  }
}

TEST(Anova, NamedGroupsAndErrors) {
  GroupedSample named = {{"a", {1, 2, 3}}, {"b", {4, 5, 6}}};
  EXPECT_GT(OneWayAnova(named).statistic, 0.0);
  GroupedSample single = {{"a", {1, 2, 3}}};
  EXPECT_THROW(OneWayAnova(single), DegenerateDataError);
  GroupedSample flat = {{"a", {2, 2}}, {"b", {2, 2}}};
  EXPECT_THROW(OneWayAnova(flat), DegenerateDataError);
}

TEST(TTest, EqualSamples) {
  const std::vector<double> a = {1, 2, 3, 4};
  const TestResult r = TTestIndependent(a, a);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.effect_size, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(TTest, ClosedFormHandExample) {
  // a=(0,0,1,1), b=(1,1,2,2): both variances 1/3, pooled 1/3,
  // t = -1 / sqrt(1/3 * 1/2) = -sqrt(6), d = -sqrt(3), dof 6.
  const std::vector<double> a = {0, 0, 1, 1}, b = {1, 1, 2, 2};
  const TestResult r = TTestIndependent(a, b);
  EXPECT_LE(oracle::RelativeError(r.statistic, -std::sqrt(6.0)), 1e-10);
  EXPECT_LE(oracle::RelativeError(r.effect_size, -std::sqrt(3.0)), 1e-10);
  EXPECT_EQ(r.dof, 6.0);
  EXPECT_LE(oracle::RelativeError(r.p_value,
                                  oracle::TwoSidedTPValue(std::sqrt(6.0), 6)),
            1e-10);
}

TEST(TTest, PooledAndWelchMatchClosedForm) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < kInstances; ++i) {
    const auto a = RandomSample(rng, 3 + static_cast<int>(rng() % 10), 0.0);
    const auto b = RandomSample(rng, 3 + static_cast<int>(rng() % 10), 0.7);
    const double na = a.size(), nb = b.size();
    const double va = oracle::VarianceOf(a), vb = oracle::VarianceOf(b);
    const double diff = oracle::MeanOf(a) - oracle::MeanOf(b);
    const double sp2 = ((na - 1) * va + (nb - 1) * vb) / (na + nb - 2);
    const double t_pooled = diff / std::sqrt(sp2 * (1 / na + 1 / nb));

    const TestResult pooled = TTestIndependent(a, b);
    EXPECT_REL(pooled.statistic, t_pooled);
    EXPECT_REL(pooled.effect_size, diff / std::sqrt(sp2));
    EXPECT_EQ(pooled.dof, na + nb - 2);
    EXPECT_REL(pooled.p_value, oracle::TwoSidedTPValue(t_pooled, na + nb - 2));

    const double se2 = va / na + vb / nb;
    const double t_welch = diff / std::sqrt(se2);
    const double dof_welch =
        se2 * se2 / ((va / na) * (va / na) / (na - 1) +
                     (vb / nb) * (vb / nb) / (nb - 1));
    const TestResult welch = TTestIndependent(a, b, TVariant::kWelch);
    EXPECT_REL(welch.statistic, t_welch);
    EXPECT_REL(welch.dof, dof_welch);
    EXPECT_REL(welch.p_value, oracle::TwoSidedTPValue(t_welch, dof_welch));
  }
}

TEST(TTest, TwoGroupAnovaEqualsTSquared) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < kInstances; ++i) {
    const auto a = RandomSample(rng, 4 + static_cast<int>(rng() % 10), 0.0);
    const auto b = RandomSample(rng, 4 + static_cast<int>(rng() % 10), 1.0);
    const double t = TTestIndependent(a, b).statistic;
    const std::vector<std::vector<double>> groups = {a, b};
    const TestResult f = OneWayAnova(groups);
    EXPECT_REL(f.statistic, t * t);
    EXPECT_REL(f.p_value, TTestIndependent(a, b).p_value);
  }
}

TEST(TTest, ZeroPooledVarianceIsAnError) {
  const std::vector<double> a = {1, 1, 1}, b = {2, 2};
  EXPECT_THROW(TTestIndependent(a, b), DegenerateDataError);
}

TEST(PairedTTest, Degenerate) {
  const std::vector<double> a = {1, 2, 3, 4};
  EXPECT_EQ(TTestPaired(a, a).statistic, 0.0);
  EXPECT_DOUBLE_EQ(TTestPaired(a, a).p_value, 1.0);
  const std::vector<double> b = {2, 3, 4, 5};
  EXPECT_THROW(TTestPaired(b, a), DegenerateDataError);
  EXPECT_THROW(TTestPaired(a, std::vector<double>{1, 2}), InputError);
}

TEST(PairedTTest, MatchesClosedForm) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < kInstances; ++i) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const auto a = RandomSample(rng, n, 0.0);
    const auto b = RandomSample(rng, n, 0.5);
    std::vector<double> d(n);
    for (int j = 0; j < n; ++j) d[j] = a[j] - b[j];
    const double sd = std::sqrt(oracle::VarianceOf(d));
    const double t = oracle::MeanOf(d) / (sd / std::sqrt(n));
    const TestResult r = TTestPaired(a, b);
    EXPECT_REL(r.statistic, t);
    EXPECT_REL(r.effect_size, oracle::MeanOf(d) / sd);
    EXPECT_EQ(r.dof, n - 1.0);
    EXPECT_REL(r.p_value, oracle::TwoSidedTPValue(t, n - 1.0));
  }
}

TEST(Bonferroni, Thresholds) {
  const std::vector<double> p = {0.01, 0.02, 0.0125, 0.5};
  const BonferroniResult r = Bonferroni(p, 0.05);
  EXPECT_DOUBLE_EQ(r.threshold, 0.0125);
  EXPECT_EQ(r.significant, (std::vector<bool>{true, false, false, false}));
  EXPECT_DOUBLE_EQ(Bonferroni(std::vector<double>{0.3}, 0.05).threshold, 0.05);
  const std::vector<double> ones(7, 1.0);
  for (bool flag : Bonferroni(ones, 0.05).significant) EXPECT_FALSE(flag);
  EXPECT_THROW(Bonferroni(p, 0.0), InputError);
}

TEST(Bonferroni, RandomFamilies) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 0.1);
  for (int i = 0; i < kInstances; ++i) {
    std::vector<double> p(1 + rng() % 9);
    for (double& v : p) v = u(rng);
    const BonferroniResult r = Bonferroni(p, 0.05);
    EXPECT_REL(r.threshold, 0.05 / p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      EXPECT_EQ(r.significant[j], p[j] * p.size() < 0.05);
    }
  }
}

TEST(Pearson, AffineAndOracle) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  std::vector<double> y, z;
  for (double v : x) {
    y.push_back(2 * v + 3);
    z.push_back(-v);
  }
  EXPECT_DOUBLE_EQ(Pearson(x, y), 1.0);
  EXPECT_DOUBLE_EQ(Pearson(x, z), -1.0);
  EXPECT_THROW(Pearson(x, std::vector<double>(5, 1.0)), DegenerateDataError);

  std::mt19937_64 rng(71);
  for (int i = 0; i < kInstances; ++i) {
    const auto a = RandomSample(rng, 4 + static_cast<int>(rng() % 20), 0.0);
    auto b = RandomSample(rng, static_cast<int>(a.size()), 0.0);
    for (std::size_t j = 0; j < a.size(); ++j) b[j] += 0.5 * a[j];
    EXPECT_REL(Pearson(a, b), oracle::PearsonOf(a, b));
  }
}

}  // namespace
}  // namespace popdisc::stats
