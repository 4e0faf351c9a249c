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

#ifndef POPDISC_STATS_H_
#define POPDISC_STATS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace popdisc::stats {

// Group label -> observations.
using GroupedSample = std::map<std::string, std::vector<double>>;

struct TestResult {
  double statistic = 0.0;
  double dof = 0.0;
  // Second degrees-of-freedom for F tests (within groups).
  std::optional<double> dof2;
  double p_value = 1.0;
  // Cohen's d for t-tests, eta squared for ANOVA.
  double effect_size = 0.0;
  double mean_difference = 0.0;
};

double Mean(std::span<const double> x);
// Sample variance (n - 1 denominator).
double Variance(std::span<const double> x);

// Two-sided p-value of Student's t with `dof` degrees of freedom.
double PValueFromT(double t, double dof);
// Upper-tail p-value of the F distribution.
double PValueFromF(double f, double dof1, double dof2);

// Classical fixed-effects one-way ANOVA; effect_size is SS_between/SS_total.
TestResult OneWayAnova(const GroupedSample& groups);
TestResult OneWayAnova(std::span<const std::vector<double>> groups);

enum class TVariant { kPooled, kWelch };

// t for mean(a) - mean(b), two-sided p, Cohen's d with the pooled SD.
TestResult TTestIndependent(std::span<const double> a, std::span<const double> b,
                            TVariant variant = TVariant::kPooled);

// Paired t on a - b; d = mean(diff) / sd(diff). Identical samples give t = 0
// and p = 1; a nonzero constant difference has no variance and throws.
TestResult TTestPaired(std::span<const double> a, std::span<const double> b);

struct BonferroniResult {
  double threshold = 0.0;
  std::vector<bool> significant;
};

BonferroniResult Bonferroni(std::span<const double> p_values, double alpha);

double Pearson(std::span<const double> x, std::span<const double> y);

}  // namespace popdisc::stats

#endif  // POPDISC_STATS_H_
