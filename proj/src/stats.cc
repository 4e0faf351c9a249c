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

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>
#include <fmt/format.h>

#include "popdisc/errors.h"

namespace popdisc::stats {
namespace {

double SumSquaredDeviations(std::span<const double> x, double center) {
  double sum = 0.0;
  for (double v : x) sum += (v - center) * (v - center);
  return sum;
}

void RequireFinite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InputError("non-finite observation");
  }
}

}  // namespace

double Mean(std::span<const double> x) {
  if (x.empty()) throw DegenerateDataError("mean of an empty sample");
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  // Second pass removes most of the rounding error of the first.
  double correction = 0.0;
  for (double v : x) correction += v - mean;
  return mean + correction / static_cast<double>(x.size());
}

double Variance(std::span<const double> x) {
  if (x.size() < 2) throw DegenerateDataError("variance needs >= 2 values");
  return SumSquaredDeviations(x, Mean(x)) / static_cast<double>(x.size() - 1);
}

double PValueFromT(double t, double dof) {
  if (!(dof > 0.0)) throw InputError("degrees of freedom must be positive");
  if (std::isnan(t)) throw InputError("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = dof / (dof + t * t);
  return std::clamp(boost::math::ibeta(dof / 2.0, 0.5, x), 0.0, 1.0);
}

double PValueFromF(double f, double dof1, double dof2) {
  if (!(dof1 > 0.0) || !(dof2 > 0.0)) {
    throw InputError("degrees of freedom must be positive");
  }
  if (std::isinf(f)) return 0.0;
  if (f <= 0.0) return 1.0;
  const double x = dof2 / (dof2 + dof1 * f);
  return std::clamp(boost::math::ibeta(dof2 / 2.0, dof1 / 2.0, x), 0.0, 1.0);
}

TestResult OneWayAnova(const GroupedSample& groups) {
  std::vector<std::vector<double>> values;
  values.reserve(groups.size());
  for (const auto& [name, observations] : groups) values.push_back(observations);
  return OneWayAnova(values);
}

TestResult OneWayAnova(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw DegenerateDataError("ANOVA needs >= 2 groups");
  std::vector<double> all;
  for (const auto& group : groups) {
    if (group.size() < 2) {
      throw DegenerateDataError("ANOVA needs >= 2 observations per group");
    }
    RequireFinite(group);
    all.insert(all.end(), group.begin(), group.end());
  }
  const double grand = Mean(all);
  double ss_between = 0.0, ss_within = 0.0;
  for (const auto& group : groups) {
    const double m = Mean(group);
    ss_between += static_cast<double>(group.size()) * (m - grand) * (m - grand);
    ss_within += SumSquaredDeviations(group, m);
  }
  const double ss_total = SumSquaredDeviations(all, grand);
  if (ss_total == 0.0) {
    throw DegenerateDataError("ANOVA on data with zero total variance");
  }
  TestResult result;
  result.dof = static_cast<double>(groups.size() - 1);
  result.dof2 = static_cast<double>(all.size() - groups.size());
  const double ms_between = ss_between / result.dof;
  const double ms_within = ss_within / *result.dof2;
  result.statistic = ms_within == 0.0
                         ? std::numeric_limits<double>::infinity()
                         : ms_between / ms_within;
  result.p_value = PValueFromF(result.statistic, result.dof, *result.dof2);
  result.effect_size = std::clamp(ss_between / ss_total, 0.0, 1.0);
  return result;
}

TestResult TTestIndependent(std::span<const double> a, std::span<const double> b,
                            TVariant variant) {
  if (a.size() < 2 || b.size() < 2) {
    throw DegenerateDataError("t-test needs >= 2 observations per group");
  }
  RequireFinite(a);
  RequireFinite(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = Variance(a), vb = Variance(b);
  const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
  if (pooled == 0.0) throw DegenerateDataError("zero pooled variance");

  TestResult result;
  result.mean_difference = Mean(a) - Mean(b);
  result.effect_size = result.mean_difference / std::sqrt(pooled);
  if (variant == TVariant::kPooled) {
    result.dof = na + nb - 2.0;
    result.statistic =
        result.mean_difference / std::sqrt(pooled * (1.0 / na + 1.0 / nb));
  } else {
    const double sa = va / na, sb = vb / nb;
    result.statistic = result.mean_difference / std::sqrt(sa + sb);
    const double denom = (va == 0.0 ? 0.0 : sa * sa / (na - 1.0)) +
                         (vb == 0.0 ? 0.0 : sb * sb / (nb - 1.0));
    result.dof = (sa + sb) * (sa + sb) / denom;
  }
  result.p_value = PValueFromT(result.statistic, result.dof);
  return result;
}

TestResult TTestPaired(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InputError("paired t-test needs samples of equal size");
  }
  if (a.size() < 2) throw DegenerateDataError("paired t-test needs >= 2 pairs");
  RequireFinite(a);
  RequireFinite(b);
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  TestResult result;
  result.dof = static_cast<double>(diff.size() - 1);
  result.mean_difference = Mean(diff);
  const double var = Variance(diff);
  if (var == 0.0) {
    if (std::all_of(diff.begin(), diff.end(), [](double d) { return d == 0.0; })) {
      result.statistic = 0.0;
      result.p_value = 1.0;
      result.effect_size = 0.0;
      result.mean_difference = 0.0;
      return result;
    }
    throw DegenerateDataError("paired differences have zero variance");
  }
  const double sd = std::sqrt(var);
  result.statistic =
      result.mean_difference / (sd / std::sqrt(static_cast<double>(diff.size())));
  result.effect_size = result.mean_difference / sd;
  result.p_value = PValueFromT(result.statistic, result.dof);
  return result;
}

BonferroniResult Bonferroni(std::span<const double> p_values, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must be in (0, 1)");
  BonferroniResult result;
  result.threshold =
      p_values.empty() ? alpha : alpha / static_cast<double>(p_values.size());
  for (double p : p_values) result.significant.push_back(p < result.threshold);
  return result;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("Pearson needs equal-length samples");
  if (x.size() < 2) throw DegenerateDataError("Pearson needs >= 2 pairs");
  RequireFinite(x);
  RequireFinite(y);
  const double mx = Mean(x), my = Mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateDataError("Pearson correlation with zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace popdisc::stats
