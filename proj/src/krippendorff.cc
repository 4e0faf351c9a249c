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

#include "popdisc/krippendorff.h"

#include <algorithm>

#include "popdisc/errors.h"

namespace popdisc::stats {

std::map<int, std::map<int, double>> CoincidenceMatrix(
    const CodingMatrix& annotations) {
  std::size_t items = 0;
  for (const auto& row : annotations) items = std::max(items, row.size());
  std::map<int, std::map<int, double>> o;
  std::map<int, int> counts;
  for (std::size_t u = 0; u < items; ++u) {
    counts.clear();
    int m = 0;
    for (const auto& row : annotations) {
      if (u < row.size() && row[u]) {
        ++counts[*row[u]];
        ++m;
      }
    }
    if (m < 2) continue;
    const double weight = 1.0 / (m - 1);
    for (const auto& [c, nc] : counts) {
      for (const auto& [k, nk] : counts) {
        const double pairs = c == k ? nc * (nc - 1.0) : nc * static_cast<double>(nk);
        if (pairs > 0.0) o[c][k] += pairs * weight;
      }
    }
  }
  return o;
}

double KrippendorffAlphaNominal(const CodingMatrix& annotations) {
  const auto o = CoincidenceMatrix(annotations);
  std::map<int, double> marginals;
  double n = 0.0;
  double observed = 0.0;
  for (const auto& [c, row] : o) {
    for (const auto& [k, value] : row) {
      marginals[c] += value;
      n += value;
      if (c != k) observed += value;
    }
  }
  if (n == 0.0) {
    throw DegenerateDataError("Krippendorff's alpha needs an item coded twice");
  }
  double expected = 0.0;
  for (const auto& [c, nc] : marginals) {
    for (const auto& [k, nk] : marginals) {
      if (c != k) expected += nc * nk;
    }
  }
  if (expected == 0.0) return 1.0;
  return 1.0 - (n - 1.0) * observed / expected;
}

MultiLabelAlpha KrippendorffAlphaLabels(
    const std::vector<std::vector<std::optional<LabelSet>>>& annotations) {
  CodingMatrix joint, ae, pc;
  for (const auto& row : annotations) {
    auto& j = joint.emplace_back();
    auto& a = ae.emplace_back();
    auto& p = pc.emplace_back();
    for (const auto& labels : row) {
      if (labels) {
        j.emplace_back(labels->code());
        a.emplace_back(labels->anti_elitism ? 1 : 0);
        p.emplace_back(labels->people_centrism ? 1 : 0);
      } else {
        j.emplace_back();
        a.emplace_back();
        p.emplace_back();
      }
    }
  }
  return {KrippendorffAlphaNominal(joint), KrippendorffAlphaNominal(ae),
          KrippendorffAlphaNominal(pc)};
}

}  // namespace popdisc::stats
