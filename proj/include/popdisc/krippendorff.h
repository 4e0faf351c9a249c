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

#ifndef POPDISC_KRIPPENDORFF_H_
#define POPDISC_KRIPPENDORFF_H_

#include <map>
#include <optional>
#include <vector>

#include "popdisc/label_set.h"

namespace popdisc::stats {

// annotations[coder][item]; nullopt marks a missing coding. Values are
// nominal category codes.
using CodingMatrix = std::vector<std::vector<std::optional<int>>>;

// Coincidence matrix over the pairable items (those with >= 2 codings):
// o[c][k] = sum over items of (number of c-k coder pairs) / (m_u - 1).
std::map<int, std::map<int, double>> CoincidenceMatrix(
    const CodingMatrix& annotations);

// Nominal Krippendorff's alpha, 1 - (n - 1) * D_o / D_e. Throws when no item
// is coded at least twice. When only one category occurs the data carry no
// disagreement and 1 is returned.
double KrippendorffAlphaNominal(const CodingMatrix& annotations);

struct MultiLabelAlpha {
  // Joint four-state coding (N, AE, PC, AE+PC).
  double joint = 0.0;
  double anti_elitism = 0.0;
  double people_centrism = 0.0;
};

MultiLabelAlpha KrippendorffAlphaLabels(
    const std::vector<std::vector<std::optional<LabelSet>>>& annotations);

}  // namespace popdisc::stats

#endif  // POPDISC_KRIPPENDORFF_H_
