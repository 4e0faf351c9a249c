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

#include "popdisc/label_set.h"

#include <algorithm>
#include <cctype>

#include "popdisc/errors.h"

namespace popdisc {

std::vector<std::string> ToTokens(LabelSet labels) {
  std::vector<std::string> tokens;
  if (labels.anti_elitism) tokens.emplace_back("AE");
  if (labels.people_centrism) tokens.emplace_back("PC");
  return tokens;
}

LabelSet FromTokens(const std::vector<std::string>& tokens) {
  LabelSet labels;
  for (const std::string& token : tokens) {
    std::string upper = token;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (upper == "AE") {
      labels.anti_elitism = true;
    } else if (upper == "PC") {
      labels.people_centrism = true;
    } else if (upper != "N") {
      throw InputError("unknown label token '" + token + "'");
    }
  }
  return labels;
}

std::string_view ShortName(LabelSet labels) {
  switch (labels.code()) {
    case 0: return "N";
    case 1: return "AE";
    case 2: return "PC";
    default: return "AE+PC";
  }
}

char OptionLetter(LabelSet labels, OptionOrder order) {
  static constexpr char kForward[] = {'a', 'b', 'c', 'd'};
  static constexpr char kReversed[] = {'d', 'b', 'c', 'a'};
  const int code = labels.code();
  return order == OptionOrder::kForward ? kForward[code] : kReversed[code];
}

std::optional<LabelSet> FromOptionLetter(char letter, OptionOrder order) {
  letter = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
  for (LabelSet labels : kAllLabelSets) {
    if (OptionLetter(labels, order) == letter) return labels;
  }
  return std::nullopt;
}

OptionOrder ParseOptionOrder(std::string_view name) {
  if (name == "forward") return OptionOrder::kForward;
  if (name == "reversed") return OptionOrder::kReversed;
  throw InputError("unknown option order '" + std::string(name) +
                   "' (expected forward|reversed)");
}

}  // namespace popdisc
