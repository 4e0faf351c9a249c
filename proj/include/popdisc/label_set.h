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

#ifndef POPDISC_LABEL_SET_H_
#define POPDISC_LABEL_SET_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace popdisc {

// Multi-label state of one sentence. Neutral is the empty set; a sentence
// carrying both labels is "fully populist".
struct LabelSet {
  bool anti_elitism = false;
  bool people_centrism = false;

  static constexpr LabelSet Neutral() { return {}; }
  static constexpr LabelSet AntiElitist() { return {true, false}; }
  static constexpr LabelSet PeopleCentric() { return {false, true}; }
  static constexpr LabelSet FullyPopulist() { return {true, true}; }

  constexpr bool neutral() const { return !anti_elitism && !people_centrism; }
  constexpr bool populist() const { return anti_elitism || people_centrism; }
  constexpr bool fully_populist() const {
    return anti_elitism && people_centrism;
  }
  constexpr bool only_anti_elitism() const {
    return anti_elitism && !people_centrism;
  }
  constexpr bool only_people_centrism() const {
    return people_centrism && !anti_elitism;
  }

  // Joint state code in [0, 4): 0 = neutral, 1 = AE, 2 = PC, 3 = both.
  constexpr int code() const {
    return (anti_elitism ? 1 : 0) + (people_centrism ? 2 : 0);
  }
  static constexpr LabelSet FromCode(int code) {
    return {(code & 1) != 0, (code & 2) != 0};
  }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;
};

inline constexpr std::array<LabelSet, 4> kAllLabelSets = {
    LabelSet::Neutral(), LabelSet::AntiElitist(), LabelSet::PeopleCentric(),
    LabelSet::FullyPopulist()};

// Label tokens as written in JSONL files: [], ["AE"], ["PC"], ["AE","PC"].
std::vector<std::string> ToTokens(LabelSet labels);

// Parses label tokens; accepts "AE"/"PC" (case-insensitive) and ignores "N".
// Throws InputError on anything else.
LabelSet FromTokens(const std::vector<std::string>& tokens);

// Short display name: "N", "AE", "PC", "AE+PC".
std::string_view ShortName(LabelSet labels);

// The two option orders used for multiple-choice prompts.
enum class OptionOrder { kForward, kReversed };

// Option letter ('a'..'d') for a label set under the given order. Forward is
// (a) neutral, (b) AE, (c) PC, (d) both; reversed swaps (a) and (d).
char OptionLetter(LabelSet labels, OptionOrder order);

// Inverse of OptionLetter; nullopt for letters outside a..d.
std::optional<LabelSet> FromOptionLetter(char letter, OptionOrder order);

OptionOrder ParseOptionOrder(std::string_view name);

}  // namespace popdisc

#endif  // POPDISC_LABEL_SET_H_
