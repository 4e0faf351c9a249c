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

// Deterministic synthetic corpora for the CLI tests and the acceptance
// binary. Nothing here resembles real speech text; only label rates, speech
// counts, dates and states are shaped.

#ifndef POPDISC_TESTS_SYNTHETIC_H_
#define POPDISC_TESTS_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "popdisc/corpus.h"
#include "popdisc/random.h"

namespace popdisc::synthetic {

inline constexpr std::array<const char*, 24> kFillerWords = {
    "we",    "will",   "make",  "great", "again", "country", "jobs",  "trade",
    "today", "very",   "big",   "beautiful", "wall", "border", "tax", "plan",
    "going", "tremendous", "numbers", "win", "state", "city", "road", "new"};
inline constexpr std::array<const char*, 6> kEliteWords = {
    "elites", "establishment", "insiders", "rigged", "donors", "lobbyists"};
inline constexpr std::array<const char*, 6> kPeopleWords = {
    "people", "workers", "families", "citizens", "americans", "forgotten"};
inline constexpr std::array<const char*, 12> kStates = {
    "PA", "MI", "WI", "FL", "OH", "NC", "AZ", "GA", "NY", "CA", "TX", "IL"};

inline std::string Words(PortableRng& rng, int count) {
  std::string text;
  for (int i = 0; i < count; ++i) {
    if (i > 0) text += ' ';
    text += kFillerWords[rng.Below(kFillerWords.size())];
  }
  return text;
}

inline std::string SentenceText(PortableRng& rng, LabelSet labels) {
  std::string text = Words(rng, 3 + static_cast<int>(rng.Below(12)));
  if (labels.anti_elitism && rng.Uniform() < 0.7) {
    text += std::string(" ") + kEliteWords[rng.Below(kEliteWords.size())];
  }
  if (labels.people_centrism && rng.Uniform() < 0.7) {
    text += std::string(" ") + kPeopleWords[rng.Below(kPeopleWords.size())];
  }
  text[0] = static_cast<char>(text[0] - 'a' + 'A');
  return text + ".";
}

// Joint label rates indexed by LabelSet::code().
using JointRates = std::array<double, 4>;

inline LabelSet Draw(PortableRng& rng, const JointRates& rates) {
  double u = rng.Uniform();
  for (int code = 0; code < 3; ++code) {
    if (u < rates[code]) return LabelSet::FromCode(code);
    u -= rates[code];
  }
  return LabelSet::FromCode(3);
}

// Sentence counts of the Trump-2016 label table: 13,910 neutral, 826 AE and
// 517 PC out of 15,025, which implies 228 sentences carrying both labels.
inline constexpr JointRates kTableTwoRates = {
    13910.0 / 15025, 598.0 / 15025, 289.0 / 15025, 228.0 / 15025};

// Annotated-corpus stand-in: `speeches` speeches sharing `sentences` sentences.
inline Corpus AnnotatedCorpus(const std::string& prefix, int speeches,
                              int sentences, std::uint64_t seed,
                              const JointRates& rates = kTableTwoRates) {
  PortableRng rng(seed);
  Corpus corpus;
  corpus.name = prefix;
  for (int s = 0; s < speeches; ++s) {
    Speech speech;
    speech.id = prefix + std::to_string(s);
    const int n = sentences / speeches + (s < sentences % speeches ? 1 : 0);
    for (int i = 0; i < n; ++i) {
      const LabelSet labels = Draw(rng, rates);
      speech.sentences.push_back(MakeSentence(SentenceText(rng, labels), i, labels));
    }
    corpus.speeches.push_back(std::move(speech));
  }
  return corpus;
}

struct CampaignShape {
  const char* first_day;
  int days;
  int speeches;
  double populist_rate;
};

// Speech-count shape of the 713-speech rally corpus across campaign periods.
inline constexpr std::array<CampaignShape, 4> kRallyShape = {{
    {"2015-06-16", 395, 160, 0.05},
    {"2016-07-21", 110, 110, 0.08},
    {"2019-06-18", 500, 200, 0.11},
    {"2022-11-15", 700, 243, 0.13},
}};

// Rally-corpus stand-in with dates, states, gold labels and filterable
// sentences. `total_sentences` is spread evenly across the speeches.
inline Corpus RallyCorpus(std::size_t total_sentences, std::uint64_t seed) {
  PortableRng rng(seed);
  Corpus corpus;
  corpus.name = "rallies";
  int speech_count = 0;
  for (const auto& shape : kRallyShape) speech_count += shape.speeches;
  std::size_t assigned = 0;
  int speech_number = 0;
  for (const auto& shape : kRallyShape) {
    const auto start = std::chrono::sys_days(ParseDate(shape.first_day));
    for (int s = 0; s < shape.speeches; ++s, ++speech_number) {
      Speech speech;
      speech.id = "rally" + std::to_string(speech_number);
      speech.date = std::chrono::year_month_day(
          start + std::chrono::days(rng.Below(static_cast<std::uint64_t>(shape.days))));
      speech.state = kStates[rng.Below(kStates.size())];
      speech.location = *speech.state;
      const std::size_t target =
          total_sentences * (speech_number + 1) / speech_count;
      const std::size_t n = target - assigned;
      assigned = target;
      const double p = shape.populist_rate * (0.5 + rng.Uniform());
      const JointRates rates = {1 - p, 0.45 * p, 0.4 * p, 0.15 * p};
      for (std::size_t i = 0; i < n; ++i) {
        const double kind = rng.Uniform();
        std::string text;
        LabelSet labels = Draw(rng, rates);
        if (kind < 0.04) {
          text = "Thank you " + Words(rng, 2 + static_cast<int>(rng.Below(4))) + ".";
        } else if (kind < 0.079) {
          text = std::string(rng.Below(2) ? "Wow!" : "So true.");
        } else {
          text = SentenceText(rng, labels);
        }
        speech.sentences.push_back(
            MakeSentence(std::move(text), static_cast<int>(i), labels));
      }
      DeriveMetadata(speech);
      corpus.speeches.push_back(std::move(speech));
    }
  }
  return corpus;
}

inline void WriteCorpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  WriteSentenceJsonl(corpus, out);
}

}  // namespace popdisc::synthetic

#endif  // POPDISC_TESTS_SYNTHETIC_H_
