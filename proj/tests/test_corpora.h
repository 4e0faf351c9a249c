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

// Small corpus builders shared by the classify, promptkit and CLI tests.

#ifndef POPDISC_TESTS_TEST_CORPORA_H_
#define POPDISC_TESTS_TEST_CORPORA_H_

#include <string>
#include <vector>

#include "popdisc/corpus.h"

namespace popdisc::testing {

inline Speech SpeechOf(const std::string& id,
                       const std::vector<std::pair<std::string, LabelSet>>& rows) {
  Speech speech;
  speech.id = id;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    speech.sentences.push_back(
        MakeSentence(rows[i].first, static_cast<int>(i), rows[i].second));
  }
  return speech;
}

// Ten sentences separable by keyword: "elites" marks AE, "people" marks PC.
inline Corpus SeparableCorpus() {
  using L = LabelSet;
  Corpus corpus;
  corpus.name = "toy";
  corpus.speeches.push_back(SpeechOf(
      "t1", {{"the corrupt elites rigged it", L::AntiElitist()},
             {"we had lunch today", L::Neutral()},
             {"the elites betrayed everyone", L::AntiElitist()},
             {"our people are wonderful", L::PeopleCentric()},
             {"the weather was nice", L::Neutral()}}));
  corpus.speeches.push_back(SpeechOf(
      "t2", {{"the people deserve better", L::PeopleCentric()},
             {"elites in washington lie", L::AntiElitist()},
             {"we drove here by bus", L::Neutral()},
             {"hardworking people built this", L::PeopleCentric()},
             {"elites hate the people", L::FullyPopulist()}}));
  return corpus;
}

}  // namespace popdisc::testing

#endif  // POPDISC_TESTS_TEST_CORPORA_H_
