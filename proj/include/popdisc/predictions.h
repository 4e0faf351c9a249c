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

#ifndef POPDISC_PREDICTIONS_H_
#define POPDISC_PREDICTIONS_H_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "popdisc/corpus.h"
#include "popdisc/label_set.h"

namespace popdisc {

struct SentenceKey {
  std::string speech_id;
  int index = 0;

  friend auto operator<=>(const SentenceKey&, const SentenceKey&) = default;
};

struct PredictionSet {
  std::map<SentenceKey, LabelSet> labels;
  std::string provenance;

  std::size_t size() const { return labels.size(); }
  std::optional<LabelSet> find(const std::string& speech_id, int index) const;

  friend bool operator==(const PredictionSet&, const PredictionSet&) = default;
};

// Reads prediction JSONL. Each record carries either "labels" (AE/PC tokens)
// or "option" (a..d, interpreted under `order`). Every key must exist in
// `corpus` and every corpus sentence must be covered.
PredictionSet ImportPredictions(const std::filesystem::path& path,
                                const Corpus& corpus,
                                OptionOrder order = OptionOrder::kForward);
PredictionSet ImportPredictions(std::istream& in, const Corpus& corpus,
                                OptionOrder order = OptionOrder::kForward,
                                std::string provenance = "stdin");

// Throws InputError listing up to ten corpus sentences without a prediction.
void CheckCoverage(const PredictionSet& predictions, const Corpus& corpus);

// Writes {"speech_id","index","labels"} records in corpus order.
void WritePredictions(const PredictionSet& predictions, const Corpus& corpus,
                      std::ostream& out);

// Per-sentence label vectors aligned with speech.sentences.
std::vector<std::optional<LabelSet>> GoldLabels(const Speech& speech);
std::vector<std::optional<LabelSet>> PredictedLabels(
    const Speech& speech, const PredictionSet& predictions);

// Sets Sentence::predicted for every covered sentence.
void AttachPredictions(Corpus& corpus, const PredictionSet& predictions);

}  // namespace popdisc

#endif  // POPDISC_PREDICTIONS_H_
