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

#include "popdisc/predictions.h"

#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "json.hpp"
#include "popdisc/errors.h"

namespace popdisc {

std::optional<LabelSet> PredictionSet::find(const std::string& speech_id,
                                            int index) const {
  auto it = labels.find(SentenceKey{speech_id, index});
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

PredictionSet ImportPredictions(const std::filesystem::path& path,
                                const Corpus& corpus, OptionOrder order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return ImportPredictions(in, corpus, order, path.stem().string());
}

PredictionSet ImportPredictions(std::istream& in, const Corpus& corpus,
                                OptionOrder order, std::string provenance) {
  PredictionSet predictions;
  predictions.provenance = std::move(provenance);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      SentenceKey key{record.at("speech_id").get<std::string>(),
                      record.at("index").get<int>()};
      LabelSet labels;
      if (auto it = record.find("option"); it != record.end()) {
        const std::string option = it->get<std::string>();
        std::optional<LabelSet> parsed;
        if (option.size() == 1) parsed = FromOptionLetter(option[0], order);
        if (!parsed) throw InputError("unknown option '" + option + "'");
        labels = *parsed;
      } else if (auto it = record.find("labels"); it != record.end()) {
        labels = it->is_null()
                     ? LabelSet::Neutral()
                     : FromTokens(it->get<std::vector<std::string>>());
      } else {
        throw InputError("record has neither 'labels' nor 'option'");
      }
      const Speech* speech = corpus.find(key.speech_id);
      if (speech == nullptr || key.index < 0 ||
          static_cast<std::size_t>(key.index) >= speech->size()) {
        throw InputError(fmt::format("prediction for unknown sentence ('{}', {})",
                                     key.speech_id, key.index));
      }
      if (!predictions.labels.emplace(key, labels).second) {
        throw InputError(fmt::format("duplicate prediction for ('{}', {})",
                                     key.speech_id, key.index));
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError(fmt::format("{}:{}: malformed prediction: {}",
                                   predictions.provenance, line_no, e.what()));
    } catch (const InputError& e) {
      throw InputError(fmt::format("{}:{}: {}", predictions.provenance,
                                   line_no, e.what()));
    }
  }
  CheckCoverage(predictions, corpus);
  return predictions;
}

void CheckCoverage(const PredictionSet& predictions, const Corpus& corpus) {
  std::vector<std::string> missing;
  std::size_t missing_total = 0;
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (predictions.labels.contains(SentenceKey{speech.id, sentence.index})) {
        continue;
      }
      ++missing_total;
      if (missing.size() < 10) {
        missing.push_back(fmt::format("('{}', {})", speech.id, sentence.index));
      }
    }
  }
  if (missing_total > 0) {
    throw InputError(fmt::format("{} sentence(s) without prediction: {}",
                                 missing_total, fmt::join(missing, ", ")));
  }
}

void WritePredictions(const PredictionSet& predictions, const Corpus& corpus,
                      std::ostream& out) {
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      const auto labels = predictions.find(speech.id, sentence.index);
      if (!labels) continue;
      nlohmann::ordered_json record;
      record["speech_id"] = speech.id;
      record["index"] = sentence.index;
      record["labels"] = ToTokens(*labels);
      out << record.dump() << '\n';
    }
  }
}

std::vector<std::optional<LabelSet>> GoldLabels(const Speech& speech) {
  std::vector<std::optional<LabelSet>> labels;
  labels.reserve(speech.size());
  for (const Sentence& sentence : speech.sentences) {
    labels.push_back(sentence.gold);
  }
  return labels;
}

std::vector<std::optional<LabelSet>> PredictedLabels(
    const Speech& speech, const PredictionSet& predictions) {
  std::vector<std::optional<LabelSet>> labels;
  labels.reserve(speech.size());
  auto it = predictions.labels.lower_bound(SentenceKey{speech.id, 0});
  for (const Sentence& sentence : speech.sentences) {
    while (it != predictions.labels.end() && it->first.speech_id == speech.id &&
           it->first.index < sentence.index) {
      ++it;
    }
    if (it != predictions.labels.end() && it->first.speech_id == speech.id &&
        it->first.index == sentence.index) {
      labels.push_back(it->second);
    } else {
      labels.push_back(std::nullopt);
    }
  }
  return labels;
}

void AttachPredictions(Corpus& corpus, const PredictionSet& predictions) {
  for (Speech& speech : corpus.speeches) {
    const auto labels = PredictedLabels(speech, predictions);
    for (std::size_t i = 0; i < speech.size(); ++i) {
      speech.sentences[i].predicted = labels[i];
    }
  }
}

}  // namespace popdisc
