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

#ifndef POPDISC_PROMPTS_H_
#define POPDISC_PROMPTS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popdisc/corpus.h"
#include "popdisc/label_set.h"
#include "popdisc/tfidf.h"

namespace popdisc {

enum class PromptSetting { kBase, kContextAware, kDistributionAware, kKShot, kRagShot };

std::string_view PromptSettingName(PromptSetting setting);
PromptSetting ParsePromptSetting(std::string_view name);

struct PromptSpec {
  PromptSetting setting = PromptSetting::kBase;
  // Number of examples for K-shot (a multiple of 4) and RAG-shot.
  int k = 0;
  // Preceding sentences shown by the context-aware setting, at most 5.
  int context_window = 5;
  std::uint64_t seed = 0;
  OptionOrder option_order = OptionOrder::kForward;

  void Validate() const;
};

struct PromptInstance {
  std::string speech_id;
  int index = 0;
  PromptSetting setting = PromptSetting::kBase;
  std::string text;
  // Option text keyed by letter a..d.
  std::array<std::string, 4> options;
  // Correct option when the target carries a gold label.
  std::optional<char> answer;
};

// Instruction block shared by every setting: role, definition and the four
// options in the requested order.
std::string BasePromptBody(OptionOrder order);

std::string QuestionFor(std::string_view sentence);

// Builds prompts for one spec. Few-shot examples come from `train` (gold
// labels required); RAG-shot retrieval ranks training sentences by TF-IDF
// cosine to the target, ties by training order, never returning a training
// sentence whose text equals the target's.
class PromptBuilder {
 public:
  PromptBuilder(PromptSpec spec, const Corpus* train, const TfidfModel* tfidf);

  PromptInstance Build(const Speech& speech, const Sentence& target) const;

  const PromptSpec& spec() const { return spec_; }
  // Sampled K-shot examples per joint label code (empty for other settings).
  const std::array<std::vector<std::string>, 4>& kshot_examples() const {
    return kshot_examples_;
  }
  // Training sentence positions retrieved for `text`, most similar first.
  std::vector<std::size_t> Retrieve(std::string_view text) const;

 private:
  struct TrainingSentence {
    std::string text;
    LabelSet labels;
  };

  std::string Extension(const Speech& speech, const Sentence& target) const;

  PromptSpec spec_;
  const TfidfModel* tfidf_ = nullptr;
  std::vector<TrainingSentence> training_;
  std::array<std::vector<std::string>, 4> kshot_examples_;
  // feature index -> (training position, weight)
  std::vector<std::vector<std::pair<std::uint32_t, double>>> postings_;
};

PromptInstance BuildPrompt(const PromptSpec& spec, const Sentence& target,
                           const Speech& speech, const Corpus* train,
                           const TfidfModel* tfidf);

// One JSONL record per (spec, target sentence) in spec then corpus order:
// {"speech_id","index","setting","prompt","options",["answer"]}. When
// `answers` is given, gold-labeled targets also produce an answer-key record
// {"speech_id","index","option"}. Returns the number of prompts written.
std::size_t EmitPromptFile(std::span<const PromptSpec> specs,
                           const Corpus& corpus, const Corpus* train,
                           const TfidfModel* tfidf, std::ostream& out,
                           std::ostream* answers = nullptr);

}  // namespace popdisc

#endif  // POPDISC_PROMPTS_H_
