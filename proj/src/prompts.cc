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

#include "popdisc/prompts.h"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "json.hpp"
#include "popdisc/errors.h"
#include "popdisc/random.h"

namespace popdisc {
namespace {

constexpr std::string_view kIntro =
    "You are a helpful AI assistant with expertise in identifying populism in "
    "public discourse. Populism can be defined as an anti-elite discourse in "
    "the name of the \"people\". In other words, populism emphasizes the idea "
    "of the common \"people\" and often positions this group in opposition to "
    "a perceived elite group.";

constexpr std::string_view kCoreElements =
    "There are two core elements in identifying populism: (i) anti-elitism, "
    "i.e., negative invocations of \"elites\", and (ii) people-centrism, i.e., "
    "positive invocations of the \"people\".";

constexpr std::string_view kInstruction =
    "You must classify each sentence in one of the following categories:";

// Indexed by LabelSet::code(): N, AE, PC, AE+PC.
constexpr std::array<std::string_view, 4> kOptionText = {
    "No populism.",
    "Anti-elitism, i.e., negative invocations of \"elites\".",
    "People-centrism, i.e., positive invocations of the \"People\".",
    "Both people-centrism and anti-elitism populism."};

constexpr std::array<std::string_view, 4> kDistributionText = {
    "No populism (92%)", "Anti-elitism (4%)", "People-centrism (2%)",
    "Both people-centrism and anti-elitism (2%)"};

constexpr std::array<std::string_view, 4> kCategoryName = {
    "No populism", "Anti-elitism populism", "People-centrism populism",
    "Both people-centrism and anti-elitism populism"};

constexpr std::string_view kContextHeader =
    "Here are the preceding sentences for context:";

constexpr std::string_view kContextInstruction =
    "When classifying a sentence, focus primarily on the content of that "
    "specific sentence. Use the context of preceding sentences only to resolve "
    "coreferences (e.g., identifying who \"they\" or \"you\" refer to) or to "
    "disambiguate when the sentence is ambiguous on its own.";

constexpr std::string_view kRagInstruction =
    "When classifying a sentence, focus primarily on the content of that "
    "specific sentence.";

constexpr int kMaxContextWindow = 5;

// Label codes in option-letter order a, b, c, d.
std::array<int, 4> CodesInLetterOrder(OptionOrder order) {
  std::array<int, 4> codes{};
  for (LabelSet labels : kAllLabelSets) {
    codes[OptionLetter(labels, order) - 'a'] = labels.code();
  }
  return codes;
}

}  // namespace

std::string_view PromptSettingName(PromptSetting setting) {
  switch (setting) {
    case PromptSetting::kBase: return "base";
    case PromptSetting::kContextAware: return "context-aware";
    case PromptSetting::kDistributionAware: return "distribution-aware";
    case PromptSetting::kKShot: return "k-shot";
    case PromptSetting::kRagShot: return "rag-shot";
  }
  return "base";
}

PromptSetting ParsePromptSetting(std::string_view name) {
  for (PromptSetting s :
       {PromptSetting::kBase, PromptSetting::kContextAware,
        PromptSetting::kDistributionAware, PromptSetting::kKShot,
        PromptSetting::kRagShot}) {
    if (PromptSettingName(s) == name) return s;
  }
  throw InputError("unknown prompt setting '" + std::string(name) +
                   "' (expected base|context-aware|distribution-aware|"
                   "k-shot|rag-shot)");
}

void PromptSpec::Validate() const {
  if (context_window < 0 || context_window > kMaxContextWindow) {
    throw InputError("context window must be in [0, 5]");
  }
  if (k < 0) throw InputError("k must be non-negative");
  if (setting == PromptSetting::kKShot && (k == 0 || k % 4 != 0)) {
    throw InputError("k-shot needs a positive k divisible by 4");
  }
  if (setting == PromptSetting::kRagShot && k == 0) {
    throw InputError("rag-shot needs a positive k");
  }
}

std::string BasePromptBody(OptionOrder order) {
  std::string body = fmt::format("{}\n\n{}\n\n{}\n\n", kIntro, kCoreElements,
                                 kInstruction);
  const auto codes = CodesInLetterOrder(order);
  for (int letter = 0; letter < 4; ++letter) {
    if (letter > 0) body += '\n';
    body += fmt::format("({}) {}", static_cast<char>('a' + letter),
                        kOptionText[codes[letter]]);
  }
  return body;
}

std::string QuestionFor(std::string_view sentence) {
  return fmt::format("Which is the most relevant category for the sentence: {}?",
                     sentence);
}

PromptBuilder::PromptBuilder(PromptSpec spec, const Corpus* train,
                             const TfidfModel* tfidf)
    : spec_(spec), tfidf_(tfidf) {
  spec_.Validate();
  const bool few_shot = spec_.setting == PromptSetting::kKShot ||
                        spec_.setting == PromptSetting::kRagShot;
  if (!few_shot) return;
  if (train == nullptr) throw InputError("few-shot prompts need a training corpus");
  for (const Speech& speech : train->speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (!sentence.gold) {
        throw InputError(fmt::format(
            "training speech '{}' sentence {} has no gold label", speech.id,
            sentence.index));
      }
      training_.push_back({sentence.text, *sentence.gold});
    }
  }

  if (spec_.setting == PromptSetting::kKShot) {
    const std::size_t per_category = static_cast<std::size_t>(spec_.k / 4);
    PortableRng rng(spec_.seed);
    for (int code = 0; code < 4; ++code) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < training_.size(); ++i) {
        if (training_[i].labels.code() == code) pool.push_back(i);
      }
      if (pool.size() < per_category) {
        throw InputError(fmt::format(
            "k-shot needs {} examples of category '{}' but the training set has "
            "{}",
            per_category, kCategoryName[code], pool.size()));
      }
      // Partial Fisher-Yates: the first per_category slots are the sample.
      for (std::size_t i = 0; i < per_category; ++i) {
        std::swap(pool[i], pool[i + rng.Below(pool.size() - i)]);
        kshot_examples_[code].push_back(training_[pool[i]].text);
      }
    }
    return;
  }

  if (tfidf_ == nullptr) throw InputError("rag-shot prompts need a TF-IDF model");
  postings_.assign(tfidf_->size(), {});
  for (std::size_t i = 0; i < training_.size(); ++i) {
    const SparseVector vector = tfidf_->Transform(training_[i].text);
    for (const auto& [feature, weight] : vector.entries()) {
      postings_[feature].emplace_back(static_cast<std::uint32_t>(i), weight);
    }
  }
}

std::vector<std::size_t> PromptBuilder::Retrieve(std::string_view text) const {
  if (tfidf_ == nullptr || postings_.empty()) return {};
  // Transform output is unit-norm or zero, so the dot product is the cosine.
  std::vector<double> scores(training_.size(), 0.0);
  const SparseVector query = tfidf_->Transform(text);
  for (const auto& [feature, weight] : query.entries()) {
    for (const auto& [position, train_weight] : postings_[feature]) {
      scores[position] += weight * train_weight;
    }
  }
  std::vector<std::size_t> candidates;
  candidates.reserve(training_.size());
  for (std::size_t i = 0; i < training_.size(); ++i) {
    if (training_[i].text != text) candidates.push_back(i);
  }
  const std::size_t k =
      std::min(candidates.size(), static_cast<std::size_t>(spec_.k));
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<long>(k),
                    candidates.end(), [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  candidates.resize(k);
  return candidates;
}

std::string PromptBuilder::Extension(const Speech& speech,
                                     const Sentence& target) const {
  const auto codes = CodesInLetterOrder(spec_.option_order);
  std::string out;
  switch (spec_.setting) {
    case PromptSetting::kBase:
      break;
    case PromptSetting::kContextAware: {
      out = fmt::format("\n\n{}\n", kContextHeader);
      const int first = std::max(0, target.index - spec_.context_window);
      for (int i = first; i < target.index; ++i) {
        out += speech.sentences[static_cast<std::size_t>(i)].text;
        out += '\n';
      }
      out += fmt::format("\n{}", kContextInstruction);
      break;
    }
    case PromptSetting::kDistributionAware: {
      std::vector<std::string> parts;
      for (int letter = 0; letter < 4; ++letter) {
        parts.push_back(fmt::format("({}) {}", static_cast<char>('a' + letter),
                                    kDistributionText[codes[letter]]));
      }
      out = fmt::format("\n\nThe label distribution is {}.",
                        fmt::join(parts, ", "));
      break;
    }
    case PromptSetting::kKShot:
      out = "\n";
      for (int letter = 0; letter < 4; ++letter) {
        const int code = codes[letter];
        out += fmt::format("\nThe following sentences are in category ({}) {}:",
                           static_cast<char>('a' + letter), kCategoryName[code]);
        for (const std::string& example : kshot_examples_[code]) {
          out += "\n- " + example;
        }
      }
      break;
    case PromptSetting::kRagShot: {
      out = fmt::format(
          "\n\nHere are the most similar {} sentences from the training set, "
          "accompanied by their label:",
          spec_.k);
      for (std::size_t position : Retrieve(target.text)) {
        const TrainingSentence& example = training_[position];
        out += fmt::format("\n- {} ({}) {}", example.text,
                           OptionLetter(example.labels, spec_.option_order),
                           kCategoryName[example.labels.code()]);
      }
      out += fmt::format("\n\n{}", kRagInstruction);
      break;
    }
  }
  return out;
}

PromptInstance PromptBuilder::Build(const Speech& speech,
                                    const Sentence& target) const {
  PromptInstance instance;
  instance.speech_id = speech.id;
  instance.index = target.index;
  instance.setting = spec_.setting;
  instance.text = BasePromptBody(spec_.option_order) + Extension(speech, target) +
                  "\n\n" + QuestionFor(target.text);
  const auto codes = CodesInLetterOrder(spec_.option_order);
  for (int letter = 0; letter < 4; ++letter) {
    instance.options[letter] = std::string(kOptionText[codes[letter]]);
  }
  if (target.gold) instance.answer = OptionLetter(*target.gold, spec_.option_order);
  return instance;
}

PromptInstance BuildPrompt(const PromptSpec& spec, const Sentence& target,
                           const Speech& speech, const Corpus* train,
                           const TfidfModel* tfidf) {
  return PromptBuilder(spec, train, tfidf).Build(speech, target);
}

std::size_t EmitPromptFile(std::span<const PromptSpec> specs,
                           const Corpus& corpus, const Corpus* train,
                           const TfidfModel* tfidf, std::ostream& out,
                           std::ostream* answers) {
  std::size_t written = 0;
  for (const PromptSpec& spec : specs) {
    const PromptBuilder builder(spec, train, tfidf);
    for (const Speech& speech : corpus.speeches) {
      for (const Sentence& sentence : speech.sentences) {
        const PromptInstance prompt = builder.Build(speech, sentence);
        nlohmann::ordered_json record;
        record["speech_id"] = prompt.speech_id;
        record["index"] = prompt.index;
        record["setting"] = PromptSettingName(prompt.setting);
        record["prompt"] = prompt.text;
        nlohmann::ordered_json options;
        for (int letter = 0; letter < 4; ++letter) {
          options[std::string(1, static_cast<char>('a' + letter))] =
              prompt.options[letter];
        }
        record["options"] = std::move(options);
        if (prompt.answer) record["answer"] = std::string(1, *prompt.answer);
        out << record.dump(-1, ' ', false,
                           nlohmann::json::error_handler_t::replace)
            << '\n';
        if (!out) throw std::runtime_error("failed writing prompt file");
        ++written;
        if (answers != nullptr && prompt.answer) {
          nlohmann::ordered_json key;
          key["speech_id"] = prompt.speech_id;
          key["index"] = prompt.index;
          key["option"] = std::string(1, *prompt.answer);
          *answers << key.dump() << '\n';
        }
      }
    }
  }
  return written;
}

}  // namespace popdisc
