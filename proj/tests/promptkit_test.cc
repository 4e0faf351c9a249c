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

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "popdisc/errors.h"
#include "test_corpora.h"

namespace popdisc {
namespace {

using L = LabelSet;

Corpus TrainingCorpus() {
  Corpus train = testing::SeparableCorpus();
  train.speeches.push_back(testing::SpeechOf(
      "t3", {{"elites and the people clash", L::FullyPopulist()},
             {"the people and the elites again", L::FullyPopulist()},
             {"nothing to report here", L::Neutral()},
             {"the people will rise", L::PeopleCentric()},
             {"elites rigged the system", L::AntiElitist()}}));
  return train;
}

TfidfModel FitAll(const Corpus& corpus) {
  std::vector<std::string> docs;
  for (const Speech& s : corpus.speeches) {
    for (const Sentence& x : s.sentences) docs.push_back(x.text);
  }
  TfidfConfig config;
  config.min_df = 1;
  config.max_df = 1.0;
  return TfidfModel::Fit(docs, config);
}

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

TEST(Prompts, BaseContainsDefinitionAndOptions) {
  const Corpus corpus = testing::SeparableCorpus();
  PromptSpec spec;
  const PromptInstance p = BuildPrompt(spec, corpus.speeches[0].sentences[0],
                                       corpus.speeches[0], nullptr, nullptr);
  EXPECT_NE(p.text.find("Populism can be defined as an anti-elite discourse in "
                        "the name of the \"people\"."),
            std::string::npos);
  for (const char* opt : {"(a) No populism.", "(b) Anti-elitism", "(c) People-centrism",
                          "(d) Both people-centrism and anti-elitism populism."}) {
    EXPECT_NE(p.text.find(opt), std::string::npos) << opt;
  }
  EXPECT_EQ(p.text, BasePromptBody(OptionOrder::kForward) + "\n\n" +
                        QuestionFor(corpus.speeches[0].sentences[0].text));
  EXPECT_EQ(p.answer, 'b');
}

TEST(Prompts, ReversedOrder) {
  const std::string body = BasePromptBody(OptionOrder::kReversed);
  EXPECT_NE(body.find("(a) Both people-centrism"), std::string::npos);
  EXPECT_NE(body.find("(d) No populism."), std::string::npos);
}

TEST(Prompts, EverySettingExtendsTheBaseBody) {
  const Corpus train = TrainingCorpus();
  const TfidfModel tfidf = FitAll(train);
  const Corpus corpus = testing::SeparableCorpus();
  const Speech& speech = corpus.speeches[1];
  for (PromptSetting setting :
       {PromptSetting::kContextAware, PromptSetting::kDistributionAware,
        PromptSetting::kKShot, PromptSetting::kRagShot}) {
    PromptSpec spec;
    spec.setting = setting;
    spec.k = 4;
    const PromptInstance p =
        BuildPrompt(spec, speech.sentences[3], speech, &train, &tfidf);
    EXPECT_TRUE(StartsWith(p.text, BasePromptBody(OptionOrder::kForward)))
        << PromptSettingName(setting);
    EXPECT_NE(p.text.find(speech.sentences[3].text), std::string::npos);
  }
}

TEST(Prompts, ContextWindow) {
  const Corpus corpus = testing::SeparableCorpus();
  const Speech& speech = corpus.speeches[0];
  PromptSpec spec;
  spec.setting = PromptSetting::kContextAware;
  spec.context_window = 2;
  const PromptInstance first =
      BuildPrompt(spec, speech.sentences[0], speech, nullptr, nullptr);
  EXPECT_NE(first.text.find("preceding sentences"), std::string::npos);
  for (std::size_t i = 1; i < speech.size(); ++i) {
    EXPECT_EQ(first.text.find(speech.sentences[i].text), std::string::npos);
  }
  const PromptInstance last =
      BuildPrompt(spec, speech.sentences[4], speech, nullptr, nullptr);
  EXPECT_NE(last.text.find(speech.sentences[2].text), std::string::npos);
  EXPECT_NE(last.text.find(speech.sentences[3].text), std::string::npos);
  EXPECT_EQ(last.text.find(speech.sentences[1].text), std::string::npos);
  spec.context_window = 6;
  EXPECT_THROW(spec.Validate(), InputError);
}

TEST(Prompts, DistributionLine) {
  const Corpus corpus = testing::SeparableCorpus();
  PromptSpec spec;
  spec.setting = PromptSetting::kDistributionAware;
  const PromptInstance p = BuildPrompt(spec, corpus.speeches[0].sentences[0],
                                       corpus.speeches[0], nullptr, nullptr);
  EXPECT_NE(p.text.find("(a) No populism (92%)"), std::string::npos);
}

TEST(Prompts, KShotSamplingDependsOnlyOnSeed) {
  const Corpus train = TrainingCorpus();
  PromptSpec spec;
  spec.setting = PromptSetting::kKShot;
  spec.k = 8;
  spec.seed = 3;
  const PromptBuilder a(spec, &train, nullptr), b(spec, &train, nullptr);
  EXPECT_EQ(a.kshot_examples(), b.kshot_examples());
  for (const auto& examples : a.kshot_examples()) EXPECT_EQ(examples.size(), 2u);
  const Corpus corpus = testing::SeparableCorpus();
  const auto& s = corpus.speeches[0];
  const std::string examples_block = [&] {
    const std::string t = a.Build(s, s.sentences[0]).text;
    return t.substr(0, t.rfind("Which is"));
  }();
  EXPECT_EQ(examples_block, [&] {
    const std::string t = a.Build(s, s.sentences[2]).text;
    return t.substr(0, t.rfind("Which is"));
  }());
  spec.k = 16;
  EXPECT_THROW(PromptBuilder(spec, &train, nullptr), InputError);
  spec.k = 6;
  EXPECT_THROW(spec.Validate(), InputError);
}

TEST(Prompts, RagShotExcludesSelfAndRanksBySimilarity) {
  const Corpus train = TrainingCorpus();
  const TfidfModel tfidf = FitAll(train);
  PromptSpec spec;
  spec.setting = PromptSetting::kRagShot;
  spec.k = 8;
  const PromptBuilder builder(spec, &train, &tfidf);
  const std::string target = "the elites betrayed everyone";
  const auto hits = builder.Retrieve(target);
  EXPECT_LE(hits.size(), 8u);
  std::vector<std::string> flat;
  for (const Speech& s : train.speeches) {
    for (const Sentence& x : s.sentences) flat.push_back(x.text);
  }
  for (std::size_t h : hits) EXPECT_NE(flat[h], target);
  ASSERT_FALSE(hits.empty());
  EXPECT_NE(flat[hits[0]].find("elites"), std::string::npos);
}

TEST(Prompts, EmitFileIsTotalAndDeterministic) {
  const Corpus corpus = testing::SeparableCorpus();
  PromptSpec spec;
  std::ostringstream a, b, answers;
  const std::vector<PromptSpec> specs = {spec};
  EXPECT_EQ(EmitPromptFile(specs, corpus, nullptr, nullptr, a, &answers),
            corpus.sentence_count());
  EmitPromptFile(specs, corpus, nullptr, nullptr, b);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream lines(a.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("prompt"));
    ++n;
  }
  EXPECT_EQ(n, corpus.sentence_count());

  std::ostringstream empty;
  EXPECT_EQ(EmitPromptFile(specs, Corpus{}, nullptr, nullptr, empty), 0u);
  EXPECT_TRUE(empty.str().empty());
}

}  // namespace
}  // namespace popdisc
