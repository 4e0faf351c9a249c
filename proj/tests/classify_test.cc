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

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "popdisc/baselines.h"
#include "popdisc/errors.h"
#include "popdisc/evaluation.h"
#include "popdisc/predictions.h"
#include "popdisc/random.h"
#include "test_corpora.h"

namespace popdisc {
namespace {

using L = LabelSet;

TfidfModel FitToy(const Corpus& corpus) {
  std::vector<std::string> docs;
  for (const Speech& s : corpus.speeches) {
    for (const Sentence& x : s.sentences) docs.push_back(x.text);
  }
  TfidfConfig config;
  config.min_df = 1;
  config.max_df = 1.0;
  return TfidfModel::Fit(docs, config);
}

PredictionSet FromGold(const Corpus& corpus) {
  PredictionSet p;
  for (const Speech& s : corpus.speeches) {
    for (const Sentence& x : s.sentences) p.labels[{s.id, x.index}] = *x.gold;
  }
  return p;
}

TEST(Evaluate, PerfectPrediction) {
  const Corpus corpus = testing::SeparableCorpus();
  const EvalReport r = Evaluate(FromGold(corpus), corpus);
  for (LabelClass c : kLabelClasses) EXPECT_EQ(r.at(c).f1, 1.0);
  EXPECT_EQ(r.macro_f1, 1.0);
}

TEST(EvaluateProperties, PredictionEqualToGoldScoresOne) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LabelPair> pairs(5 + rng() % 200);
    for (auto& p : pairs) p.gold = p.predicted = L::FromCode(static_cast<int>(rng() % 4));
    // Every class must occur in gold for its F1 to be defined as 1.
    pairs[0].gold = pairs[0].predicted = L::FullyPopulist();
    pairs[1].gold = pairs[1].predicted = L::Neutral();
    const EvalReport r = Evaluate(pairs);
    EXPECT_EQ(r.macro_f1, 1.0);
  }
}

TEST(Evaluate, AllNeutralOnTableTwoDistribution) {
  // 13,910 N + (826 - 228) AE-only + (517 - 228) PC-only + 228 both = 15,025.
  std::vector<LabelPair> pairs;
  auto add = [&](int n, L gold) {
    for (int i = 0; i < n; ++i) pairs.push_back({gold, L::Neutral()});
  };
  add(13910, L::Neutral());
  add(826 - 228, L::AntiElitist());
  add(517 - 228, L::PeopleCentric());
  add(228, L::FullyPopulist());
  ASSERT_EQ(pairs.size(), 15025u);
  const EvalReport r = Evaluate(pairs);
  const double p = 13910.0 / 15025.0;
  EXPECT_NEAR(r.at(LabelClass::kNeutral).f1, 2 * p / (1 + p), 1e-12);
  EXPECT_EQ(r.at(LabelClass::kAntiElitism).f1, 0.0);
  EXPECT_EQ(r.at(LabelClass::kPeopleCentrism).f1, 0.0);
  EXPECT_NEAR(r.macro_f1, 2 * p / (1 + p) / 3, 1e-12);
  EXPECT_NEAR(r.macro_f1, 0.3205, 1e-3);
}

TEST(Evaluate, CsvShape) {
  const Corpus corpus = testing::SeparableCorpus();
  std::ostringstream out;
  WriteEvalCsv(Evaluate(FromGold(corpus), corpus), out);
  EXPECT_EQ(out.str(),
            "class,precision,recall,f1\n"
            "N,1.000000,1.000000,1.000000\n"
            "AE,1.000000,1.000000,1.000000\n"
            "PC,1.000000,1.000000,1.000000\n"
            "macro,1.000000,1.000000,1.000000\n");
}

TEST(DistRandom, AllNeutralTrainingSet) {
  Corpus train;
  train.speeches.push_back(testing::SpeechOf(
      "n", {{"a b c", L::Neutral()}, {"d e f", L::Neutral()}}));
  const auto sampler = DistRandomSampler::Train(train);
  PortableRng rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(sampler.Sample(rng).neutral());
}

TEST(DistRandom, DeterministicAndCalibrated) {
  const auto sampler =
      DistRandomSampler::FromFrequencies({0.9, 0.05, 0.03, 0.02});
  const Corpus corpus = testing::SeparableCorpus();
  EXPECT_EQ(sampler.Predict(corpus, 5), sampler.Predict(corpus, 5));
  PortableRng rng(11);
  std::array<int, 4> counts{};
  for (int i = 0; i < 100000; ++i) ++counts[sampler.Sample(rng).code()];
  EXPECT_NEAR(counts[0] / 1e5, 0.9, 0.005);
  EXPECT_NEAR(counts[3] / 1e5, 0.02, 0.002);
  const auto independent = DistRandomSampler::FromFrequencies(
      {0.9, 0.05, 0.03, 0.02}, DistRandomSampler::Mode::kIndependent);
  EXPECT_NEAR(independent.anti_elitism_rate(), 0.07, 1e-12);
}

TEST(PortableRng, Reproducible) {
  PortableRng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.Uniform(), b.Uniform());
    EXPECT_EQ(a.Below(17), b.Below(17));
  }
  PortableRng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(LinearSvm, SeparableToyCorpus) {
  const Corpus corpus = testing::SeparableCorpus();
  const TfidfModel tfidf = FitToy(corpus);
  const LinearSvm svm = LinearSvm::Train(corpus, tfidf);
  const SvmPrediction p = svm.Predict(tfidf, corpus);
  EXPECT_EQ(p.predictions.size(), corpus.sentence_count());
  EXPECT_EQ(Evaluate(p.predictions, corpus).macro_f1, 1.0);
  EXPECT_EQ(svm.Predict(tfidf, corpus).predictions, p.predictions);
  EXPECT_EQ(svm.Classify(tfidf.Transform("elites elites")), L::AntiElitist());
  EXPECT_EQ(svm.Classify(SparseVector()), L::Neutral());
}

TEST(LinearSvm, TopFeatures) {
  const Corpus corpus = testing::SeparableCorpus();
  const TfidfModel tfidf = FitToy(corpus);
  const LinearSvm svm = LinearSvm::Train(corpus, tfidf);
  const auto ae = svm.TopFeatures(tfidf, LabelClass::kAntiElitism, 3);
  ASSERT_EQ(ae.size(), 3u);
  EXPECT_EQ(ae[0].first, "elites");
  EXPECT_TRUE(svm.TopFeatures(tfidf, LabelClass::kAntiElitism, 0).empty());
  EXPECT_EQ(svm.TopFeatures(tfidf, LabelClass::kPeopleCentrism, 1000000).size(),
            tfidf.size());
}

TEST(LinearSvm, ZeroWeightsTieBreakIsLexicographic) {
  const Corpus corpus = testing::SeparableCorpus();
  const TfidfModel tfidf = FitToy(corpus);
  const LinearSvm trained = LinearSvm::Train(corpus, tfidf);
  auto json = nlohmann::json::parse(trained.ToJson());
  for (auto& head : json["heads"]) {
    for (auto& w : head["weights"]) w = 0.0;
  }
  const LinearSvm zero = LinearSvm::FromJson(json.dump());
  const auto top = zero.TopFeatures(tfidf, LabelClass::kNeutral, 4);
  ASSERT_EQ(top.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(top[i].first, tfidf.terms()[i]);
}

TEST(LinearSvm, ErrorsAndSerialization) {
  Corpus no_pc;
  no_pc.speeches.push_back(testing::SpeechOf(
      "x", {{"elites lie", L::AntiElitist()}, {"lunch was good", L::Neutral()}}));
  const TfidfModel tfidf = FitToy(no_pc);
  try {
    LinearSvm::Train(no_pc, tfidf);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("PC"), std::string::npos) << e.what();
  }

  const Corpus corpus = testing::SeparableCorpus();
  const TfidfModel good = FitToy(corpus);
  const LinearSvm svm = LinearSvm::Train(corpus, good);
  const LinearSvm again = LinearSvm::FromJson(svm.ToJson());
  EXPECT_EQ(again.Predict(good, corpus).predictions,
            svm.Predict(good, corpus).predictions);
  EXPECT_THROW(svm.Predict(tfidf, corpus), InputError);
}

TEST(Pegasos, MatchesBruteForceOnIdenticalVectors) {
  // Ten copies of one unit vector, 7 positive and 3 negative. With the bias as
  // an augmented feature the optimum has w = b, so the objective reduces to
  // f(s) = lambda * s^2 / 4 + mean hinge at decision s.
  const std::vector<SparseVector> x(10, SparseVector({{0, 1.0}}));
  const std::vector<int> y = {1, 1, 1, 1, 1, 1, 1, -1, -1, -1};
  SvmConfig config;
  config.epochs = 200;
  const SvmHead head = TrainBinaryHead(x, y, 1, config);
  const double lambda = 1.0 / 10.0;
  double best = 1e300, best_s = 0;
  for (int i = -40000; i <= 40000; ++i) {
    const double s = i * 1e-4;
    double loss = 0;
    for (int t : y) loss += std::max(0.0, 1 - t * s);
    const double f = lambda * s * s / 4 + loss / 10;
    if (f < best) best = f, best_s = s;
  }
  EXPECT_NEAR(best_s, 1.0, 1e-3);
  EXPECT_GT(head.Decision(x[0]), 0.0);
  EXPECT_NEAR(HingeObjective(head, x, y, lambda, 1.0), best, 5e-3);
}

TEST(Pegasos, ObjectiveDecreasesOnToyInstance) {
  const std::vector<SparseVector> x = {
      SparseVector({{0, 1.0}}), SparseVector({{0, 0.8}, {1, 0.6}}),
      SparseVector({{1, 1.0}}), SparseVector({{1, 0.6}, {2, 0.8}}),
      SparseVector({{2, 1.0}}), SparseVector({{0, 0.6}, {2, 0.8}})};
  const std::vector<int> y = {1, 1, -1, -1, -1, 1};
  SvmConfig config;
  config.epochs = 40;
  const SvmHead head = TrainBinaryHead(x, y, 3, config);
  ASSERT_EQ(head.objective_history.size(), 40u);
  const auto& h = head.objective_history;
  EXPECT_LT(h.back(), h.front());
  EXPECT_LE(*std::min_element(h.begin() + 20, h.end()),
            *std::min_element(h.begin(), h.begin() + 20) + 1e-9);
  const double lambda = 1.0 / 6.0;
  EXPECT_LE(HingeObjective(head, x, y, lambda, 1.0), h.front());
}

TEST(Predictions, ImportOptionsAndErrors) {
  const Corpus corpus = testing::SeparableCorpus();
  std::ostringstream text;
  const char letters[] = "abcd";
  int i = 0;
  for (const Speech& s : corpus.speeches) {
    for (const Sentence& x : s.sentences) {
      text << "{\"speech_id\":\"" << s.id << "\",\"index\":" << x.index
           << ",\"option\":\"" << letters[i++ % 4] << "\"}\n";
    }
  }
  std::istringstream in(text.str());
  const PredictionSet p = ImportPredictions(in, corpus);
  EXPECT_EQ(*p.find("t1", 0), L::Neutral());
  EXPECT_EQ(*p.find("t1", 1), L::AntiElitist());
  EXPECT_EQ(*p.find("t1", 2), L::PeopleCentric());
  EXPECT_EQ(*p.find("t1", 3), L::FullyPopulist());

  std::istringstream reversed(text.str());
  EXPECT_EQ(*ImportPredictions(reversed, corpus, OptionOrder::kReversed)
                 .find("t1", 0),
            L::FullyPopulist());

  std::istringstream missing(R"({"speech_id":"t1","index":0,"labels":[]})");
  try {
    ImportPredictions(missing, corpus);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("t1"), std::string::npos);
  }
  std::istringstream bad(R"({"speech_id":"t1","index":0,"labels":["ZZ"]})");
  EXPECT_THROW(ImportPredictions(bad, corpus), InputError);
}

TEST(Predictions, AllNeutralFileAndRoundTrip) {
  const Corpus corpus = testing::SeparableCorpus();
  std::ostringstream text;
  for (const Speech& s : corpus.speeches) {
    for (const Sentence& x : s.sentences) {
      text << "{\"speech_id\":\"" << s.id << "\",\"index\":" << x.index
           << ",\"labels\":[]}\n";
    }
  }
  std::istringstream in(text.str());
  const PredictionSet p = ImportPredictions(in, corpus);
  for (const auto& [key, labels] : p.labels) EXPECT_TRUE(labels.neutral());

  std::ostringstream out;
  WritePredictions(FromGold(corpus), corpus, out);
  std::istringstream back(out.str());
  EXPECT_EQ(ImportPredictions(back, corpus).labels, FromGold(corpus).labels);
}

}  // namespace
}  // namespace popdisc
