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

#ifndef POPDISC_BASELINES_H_
#define POPDISC_BASELINES_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "popdisc/corpus.h"
#include "popdisc/evaluation.h"
#include "popdisc/predictions.h"
#include "popdisc/random.h"
#include "popdisc/tfidf.h"

namespace popdisc {

// Stochastic baseline that draws labels from the training distribution.
class DistRandomSampler {
 public:
  enum class Mode {
    // Draw one of the four joint states with its empirical frequency.
    kJoint,
    // Draw AE and PC independently with their marginal rates.
    kIndependent,
  };

  // Requires gold labels on every training sentence.
  static DistRandomSampler Train(const Corpus& train, Mode mode = Mode::kJoint);
  static DistRandomSampler FromFrequencies(std::array<double, 4> joint,
                                           Mode mode = Mode::kJoint);

  // Probability of each joint state, indexed by LabelSet::code().
  const std::array<double, 4>& joint() const { return joint_; }
  double anti_elitism_rate() const { return joint_[1] + joint_[3]; }
  double people_centrism_rate() const { return joint_[2] + joint_[3]; }

  LabelSet Sample(PortableRng& rng) const;
  // One draw per sentence in corpus order.
  PredictionSet Predict(const Corpus& corpus, std::uint64_t seed) const;

 private:
  std::array<double, 4> joint_{1.0, 0.0, 0.0, 0.0};
  Mode mode_ = Mode::kJoint;
};

struct SvmConfig {
  // Hinge-loss weight; the regularizer is lambda = 1 / (c * n).
  double c = 1.0;
  int epochs = 30;
  std::uint64_t seed = 0;
  // Loss multiplier for positive examples (1 = no reweighting).
  double positive_weight = 1.0;
  // Return the mean of the end-of-epoch iterates over the second half of
  // training instead of the last iterate.
  bool average = true;
};

struct SvmHead {
  std::vector<double> weights;
  double bias = 0.0;
  // Primal objective after each epoch.
  std::vector<double> objective_history;

  double Decision(const SparseVector& x) const;
};

struct SvmPrediction {
  PredictionSet predictions;
  // Sentences where the N head's verdict differs from "no AE and no PC".
  std::size_t neutral_head_disagreements = 0;
};

// One-vs-rest linear SVM over TF-IDF features: independent binary heads for
// N, AE and PC, each trained with Pegasos-style projected subgradient steps
// on the regularized hinge loss. The bias is an extra regularized feature.
class LinearSvm {
 public:
  static LinearSvm Train(std::span<const SparseVector> features,
                         std::span<const LabelSet> labels,
                         std::size_t vocab_size, std::uint64_t fingerprint,
                         const SvmConfig& config = {});
  static LinearSvm Train(const Corpus& train, const TfidfModel& tfidf,
                         const SvmConfig& config = {});

  // AE iff its head is positive, PC likewise; neutral iff neither fires.
  LabelSet Classify(const SparseVector& x) const;
  bool NeutralHeadFires(const SparseVector& x) const;
  SvmPrediction Predict(const TfidfModel& tfidf, const Corpus& corpus) const;

  // Top-k (n-gram, weight) pairs by signed weight, ties by n-gram.
  std::vector<std::pair<std::string, double>> TopFeatures(
      const TfidfModel& tfidf, LabelClass cls, std::size_t k) const;

  const SvmHead& head(LabelClass cls) const {
    return heads_[static_cast<int>(cls)];
  }
  const SvmConfig& config() const { return config_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  std::string ToJson() const;
  static LinearSvm FromJson(std::string_view json_text);

 private:
  void CheckVocabulary(const TfidfModel& tfidf) const;

  std::array<SvmHead, 3> heads_;
  SvmConfig config_;
  std::size_t vocab_size_ = 0;
  std::uint64_t fingerprint_ = 0;
};

// Trains a single binary head; exposed for optimizer tests. `targets` holds
// +1 / -1 per example.
SvmHead TrainBinaryHead(std::span<const SparseVector> features,
                        std::span<const int> targets, std::size_t dimension,
                        const SvmConfig& config);

// lambda/2 (|w|^2 + b^2) + mean weighted hinge loss.
double HingeObjective(const SvmHead& head,
                      std::span<const SparseVector> features,
                      std::span<const int> targets, double lambda,
                      double positive_weight);

}  // namespace popdisc

#endif  // POPDISC_BASELINES_H_
