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

#include "popdisc/baselines.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "json.hpp"
#include "popdisc/errors.h"

namespace popdisc {
namespace {

constexpr int kSvmFormatVersion = 1;

bool TargetOf(LabelSet labels, LabelClass cls) { return HasClass(labels, cls); }

// Dense weight vector stored as scale * values so that the multiplicative
// shrink step is O(1).
class ScaledVector {
 public:
  explicit ScaledVector(std::size_t dimension) : values_(dimension, 0.0) {}

  // Dot product with x augmented by a trailing 1 for the bias.
  double DotAugmented(const SparseVector& x) const {
    double sum = values_.back();
    for (const auto& [index, weight] : x.entries()) sum += values_[index] * weight;
    return scale_ * sum;
  }

  void Scale(double factor) {
    scale_ *= factor;
    if (scale_ == 0.0) {
      std::fill(values_.begin(), values_.end(), 0.0);
      squared_norm_ = 0.0;
      scale_ = 1.0;
    } else if (scale_ < 1e-9) {
      Fold();
    }
  }

  // this += step * x_augmented
  void AddAugmented(const SparseVector& x, double step) {
    const double delta = step / scale_;
    for (const auto& [index, weight] : x.entries()) Bump(index, delta * weight);
    Bump(values_.size() - 1, delta);
  }

  double Norm() const { return scale_ * std::sqrt(std::max(squared_norm_, 0.0)); }

  std::vector<double> Materialize() const {
    std::vector<double> out(values_);
    for (double& v : out) v *= scale_;
    return out;
  }

  void Fold() {
    squared_norm_ = 0.0;
    for (double& v : values_) {
      v *= scale_;
      squared_norm_ += v * v;
    }
    scale_ = 1.0;
  }

 private:
  void Bump(std::size_t index, double delta) {
    const double old = values_[index];
    const double now = old + delta;
    values_[index] = now;
    squared_norm_ += now * now - old * old;
  }

  std::vector<double> values_;
  double scale_ = 1.0;
  double squared_norm_ = 0.0;
};

SvmHead HeadFromAugmented(const std::vector<double>& augmented) {
  SvmHead head;
  head.weights.assign(augmented.begin(), augmented.end() - 1);
  head.bias = augmented.back();
  return head;
}

}  // namespace

DistRandomSampler DistRandomSampler::Train(const Corpus& train, Mode mode) {
  std::array<double, 4> counts{};
  double total = 0.0;
  for (const Speech& speech : train.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (!sentence.gold) {
        throw InputError(fmt::format(
            "speech '{}' sentence {} has no gold label", speech.id,
            sentence.index));
      }
      counts[sentence.gold->code()] += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) throw InputError("training corpus is empty");
  for (double& c : counts) c /= total;
  return FromFrequencies(counts, mode);
}

DistRandomSampler DistRandomSampler::FromFrequencies(std::array<double, 4> joint,
                                                     Mode mode) {
  double total = 0.0;
  for (double p : joint) {
    if (!(p >= 0.0)) throw InputError("negative class frequency");
    total += p;
  }
  if (total <= 0.0) throw InputError("class frequencies sum to zero");
  DistRandomSampler sampler;
  for (std::size_t i = 0; i < 4; ++i) sampler.joint_[i] = joint[i] / total;
  sampler.mode_ = mode;
  return sampler;
}

LabelSet DistRandomSampler::Sample(PortableRng& rng) const {
  if (mode_ == Mode::kIndependent) {
    const bool ae = rng.Uniform() < anti_elitism_rate();
    const bool pc = rng.Uniform() < people_centrism_rate();
    return {ae, pc};
  }
  const double u = rng.Uniform();
  double cumulative = 0.0;
  for (int code = 0; code < 4; ++code) {
    cumulative += joint_[code];
    if (u < cumulative) return LabelSet::FromCode(code);
  }
  // Rounding left u above the final cumulative sum; take the last state with
  // nonzero mass.
  for (int code = 3; code >= 0; --code) {
    if (joint_[code] > 0.0) return LabelSet::FromCode(code);
  }
  return LabelSet::Neutral();
}

PredictionSet DistRandomSampler::Predict(const Corpus& corpus,
                                         std::uint64_t seed) const {
  PortableRng rng(seed);
  PredictionSet predictions;
  predictions.provenance = fmt::format("dist-random(seed={})", seed);
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      predictions.labels.emplace(SentenceKey{speech.id, sentence.index},
                                 Sample(rng));
    }
  }
  return predictions;
}

double SvmHead::Decision(const SparseVector& x) const {
  double sum = bias;
  for (const auto& [index, weight] : x.entries()) sum += weights[index] * weight;
  return sum;
}

double HingeObjective(const SvmHead& head,
                      std::span<const SparseVector> features,
                      std::span<const int> targets, double lambda,
                      double positive_weight) {
  double squared = head.bias * head.bias;
  for (double w : head.weights) squared += w * w;
  double loss = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double margin = targets[i] * head.Decision(features[i]);
    const double cost = targets[i] > 0 ? positive_weight : 1.0;
    loss += cost * std::max(0.0, 1.0 - margin);
  }
  return 0.5 * lambda * squared + loss / static_cast<double>(features.size());
}

SvmHead TrainBinaryHead(std::span<const SparseVector> features,
                        std::span<const int> targets, std::size_t dimension,
                        const SvmConfig& config) {
  if (features.empty()) throw InputError("no training examples");
  if (config.c <= 0.0) throw InputError("SVM C must be positive");
  if (config.epochs < 1) throw InputError("SVM epochs must be >= 1");
  const std::size_t n = features.size();
  const double lambda = 1.0 / (config.c * static_cast<double>(n));
  const double max_cost = std::max(1.0, config.positive_weight);
  const double radius = std::sqrt(max_cost / lambda);

  ScaledVector w(dimension + 1);
  std::vector<double> average(dimension + 1, 0.0);
  int averaged_epochs = 0;
  const int average_from = config.average ? config.epochs / 2 : config.epochs - 1;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  PortableRng rng(config.seed);
  std::vector<double> history;
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.Shuffle(order);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const int y = targets[i];
      const double margin = y * w.DotAugmented(features[i]);
      w.Scale(1.0 - 1.0 / static_cast<double>(t));
      if (margin < 1.0) {
        const double cost = y > 0 ? config.positive_weight : 1.0;
        w.AddAugmented(features[i], eta * y * cost);
      }
      const double norm = w.Norm();
      if (norm > radius) w.Scale(radius / norm);
    }
    w.Fold();
    const std::vector<double> current = w.Materialize();
    history.push_back(HingeObjective(HeadFromAugmented(current), features,
                                     targets, lambda, config.positive_weight));
    if (epoch >= average_from) {
      for (std::size_t j = 0; j < current.size(); ++j) average[j] += current[j];
      ++averaged_epochs;
    }
  }
  for (double& v : average) v /= averaged_epochs;
  SvmHead head = HeadFromAugmented(average);
  head.objective_history = std::move(history);
  return head;
}

LinearSvm LinearSvm::Train(std::span<const SparseVector> features,
                           std::span<const LabelSet> labels,
                           std::size_t vocab_size, std::uint64_t fingerprint,
                           const SvmConfig& config) {
  if (features.size() != labels.size()) {
    throw std::invalid_argument("features and labels differ in length");
  }
  LinearSvm model;
  model.config_ = config;
  model.vocab_size_ = vocab_size;
  model.fingerprint_ = fingerprint;
  for (LabelClass cls : kLabelClasses) {
    std::vector<int> targets(labels.size());
    std::size_t positives = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const bool positive = TargetOf(labels[i], cls);
      targets[i] = positive ? 1 : -1;
      positives += positive ? 1 : 0;
    }
    if (positives == 0) {
      throw InputError(fmt::format("class {} has no positive training examples",
                                   ClassName(cls)));
    }
    if (positives == labels.size()) {
      throw InputError(fmt::format("class {} has no negative training examples",
                                   ClassName(cls)));
    }
    SvmConfig head_config = config;
    head_config.seed = config.seed + static_cast<std::uint64_t>(cls);
    model.heads_[static_cast<int>(cls)] =
        TrainBinaryHead(features, targets, vocab_size, head_config);
  }
  return model;
}

LinearSvm LinearSvm::Train(const Corpus& train, const TfidfModel& tfidf,
                           const SvmConfig& config) {
  std::vector<SparseVector> features;
  std::vector<LabelSet> labels;
  features.reserve(train.sentence_count());
  for (const Speech& speech : train.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      if (!sentence.gold) {
        throw InputError(fmt::format("speech '{}' sentence {} has no gold label",
                                     speech.id, sentence.index));
      }
      features.push_back(tfidf.Transform(sentence.text));
      labels.push_back(*sentence.gold);
    }
  }
  return Train(features, labels, tfidf.size(), tfidf.Fingerprint(), config);
}

LabelSet LinearSvm::Classify(const SparseVector& x) const {
  return {head(LabelClass::kAntiElitism).Decision(x) > 0.0,
          head(LabelClass::kPeopleCentrism).Decision(x) > 0.0};
}

bool LinearSvm::NeutralHeadFires(const SparseVector& x) const {
  return head(LabelClass::kNeutral).Decision(x) > 0.0;
}

void LinearSvm::CheckVocabulary(const TfidfModel& tfidf) const {
  if (tfidf.size() != vocab_size_ || tfidf.Fingerprint() != fingerprint_) {
    throw InputError(fmt::format(
        "vocabulary mismatch: model expects {} features (fingerprint {:016x}), "
        "TF-IDF model has {} ({:016x})",
        vocab_size_, fingerprint_, tfidf.size(), tfidf.Fingerprint()));
  }
}

SvmPrediction LinearSvm::Predict(const TfidfModel& tfidf,
                                 const Corpus& corpus) const {
  CheckVocabulary(tfidf);
  SvmPrediction result;
  result.predictions.provenance = "tfidf-svm";
  for (const Speech& speech : corpus.speeches) {
    for (const Sentence& sentence : speech.sentences) {
      const SparseVector x = tfidf.Transform(sentence.text);
      const LabelSet labels = Classify(x);
      if (NeutralHeadFires(x) != labels.neutral()) {
        ++result.neutral_head_disagreements;
      }
      result.predictions.labels.emplace(SentenceKey{speech.id, sentence.index},
                                        labels);
    }
  }
  return result;
}

std::vector<std::pair<std::string, double>> LinearSvm::TopFeatures(
    const TfidfModel& tfidf, LabelClass cls, std::size_t k) const {
  CheckVocabulary(tfidf);
  const std::vector<double>& weights = head(cls).weights;
  std::vector<std::size_t> order(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& terms = tfidf.terms();
  auto better = [&](std::size_t a, std::size_t b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return terms[a] < terms[b];
  };
  k = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                    order.end(), better);
  std::vector<std::pair<std::string, double>> top;
  top.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    top.emplace_back(terms[order[i]], weights[order[i]]);
  }
  return top;
}

std::string LinearSvm::ToJson() const {
  nlohmann::ordered_json doc;
  doc["version"] = kSvmFormatVersion;
  doc["kind"] = "linear-svm";
  doc["vocab_size"] = vocab_size_;
  doc["vocab_fingerprint"] = fmt::format("{:016x}", fingerprint_);
  doc["config"] = {{"c", config_.c},
                   {"epochs", config_.epochs},
                   {"seed", config_.seed},
                   {"positive_weight", config_.positive_weight},
                   {"average", config_.average}};
  nlohmann::ordered_json heads;
  for (LabelClass cls : kLabelClasses) {
    const SvmHead& h = head(cls);
    heads[std::string(ClassName(cls))] = {{"bias", h.bias},
                                          {"weights", h.weights},
                                          {"objective", h.objective_history}};
  }
  doc["heads"] = std::move(heads);
  return doc.dump();
}

LinearSvm LinearSvm::FromJson(std::string_view json_text) {
  LinearSvm model;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.at("version").get<int>() != kSvmFormatVersion ||
        doc.at("kind").get<std::string>() != "linear-svm") {
      throw InputError("unsupported SVM model format");
    }
    model.vocab_size_ = doc.at("vocab_size").get<std::size_t>();
    model.fingerprint_ =
        std::stoull(doc.at("vocab_fingerprint").get<std::string>(), nullptr, 16);
    const auto& config = doc.at("config");
    model.config_.c = config.at("c").get<double>();
    model.config_.epochs = config.at("epochs").get<int>();
    model.config_.seed = config.at("seed").get<std::uint64_t>();
    model.config_.positive_weight = config.at("positive_weight").get<double>();
    model.config_.average = config.at("average").get<bool>();
    for (LabelClass cls : kLabelClasses) {
      const auto& h = doc.at("heads").at(std::string(ClassName(cls)));
      SvmHead& head = model.heads_[static_cast<int>(cls)];
      head.bias = h.at("bias").get<double>();
      head.weights = h.at("weights").get<std::vector<double>>();
      head.objective_history = h.value("objective", std::vector<double>{});
      if (head.weights.size() != model.vocab_size_) {
        throw InputError("SVM weight vector length does not match vocabulary");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed SVM model: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("malformed SVM model: ") + e.what());
  }
  return model;
}

}  // namespace popdisc
