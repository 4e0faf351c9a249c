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

#include "popdisc/scoring.h"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "popdisc/errors.h"

namespace popdisc {
namespace {

constexpr double kBoundaryEpsilon = 1e-12;

bool FormsAdjacencyPair(LabelSet a, LabelSet b, const ScoreConfig& config) {
  if (config.fully_populist_in_pairs) {
    const bool ae_pc = a.anti_elitism && b.people_centrism;
    const bool pc_ae = a.people_centrism && b.anti_elitism;
    return (ae_pc || pc_ae) && !(a.fully_populist() && b.fully_populist());
  }
  return (a.only_anti_elitism() && b.only_people_centrism()) ||
         (a.only_people_centrism() && b.only_anti_elitism());
}

std::string FormatOptional(const std::optional<BinVector>& pv, int bin) {
  return pv ? fmt::format("{:.6f}", (*pv)[bin]) : std::string();
}

std::string FormatFlag(const std::optional<bool>& flag) {
  if (!flag) return {};
  return *flag ? "true" : "false";
}

}  // namespace

void ScoreConfig::Validate() const {
  if (!(full_boost >= 1.0)) throw InputError("full_boost must be >= 1");
  if (!(adjacency_multiplier >= 1.0)) {
    throw InputError("adjacency_multiplier must be >= 1");
  }
  if (!(scale > 0.0)) throw InputError("scale must be positive");
  double total = 0.0;
  for (double fraction : bins) {
    if (!(fraction > 0.0)) throw InputError("bin fractions must be positive");
    total += fraction;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("bin fractions must sum to 1");
  }
}

double SentenceScore(LabelSet labels, const ScoreConfig& config) {
  if (labels.fully_populist()) return config.full_boost;
  return labels.populist() ? 1.0 : 0.0;
}

AdjustedScores AdjustScores(std::span<const LabelSet> labels,
                            const ScoreConfig& config) {
  AdjustedScores out;
  out.scores.reserve(labels.size());
  for (LabelSet l : labels) out.scores.push_back(SentenceScore(l, config));
  std::size_t i = 0;
  while (i + 1 < labels.size()) {
    if (FormsAdjacencyPair(labels[i], labels[i + 1], config)) {
      out.scores[i] *= config.adjacency_multiplier;
      out.scores[i + 1] *= config.adjacency_multiplier;
      ++out.adjacency_pairs;
      i += 2;
    } else {
      ++i;
    }
  }
  return out;
}

std::string_view PopulismTypeName(PopulismType type) {
  switch (type) {
    case PopulismType::kOverall: return "Overall";
    case PopulismType::kAntiElitism: return "Anti-elitism";
    case PopulismType::kPeopleCentrism: return "People-centrism";
  }
  return "Overall";
}

int BinOf(std::size_t position, std::size_t count, const ScoreConfig& config) {
  const double fraction =
      static_cast<double>(position) / static_cast<double>(count);
  const double body_start = config.bins[0];
  const double closing_start = config.bins[0] + config.bins[1];
  if (fraction >= closing_start - kBoundaryEpsilon) return 2;
  if (fraction >= body_start - kBoundaryEpsilon) return 1;
  return 0;
}

PopulistVolume ComputePopulistVolume(std::span<const LabelSet> labels,
                                     const ScoreConfig& config) {
  std::array<BinVector, 3> counts{};
  std::array<double, 3> totals{};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int bin = BinOf(i, labels.size(), config);
    const LabelSet l = labels[i];
    const bool member[3] = {l.populist(), l.anti_elitism, l.people_centrism};
    for (int type = 0; type < 3; ++type) {
      if (!member[type]) continue;
      counts[type][bin] += 1.0;
      totals[type] += 1.0;
    }
  }
  PopulistVolume pv;
  for (int type = 0; type < 3; ++type) {
    if (totals[type] == 0.0) continue;
    BinVector shares{};
    for (int bin = 0; bin < 3; ++bin) shares[bin] = counts[type][bin] / totals[type];
    pv.by_type[type] = shares;
  }
  return pv;
}

BinVector DensityReweight(const BinVector& pv, const ScoreConfig& config) {
  BinVector density{};
  for (int bin = 0; bin < 3; ++bin) density[bin] = pv[bin] / config.bins[bin];
  return density;
}

SpeechScore ScoreSpeech(const Speech& speech,
                        std::span<const std::optional<LabelSet>> labels,
                        const ScoreConfig& config) {
  if (labels.size() != speech.size()) {
    throw std::invalid_argument("label vector does not match speech length");
  }
  SpeechScore score;
  score.speech_id = speech.id;

  std::vector<LabelSet> kept_labels;
  std::vector<int> kept_lengths;
  bool all_labeled = true;
  for (std::size_t i = 0; i < speech.size(); ++i) {
    const Sentence& sentence = speech.sentences[i];
    all_labeled = all_labeled && labels[i].has_value();
    if (IsExcludedFromScoring(sentence)) {
      ++score.n_dropped;
      continue;
    }
    if (!labels[i]) {
      throw InputError(fmt::format("speech '{}' sentence {} has no label",
                                   speech.id, sentence.index));
    }
    kept_labels.push_back(*labels[i]);
    kept_lengths.push_back(sentence.word_count);
  }

  const AdjustedScores adjusted = AdjustScores(kept_labels, config);
  score.n_scored = kept_labels.size();
  score.adjacency_pairs = adjusted.adjacency_pairs;
  for (double s : adjusted.scores) score.raw_sum += s;
  score.pdi = score.n_scored == 0
                  ? 0.0
                  : config.scale * score.raw_sum /
                        static_cast<double>(score.n_scored);

  double populist_words = 0.0, neutral_words = 0.0;
  std::size_t populist_count = 0, neutral_count = 0;
  for (std::size_t i = 0; i < kept_labels.size(); ++i) {
    if (kept_labels[i].populist()) {
      populist_words += kept_lengths[i];
      ++populist_count;
    } else {
      neutral_words += kept_lengths[i];
      ++neutral_count;
    }
  }
  if (populist_count > 0) {
    score.mean_len_populist = populist_words / static_cast<double>(populist_count);
  }
  if (neutral_count > 0) {
    score.mean_len_neutral = neutral_words / static_cast<double>(neutral_count);
  }
  score.length_ratio_defined = populist_count > 0 && neutral_count > 0;
  score.wpdi = score.length_ratio_defined
                   ? score.pdi * score.mean_len_populist / score.mean_len_neutral
                   : score.pdi;

  if (all_labeled && !labels.empty()) {
    std::vector<LabelSet> every;
    every.reserve(labels.size());
    for (const auto& l : labels) every.push_back(*l);
    score.pv = ComputePopulistVolume(every, config);
  }
  return score;
}

void WriteScoreCsvHeader(std::ostream& out) {
  out << "speech_id,date,campaign,state,n_scored,pdi,wpdi,pv_open,pv_body,"
         "pv_close,adjacency_pairs,pv_ae_open,pv_ae_body,pv_ae_close,"
         "pv_pc_open,pv_pc_body,pv_pc_close,swing_ballotpedia,"
         "swing_high_attention\n";
}

void WriteScoreCsvRow(const Speech& speech, const SpeechScore& score,
                      std::ostream& out) {
  const auto& overall = score.pv.at(PopulismType::kOverall);
  const auto& ae = score.pv.at(PopulismType::kAntiElitism);
  const auto& pc = score.pv.at(PopulismType::kPeopleCentrism);
  std::string id = speech.id;
  if (id.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : id) {
      if (c == '"') quoted.push_back('"');
      quoted.push_back(c);
    }
    id = quoted + "\"";
  }
  out << fmt::format(
      "{},{},{},{},{},{:.6f},{:.6f},{},{},{},{},{},{},{},{},{},{},{},{}\n", id,
      speech.date ? FormatDate(*speech.date) : std::string(),
      speech.campaign ? std::string(CampaignName(*speech.campaign))
                      : std::string(),
      speech.state.value_or(""), score.n_scored, score.pdi, score.wpdi,
      FormatOptional(overall, 0), FormatOptional(overall, 1),
      FormatOptional(overall, 2), score.adjacency_pairs, FormatOptional(ae, 0),
      FormatOptional(ae, 1), FormatOptional(ae, 2), FormatOptional(pc, 0),
      FormatOptional(pc, 1), FormatOptional(pc, 2),
      FormatFlag(speech.swing_ballotpedia),
      FormatFlag(speech.swing_high_attention));
}

}  // namespace popdisc
