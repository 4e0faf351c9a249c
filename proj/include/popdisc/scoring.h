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

#ifndef POPDISC_SCORING_H_
#define POPDISC_SCORING_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "popdisc/corpus.h"
#include "popdisc/label_set.h"

namespace popdisc {

struct ScoreConfig {
  // Score of a sentence carrying both labels.
  double full_boost = 3.0;
  // Applied to both members of an adjacent AE/PC single-label pair.
  double adjacency_multiplier = 1.5;
  double scale = 100.0;
  // Opening, body and closing fractions of a speech.
  std::array<double, 3> bins = {0.2, 0.6, 0.2};
  // Let fully populist sentences join adjacency pairs.
  bool fully_populist_in_pairs = false;

  // Throws InputError when a field is out of range.
  void Validate() const;
};

double SentenceScore(LabelSet labels, const ScoreConfig& config = {});

struct AdjustedScores {
  std::vector<double> scores;
  int adjacency_pairs = 0;
};

// Base sentence scores with the adjacency multiplier applied to consecutive
// {AE},{PC} (or {PC},{AE}) pairs, chosen greedily left to right without
// overlap.
AdjustedScores AdjustScores(std::span<const LabelSet> labels,
                            const ScoreConfig& config = {});

enum class PopulismType { kOverall = 0, kAntiElitism = 1, kPeopleCentrism = 2 };

inline constexpr std::array<PopulismType, 3> kPopulismTypes = {
    PopulismType::kOverall, PopulismType::kAntiElitism,
    PopulismType::kPeopleCentrism};

std::string_view PopulismTypeName(PopulismType type);

using BinVector = std::array<double, 3>;

// Share of a speech's populist sentences per positional bin, for overall
// populism, AE and PC. A category without any positive sentence is nullopt.
struct PopulistVolume {
  std::array<std::optional<BinVector>, 3> by_type;

  const std::optional<BinVector>& at(PopulismType type) const {
    return by_type[static_cast<int>(type)];
  }
};

// Bin of a sentence at `position` of `count`; a position on a boundary goes
// to the later bin.
int BinOf(std::size_t position, std::size_t count, const ScoreConfig& config);

// Uses every sentence (no scoring filters). Labels must cover all sentences.
PopulistVolume ComputePopulistVolume(std::span<const LabelSet> labels,
                                     const ScoreConfig& config = {});

// PV_i / bin_fraction_i; 1 everywhere for uniformly spread discourse.
BinVector DensityReweight(const BinVector& pv, const ScoreConfig& config = {});

struct SpeechScore {
  std::string speech_id;
  std::size_t n_scored = 0;
  std::size_t n_dropped = 0;
  double raw_sum = 0.0;
  double pdi = 0.0;
  double wpdi = 0.0;
  double mean_len_populist = 0.0;
  double mean_len_neutral = 0.0;
  // False when the WPDI length ratio fell back to 1.
  bool length_ratio_defined = false;
  int adjacency_pairs = 0;
  PopulistVolume pv;
};

// Applies the scoring filters, adjacency-adjusted sentence scores and
// pdi = scale * raw_sum / n_scored, wpdi = pdi * mean populist length /
// mean neutral length over kept sentences. PV is computed over all
// sentences when every sentence is labeled. `labels` aligns with
// speech.sentences; an unlabeled kept sentence is an InputError.
SpeechScore ScoreSpeech(const Speech& speech,
                        std::span<const std::optional<LabelSet>> labels,
                        const ScoreConfig& config = {});

// speech_id,date,campaign,state,n_scored,pdi,wpdi,pv_open,pv_body,pv_close,
// adjacency_pairs followed by the AE/PC volumes and swing flags.
void WriteScoreCsvHeader(std::ostream& out);
void WriteScoreCsvRow(const Speech& speech, const SpeechScore& score,
                      std::ostream& out);

}  // namespace popdisc

#endif  // POPDISC_SCORING_H_
