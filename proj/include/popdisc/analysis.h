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

#ifndef POPDISC_ANALYSIS_H_
#define POPDISC_ANALYSIS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popdisc/corpus.h"
#include "popdisc/scoring.h"
#include "popdisc/stats.h"

namespace popdisc {

// One row of the score CSV, as read back for analysis and plotting.
struct ScoreRecord {
  std::string speech_id;
  std::string date;
  std::optional<Campaign> campaign;
  std::string state;
  std::size_t n_scored = 0;
  double pdi = 0.0;
  double wpdi = 0.0;
  int adjacency_pairs = 0;
  std::array<std::optional<BinVector>, 3> pv;
  std::optional<bool> swing_ballotpedia;
  std::optional<bool> swing_high_attention;
};

// Splits one CSV line (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> SplitCsvLine(std::string_view line);

std::vector<ScoreRecord> ReadScoreCsv(std::istream& in);

struct StatsRow {
  std::string comparison;
  double statistic = 0.0;
  std::string dof;
  double p_value = 1.0;
  double effect = 0.0;
  std::optional<double> mean_difference;
  std::optional<bool> significant;
};

enum class Metric { kPdi, kWpdi };
std::string_view MetricName(Metric metric);
Metric ParseMetric(std::string_view name);

enum class Grouping { kCampaign, kSwingBallotpedia, kSwingAttention, kBins };
Grouping ParseGrouping(std::string_view name);

// ANOVA across the campaign periods present, then pooled t-tests for every
// pair of campaigns; pairwise significance uses a Bonferroni threshold over
// the pairwise family.
std::vector<StatsRow> AnalyzeCampaigns(const std::vector<ScoreRecord>& records,
                                       Metric metric, double alpha = 0.05);

// Swing vs non-swing t-tests per general-election campaign for PDI and WPDI;
// mean difference is swing minus non-swing. Significance uses alpha /
// family_size within each campaign.
std::vector<StatsRow> AnalyzeSwing(const std::vector<ScoreRecord>& records,
                                   bool ballotpedia, double alpha = 0.05,
                                   int family_size = 4);

// Paired t-tests between opening, body and closing bins on density-reweighted
// PV, for overall populism, AE and PC; Bonferroni over the three comparisons
// of each type. Speeches without PV for a type are excluded from it.
std::vector<StatsRow> AnalyzeBins(const std::vector<ScoreRecord>& records,
                                  const ScoreConfig& config = {},
                                  double alpha = 0.05);

// comparison,statistic,dof,p,effect,mean_diff,significant_at_bonferroni
void WriteStatsCsv(const std::vector<StatsRow>& rows, std::ostream& out);
std::vector<StatsRow> ReadStatsCsv(std::istream& in);

}  // namespace popdisc

#endif  // POPDISC_ANALYSIS_H_
