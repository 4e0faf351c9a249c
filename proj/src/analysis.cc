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

#include "popdisc/analysis.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "popdisc/errors.h"

namespace popdisc {
namespace {

constexpr std::array<Campaign, 4> kCampaignOrder = {
    Campaign::kPrimaries2016, Campaign::kElection2016, Campaign::kElection2020,
    Campaign::kElection2024};

std::string_view CampaignLabel(Campaign campaign) {
  switch (campaign) {
    case Campaign::kPrimaries2016: return "2016 Primaries";
    case Campaign::kElection2016: return "2016 Campaign";
    case Campaign::kElection2020: return "2020 Campaign";
    case Campaign::kElection2024: return "2024 Campaign";
    case Campaign::kOther: return "Other";
  }
  return "Other";
}

double ParseDouble(const std::string& field, const char* column) {
  try {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::logic_error&) {
    throw InputError(fmt::format("column '{}': invalid number '{}'", column,
                                 field));
  }
}

std::optional<bool> ParseFlag(const std::string& field) {
  if (field.empty()) return std::nullopt;
  if (field == "true" || field == "1") return true;
  if (field == "false" || field == "0") return false;
  throw InputError("invalid boolean '" + field + "'");
}

double MetricOf(const ScoreRecord& record, Metric metric) {
  return metric == Metric::kPdi ? record.pdi : record.wpdi;
}

StatsRow RowFromTest(std::string comparison, const stats::TestResult& test) {
  StatsRow row;
  row.comparison = std::move(comparison);
  row.statistic = test.statistic;
  row.dof = test.dof2 ? fmt::format("{:g};{:g}", test.dof, *test.dof2)
                      : fmt::format("{:.6g}", test.dof);
  row.p_value = test.p_value;
  row.effect = test.effect_size;
  if (!test.dof2) row.mean_difference = test.mean_difference;
  return row;
}

void MarkFamily(std::vector<StatsRow>& rows, std::size_t first, double alpha,
                std::size_t family_size) {
  const double threshold = alpha / static_cast<double>(std::max<std::size_t>(family_size, 1));
  for (std::size_t i = first; i < rows.size(); ++i) {
    rows[i].significant = rows[i].p_value < threshold;
  }
}

}  // namespace

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back().push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::vector<ScoreRecord> ReadScoreCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  const std::vector<std::string> header = SplitCsvLine(line);
  std::map<std::string, std::size_t, std::less<>> column;
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const char* required : {"speech_id", "pdi", "wpdi"}) {
    if (!column.contains(required)) {
      throw InputError(fmt::format("score CSV lacks column '{}'", required));
    }
  }
  std::vector<ScoreRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    auto get = [&](std::string_view name) -> std::string {
      auto it = column.find(name);
      if (it == column.end() || it->second >= fields.size()) return {};
      return fields[it->second];
    };
    try {
      ScoreRecord r;
      r.speech_id = get("speech_id");
      r.date = get("date");
      if (const std::string c = get("campaign"); !c.empty()) {
        r.campaign = ParseCampaign(c);
      }
      r.state = get("state");
      if (const std::string n = get("n_scored"); !n.empty()) {
        r.n_scored = static_cast<std::size_t>(ParseDouble(n, "n_scored"));
      }
      r.pdi = ParseDouble(get("pdi"), "pdi");
      r.wpdi = ParseDouble(get("wpdi"), "wpdi");
      if (const std::string a = get("adjacency_pairs"); !a.empty()) {
        r.adjacency_pairs = static_cast<int>(ParseDouble(a, "adjacency_pairs"));
      }
      const std::array<std::string, 3> prefixes = {"pv_", "pv_ae_", "pv_pc_"};
      const std::array<std::string, 3> bins = {"open", "body", "close"};
      for (int type = 0; type < 3; ++type) {
        BinVector v{};
        bool present = true;
        for (int b = 0; b < 3; ++b) {
          const std::string name = prefixes[type] + bins[b];
          const std::string field = get(name);
          if (field.empty()) {
            present = false;
            break;
          }
          v[b] = ParseDouble(field, name.c_str());
        }
        if (present) r.pv[type] = v;
      }
      r.swing_ballotpedia = ParseFlag(get("swing_ballotpedia"));
      r.swing_high_attention = ParseFlag(get("swing_high_attention"));
      if (r.campaign && !r.state.empty()) {
        if (!r.swing_ballotpedia) {
          r.swing_ballotpedia = IsBallotpediaSwing(*r.campaign, r.state);
        }
        if (!r.swing_high_attention) {
          r.swing_high_attention = IsHighAttentionSwing(*r.campaign, r.state);
        }
      }
      records.push_back(std::move(r));
    } catch (const InputError& e) {
      throw InputError(fmt::format("score CSV line {}: {}", line_no, e.what()));
    }
  }
  return records;
}

std::string_view MetricName(Metric metric) {
  return metric == Metric::kPdi ? "PDI" : "WPDI";
}

Metric ParseMetric(std::string_view name) {
  if (name == "pdi" || name == "PDI") return Metric::kPdi;
  if (name == "wpdi" || name == "WPDI") return Metric::kWpdi;
  throw InputError("unknown metric '" + std::string(name) + "' (expected pdi|wpdi)");
}

Grouping ParseGrouping(std::string_view name) {
  if (name == "campaign") return Grouping::kCampaign;
  if (name == "swing-ballotpedia") return Grouping::kSwingBallotpedia;
  if (name == "swing-attention") return Grouping::kSwingAttention;
  if (name == "bins") return Grouping::kBins;
  throw InputError("unknown grouping '" + std::string(name) +
                   "' (expected campaign|swing-ballotpedia|swing-attention|bins)");
}

std::vector<StatsRow> AnalyzeCampaigns(const std::vector<ScoreRecord>& records,
                                       Metric metric, double alpha) {
  std::map<Campaign, std::vector<double>> groups;
  for (const ScoreRecord& r : records) {
    if (r.campaign && *r.campaign != Campaign::kOther) {
      groups[*r.campaign].push_back(MetricOf(r, metric));
    }
  }
  std::vector<Campaign> present;
  std::vector<std::vector<double>> samples;
  for (Campaign c : kCampaignOrder) {
    auto it = groups.find(c);
    if (it != groups.end() && it->second.size() >= 2) {
      present.push_back(c);
      samples.push_back(it->second);
    }
  }
  if (present.size() < 2) {
    throw DegenerateDataError(
        "campaign analysis needs >= 2 campaign periods with >= 2 speeches");
  }
  std::vector<StatsRow> rows;
  rows.push_back(RowFromTest(fmt::format("ANOVA {} by campaign", MetricName(metric)),
                             stats::OneWayAnova(samples)));
  for (std::size_t i = 0; i < present.size(); ++i) {
    for (std::size_t j = i + 1; j < present.size(); ++j) {
      rows.push_back(RowFromTest(
          fmt::format("{} vs {}", CampaignLabel(present[i]),
                      CampaignLabel(present[j])),
          stats::TTestIndependent(samples[i], samples[j])));
    }
  }
  MarkFamily(rows, 1, alpha, rows.size() - 1);
  rows.front().significant = rows.front().p_value < alpha;
  return rows;
}

std::vector<StatsRow> AnalyzeSwing(const std::vector<ScoreRecord>& records,
                                   bool ballotpedia, double alpha,
                                   int family_size) {
  std::vector<StatsRow> rows;
  for (Campaign campaign : kElectionCampaigns) {
    // [swing, non-swing][pdi, wpdi]
    std::array<std::array<std::vector<double>, 2>, 2> swing_values;
    for (const ScoreRecord& r : records) {
      if (r.campaign != campaign) continue;
      const auto& flag = ballotpedia ? r.swing_ballotpedia : r.swing_high_attention;
      if (!flag) continue;
      swing_values[*flag ? 0 : 1][0].push_back(r.pdi);
      swing_values[*flag ? 0 : 1][1].push_back(r.wpdi);
    }
    if (swing_values[0][0].size() < 2 || swing_values[1][0].size() < 2) continue;
    const std::size_t first = rows.size();
    for (Metric metric : {Metric::kPdi, Metric::kWpdi}) {
      const int m = metric == Metric::kPdi ? 0 : 1;
      rows.push_back(RowFromTest(
          fmt::format("{} {} swing vs non-swing ({})", CampaignLabel(campaign),
                      MetricName(metric),
                      ballotpedia ? "Ballotpedia" : "High Attention"),
          stats::TTestIndependent(swing_values[0][m], swing_values[1][m])));
    }
    MarkFamily(rows, first, alpha, static_cast<std::size_t>(family_size));
  }
  if (rows.empty()) {
    throw DegenerateDataError(
        "swing analysis needs a campaign with >= 2 swing and >= 2 non-swing "
        "speeches");
  }
  return rows;
}

std::vector<StatsRow> AnalyzeBins(const std::vector<ScoreRecord>& records,
                                  const ScoreConfig& config, double alpha) {
  struct Pair {
    const char* name;
    int left;
    int right;
  };
  constexpr Pair kPairs[] = {{"Opening vs Closing", 0, 2},
                             {"Opening vs Body", 0, 1},
                             {"Body vs Closing", 1, 2}};
  std::vector<StatsRow> rows;
  for (PopulismType type : kPopulismTypes) {
    std::array<std::vector<double>, 3> density;
    for (const ScoreRecord& r : records) {
      const auto& pv = r.pv[static_cast<int>(type)];
      if (!pv) continue;
      const BinVector d = DensityReweight(*pv, config);
      for (int b = 0; b < 3; ++b) density[b].push_back(d[b]);
    }
    if (density[0].size() < 2) {
      throw DegenerateDataError(fmt::format(
          "bin analysis needs >= 2 speeches with {} PV defined",
          PopulismTypeName(type)));
    }
    const std::size_t first = rows.size();
    for (const Pair& pair : kPairs) {
      rows.push_back(RowFromTest(
          fmt::format("{}: {}", PopulismTypeName(type), pair.name),
          stats::TTestPaired(density[pair.left], density[pair.right])));
    }
    MarkFamily(rows, first, alpha, 3);
  }
  return rows;
}

void WriteStatsCsv(const std::vector<StatsRow>& rows, std::ostream& out) {
  out << "comparison,statistic,dof,p,effect,mean_diff,"
         "significant_at_bonferroni\n";
  for (const StatsRow& row : rows) {
    out << fmt::format(
        "{},{:.6f},{},{:.6g},{:.6f},{},{}\n", row.comparison, row.statistic,
        row.dof, row.p_value, row.effect,
        row.mean_difference ? fmt::format("{:.6f}", *row.mean_difference)
                            : std::string(),
        row.significant ? (*row.significant ? "true" : "false") : "");
  }
}

std::vector<StatsRow> ReadStatsCsv(std::istream& in) {
  std::string line;
  std::vector<StatsRow> rows;
  if (!std::getline(in, line)) return rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = SplitCsvLine(line);
    if (fields.size() < 7) throw InputError("stats CSV row has too few columns");
    StatsRow row;
    row.comparison = fields[0];
    row.statistic = ParseDouble(fields[1], "statistic");
    row.dof = fields[2];
    row.p_value = ParseDouble(fields[3], "p");
    row.effect = ParseDouble(fields[4], "effect");
    if (!fields[5].empty()) row.mean_difference = ParseDouble(fields[5], "mean_diff");
    row.significant = ParseFlag(fields[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace popdisc
