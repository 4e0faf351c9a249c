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

#include <sstream>

#include <gtest/gtest.h>

#include "popdisc/errors.h"
#include "popdisc/predictions.h"
#include "popdisc/stats.h"
#include "popdisc/svg_plot.h"
#include "synthetic.h"

namespace popdisc {
namespace {

std::vector<ScoreRecord> ScoreRally(std::size_t sentences, std::uint64_t seed) {
  const Corpus corpus = synthetic::RallyCorpus(sentences, seed);
  std::ostringstream csv;
  WriteScoreCsvHeader(csv);
  for (const Speech& speech : corpus.speeches) {
    WriteScoreCsvRow(speech, ScoreSpeech(speech, GoldLabels(speech)), csv);
  }
  std::istringstream in(csv.str());
  return ReadScoreCsv(in);
}

TEST(Analysis, CsvRoundTripKeepsMetadata) {
  const auto records = ScoreRally(8000, 1);
  ASSERT_EQ(records.size(), 713u);
  EXPECT_EQ(records[0].campaign, Campaign::kPrimaries2016);
  EXPECT_FALSE(records[0].swing_ballotpedia.has_value());
  EXPECT_EQ(records.back().campaign, Campaign::kElection2024);
  EXPECT_TRUE(records.back().swing_ballotpedia.has_value());
  EXPECT_TRUE(records.back().swing_high_attention.has_value());
  EXPECT_FALSE(records[0].date.empty());
}

TEST(Analysis, CampaignRowsMatchDirectTests) {
  const auto records = ScoreRally(20000, 2);
  const auto rows = AnalyzeCampaigns(records, Metric::kPdi);
  ASSERT_EQ(rows.size(), 7u);
  std::vector<double> primaries, general;
  for (const auto& r : records) {
    if (r.campaign == Campaign::kPrimaries2016) primaries.push_back(r.pdi);
    if (r.campaign == Campaign::kElection2016) general.push_back(r.pdi);
  }
  const auto t = stats::TTestIndependent(primaries, general);
  EXPECT_EQ(rows[1].comparison, "2016 Primaries vs 2016 Campaign");
  EXPECT_DOUBLE_EQ(rows[1].statistic, t.statistic);
  EXPECT_EQ(rows[1].significant, t.p_value < 0.05 / 6);
}

TEST(Analysis, StatsCsvRoundTrip) {
  const auto rows = AnalyzeBins(ScoreRally(20000, 3));
  ASSERT_EQ(rows.size(), 9u);
  std::ostringstream out;
  WriteStatsCsv(rows, out);
  std::istringstream in(out.str());
  const auto back = ReadStatsCsv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].comparison, rows[i].comparison);
    EXPECT_EQ(back[i].significant, rows[i].significant);
  }
}

TEST(Analysis, SvgRendering) {
  const auto records = ScoreRally(5000, 4);
  for (const std::string& svg :
       {PlotPdiTimeline(records), PlotCampaignMeans(records),
        PlotPopulistVolume(records, {})}) {
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
  }
}

TEST(Analysis, ParsersRejectUnknownNames) {
  EXPECT_THROW(ParseGrouping("decade"), InputError);
  EXPECT_THROW(ParseMetric("mean"), InputError);
  EXPECT_EQ(SplitCsvLine("a,\"b,c\",d"), (std::vector<std::string>{"a", "b,c", "d"}));
}

}  // namespace
}  // namespace popdisc
