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

#ifndef POPDISC_SVG_PLOT_H_
#define POPDISC_SVG_PLOT_H_

#include <string>
#include <string_view>
#include <vector>

#include "popdisc/analysis.h"

namespace popdisc {

// Minimal SVG builder: rectangles, lines, polylines and text on a fixed
// canvas. Coordinates are pixels with the origin at the top left.
class SvgCanvas {
 public:
  SvgCanvas(double width, double height);

  void Rect(double x, double y, double w, double h, std::string_view fill);
  void Line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double width = 1.0);
  void Polyline(const std::vector<std::pair<double, double>>& points,
                std::string_view stroke, double width = 1.5);
  void Circle(double cx, double cy, double r, std::string_view fill);
  void Text(double x, double y, std::string_view text, double size = 12.0,
            std::string_view anchor = "start");

  std::string Render() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

// Per-speech PDI over time (by date), one colored series per campaign.
std::string PlotPdiTimeline(const std::vector<ScoreRecord>& records);

// Mean PV per bin for overall populism, AE and PC; stars mark comparisons
// flagged significant in `bin_stats` (rows as produced by AnalyzeBins).
std::string PlotPopulistVolume(const std::vector<ScoreRecord>& records,
                               const std::vector<StatsRow>& bin_stats);

// Mean PDI per campaign with +/- 1 SD whiskers.
std::string PlotCampaignMeans(const std::vector<ScoreRecord>& records);

}  // namespace popdisc

#endif  // POPDISC_SVG_PLOT_H_
