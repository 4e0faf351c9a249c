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

#include "popdisc/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "popdisc/stats.h"

namespace popdisc {
namespace {

constexpr std::string_view kPalette[] = {"#4c72b0", "#dd8452", "#55a868",
                                         "#c44e52", "#8172b3"};

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Days since 1970-01-01 for a YYYY-MM-DD string; nullopt if unparsable.
std::optional<double> DayNumber(const std::string& date) {
  if (date.size() != 10) return std::nullopt;
  try {
    const auto ymd = ParseDate(date);
    return static_cast<double>(
        std::chrono::sys_days{ymd}.time_since_epoch().count());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string Stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

struct Frame {
  double left = 60, right = 20, top = 40, bottom = 50;
  double width = 800, height = 400;
  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
};

void DrawAxes(SvgCanvas& svg, const Frame& f, double y_max,
              std::string_view y_label) {
  svg.Line(f.left, f.top, f.left, f.top + f.plot_h(), "#333");
  svg.Line(f.left, f.top + f.plot_h(), f.left + f.plot_w(), f.top + f.plot_h(),
           "#333");
  for (int tick = 0; tick <= 4; ++tick) {
    const double value = y_max * tick / 4.0;
    const double y = f.top + f.plot_h() * (1.0 - tick / 4.0);
    svg.Line(f.left - 4, y, f.left, y, "#333");
    svg.Text(f.left - 6, y + 4, fmt::format("{:.2f}", value), 10, "end");
  }
  svg.Text(14, f.top + f.plot_h() / 2, y_label, 12, "middle");
}

}  // namespace

SvgCanvas::SvgCanvas(double width, double height)
    : width_(width), height_(height) {}

void SvgCanvas::Rect(double x, double y, double w, double h,
                     std::string_view fill) {
  body_ += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "fill=\"{}\"/>\n",
      x, y, w, h, fill);
}

void SvgCanvas::Line(double x1, double y1, double x2, double y2,
                     std::string_view stroke, double width) {
  body_ += fmt::format(
      "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
      "stroke=\"{}\" stroke-width=\"{:.2f}\"/>\n",
      x1, y1, x2, y2, stroke, width);
}

void SvgCanvas::Polyline(const std::vector<std::pair<double, double>>& points,
                         std::string_view stroke, double width) {
  std::string coords;
  for (const auto& [x, y] : points) coords += fmt::format("{:.2f},{:.2f} ", x, y);
  if (!coords.empty()) coords.pop_back();
  body_ += fmt::format(
      "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" "
      "stroke-width=\"{:.2f}\"/>\n",
      coords, stroke, width);
}

void SvgCanvas::Circle(double cx, double cy, double r, std::string_view fill) {
  body_ += fmt::format(
      "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" fill=\"{}\"/>\n", cx, cy,
      r, fill);
}

void SvgCanvas::Text(double x, double y, std::string_view text, double size,
                     std::string_view anchor) {
  body_ += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"{:.1f}\" "
      "font-family=\"sans-serif\" text-anchor=\"{}\">{}</text>\n",
      x, y, size, anchor, Escape(text));
}

std::string SvgCanvas::Render() const {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" "
      "height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{2}</svg>\n",
      width_, height_, body_);
}

std::string PlotPdiTimeline(const std::vector<ScoreRecord>& records) {
  Frame f;
  SvgCanvas svg(f.width, f.height);
  std::vector<std::pair<double, const ScoreRecord*>> dated;
  for (const ScoreRecord& r : records) {
    if (auto day = DayNumber(r.date)) dated.emplace_back(*day, &r);
  }
  std::stable_sort(dated.begin(), dated.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double y_max = 0.0;
  for (const ScoreRecord& r : records) y_max = std::max(y_max, r.pdi);
  if (y_max <= 0.0) y_max = 1.0;
  DrawAxes(svg, f, y_max, "PDI");
  svg.Text(f.width / 2, 24, "PDI per speech over time", 14, "middle");
  if (dated.empty()) return svg.Render();

  const double first = dated.front().first;
  const double span = std::max(1.0, dated.back().first - first);
  auto x_of = [&](double day) { return f.left + f.plot_w() * (day - first) / span; };
  auto y_of = [&](double v) { return f.top + f.plot_h() * (1.0 - v / y_max); };

  std::map<int, std::vector<std::pair<double, double>>> series;
  for (const auto& [day, r] : dated) {
    const int key = r->campaign ? static_cast<int>(*r->campaign) : 4;
    series[key].emplace_back(x_of(day), y_of(r->pdi));
  }
  for (const auto& [key, points] : series) {
    const auto color = kPalette[key % 5];
    svg.Polyline(points, color, 1.0);
    for (const auto& [x, y] : points) svg.Circle(x, y, 2.0, color);
    const std::string_view name =
        key == 4 ? "Other" : CampaignName(static_cast<Campaign>(key));
    svg.Text(f.left + 10 + 130.0 * key, f.height - 12, name, 11);
    svg.Rect(f.left + 130.0 * key, f.height - 21, 8, 8, color);
  }
  svg.Text(f.left, f.top + f.plot_h() + 16, dated.front().second->date, 10);
  svg.Text(f.left + f.plot_w(), f.top + f.plot_h() + 16, dated.back().second->date,
           10, "end");
  return svg.Render();
}

std::string PlotPopulistVolume(const std::vector<ScoreRecord>& records,
                               const std::vector<StatsRow>& bin_stats) {
  Frame f;
  SvgCanvas svg(f.width, f.height);
  svg.Text(f.width / 2, 24, "Populist volume by speech segment", 14, "middle");
  std::array<BinVector, 3> means{};
  for (int type = 0; type < 3; ++type) {
    std::array<std::vector<double>, 3> values;
    for (const ScoreRecord& r : records) {
      if (!r.pv[type]) continue;
      for (int b = 0; b < 3; ++b) values[b].push_back((*r.pv[type])[b]);
    }
    for (int b = 0; b < 3; ++b) {
      means[type][b] = values[b].empty() ? 0.0 : stats::Mean(values[b]);
    }
  }
  const double y_max = 1.0;
  DrawAxes(svg, f, y_max, "PV");
  constexpr std::string_view kBinNames[] = {"Opening", "Body", "Closing"};
  const double group_w = f.plot_w() / 3.0;
  const double bar_w = group_w / 4.5;
  for (int type = 0; type < 3; ++type) {
    const double gx = f.left + group_w * type + bar_w * 0.5;
    for (int b = 0; b < 3; ++b) {
      const double h = f.plot_h() * means[type][b] / y_max;
      const double x = gx + bar_w * 1.1 * b;
      svg.Rect(x, f.top + f.plot_h() - h, bar_w * 0.9, h, kPalette[b]);
      svg.Text(x + bar_w * 0.45, f.top + f.plot_h() - h - 4,
               fmt::format("{:.2f}", means[type][b]), 9, "middle");
    }
    const std::string type_name(PopulismTypeName(static_cast<PopulismType>(type)));
    svg.Text(gx + bar_w * 1.8, f.top + f.plot_h() + 18, type_name, 12, "middle");
    std::string annotation;
    for (const StatsRow& row : bin_stats) {
      if (!row.comparison.starts_with(type_name + ":")) continue;
      const std::string stars =
          row.significant.value_or(true) ? Stars(row.p_value) : std::string();
      if (!stars.empty()) {
        annotation += row.comparison.substr(type_name.size() + 2) + " " + stars + "  ";
      }
    }
    if (!annotation.empty()) {
      svg.Text(gx + bar_w * 1.8, f.top + 14 + 14.0 * type, annotation, 9, "middle");
    }
  }
  for (int b = 0; b < 3; ++b) {
    svg.Rect(f.left + 10 + 110.0 * b, f.height - 21, 8, 8, kPalette[b]);
    svg.Text(f.left + 22 + 110.0 * b, f.height - 13, kBinNames[b], 11);
  }
  return svg.Render();
}

std::string PlotCampaignMeans(const std::vector<ScoreRecord>& records) {
  Frame f;
  SvgCanvas svg(f.width, f.height);
  svg.Text(f.width / 2, 24, "Mean PDI by campaign", 14, "middle");
  constexpr Campaign kOrder[] = {Campaign::kPrimaries2016, Campaign::kElection2016,
                                 Campaign::kElection2020, Campaign::kElection2024};
  std::array<std::vector<double>, 4> values;
  for (const ScoreRecord& r : records) {
    for (int i = 0; i < 4; ++i) {
      if (r.campaign == kOrder[i]) values[i].push_back(r.pdi);
    }
  }
  std::array<double, 4> mean{}, sd{};
  double y_max = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (values[i].empty()) continue;
    mean[i] = stats::Mean(values[i]);
    sd[i] = values[i].size() > 1 ? std::sqrt(stats::Variance(values[i])) : 0.0;
    y_max = std::max(y_max, mean[i] + sd[i]);
  }
  if (y_max <= 0.0) y_max = 1.0;
  DrawAxes(svg, f, y_max, "PDI");
  const double slot = f.plot_w() / 4.0;
  for (int i = 0; i < 4; ++i) {
    const double x = f.left + slot * i + slot * 0.2;
    const double h = f.plot_h() * mean[i] / y_max;
    const double base = f.top + f.plot_h();
    svg.Rect(x, base - h, slot * 0.6, h, kPalette[i]);
    const double cx = x + slot * 0.3;
    const double hi = base - f.plot_h() * (mean[i] + sd[i]) / y_max;
    const double lo = base - f.plot_h() * std::max(0.0, mean[i] - sd[i]) / y_max;
    svg.Line(cx, hi, cx, lo, "#222");
    svg.Text(cx, base + 16, fmt::format("{} (n={})", CampaignName(kOrder[i]),
                                        values[i].size()),
             10, "middle");
  }
  return svg.Render();
}

}  // namespace popdisc
