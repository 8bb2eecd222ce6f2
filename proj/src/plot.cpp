/*
Copyright 2026 The fasthaar Authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "fasthaar/plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "fasthaar/error.hpp"
#include "fasthaar/io.hpp"

namespace fasthaar::plot {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;
constexpr int kTicks = 5;

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v, int precision = 2) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  std::string s(buf, end);
  return s == "-0.00" ? "0.00" : s;
}

std::string tick_label(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, end);
}

std::string escape(const std::string& text) {
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

}  // namespace

std::string render_svg(const std::vector<Series>& series,
                       const PlotLabels& labels) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::size_t longest = 0;
  for (const auto& s : series) {
    for (double v : s.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    longest = std::max(longest, s.values.size());
  }
  if (longest == 0) throw Error(Errc::kEmptySeries, "nothing to plot");

  double span = hi - lo;
  if (span == 0.0) span = std::max(std::abs(hi), 1.0);
  const double y_min = lo - 0.05 * span;
  const double y_max = hi + 0.05 * span;
  const double x_max = longest > 1 ? static_cast<double>(longest - 1) : 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double i) { return kLeft + i / x_max * plot_w; };
  auto py = [&](double v) {
    return kTop + (y_max - v) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth, 0) +
         "\" height=\"" + num(kHeight, 0) + "\" viewBox=\"0 0 " +
         num(kWidth, 0) + " " + num(kHeight, 0) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!labels.title.empty()) {
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"24\" " +
           "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape(labels.title) + "</text>\n";
  }

  // Axes frame and ticks.
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double frac = static_cast<double>(t) / kTicks;
    const double yv = y_min + frac * (y_max - y_min);
    const double xv = frac * x_max;
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(yv)) +
           "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(py(yv)) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(yv) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           tick_label(yv) + "</text>\n";
    svg += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(kTop + plot_h) +
           "\" x2=\"" + num(px(xv)) + "\" y2=\"" + num(kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           tick_label(xv) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 15) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(labels.x_axis) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " + num(kTop + plot_h / 2) + ")\">" +
         escape(labels.y_axis) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const std::string color = kPalette[i % kPalette.size()];
    if (!s.values.empty()) {
      svg += "<polyline fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        if (k > 0) svg.push_back(' ');
        svg += num(px(static_cast<double>(k))) + "," + num(py(s.values[k]));
      }
      svg += "\"/>\n";
    }
    const double ly = kTop + 10 + 20 * static_cast<double>(i);
    const double lx = kWidth - kRight + 15;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(lx + 25) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg_plot(const std::vector<Series>& series,
                   const std::filesystem::path& path,
                   const PlotLabels& labels) {
  io::write_file(path, render_svg(series, labels));
}

}  // namespace fasthaar::plot
