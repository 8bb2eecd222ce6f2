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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fasthaar::plot {

struct Series {
  std::string label;
  std::vector<double> values;
};

struct PlotLabels {
  std::string title;
  std::string x_axis = "sample index";
  std::string y_axis = "value";
};

// Self-contained SVG line chart: one polyline per non-empty series, x is the
// sample index, y autoscaled to the data range plus a 5% margin. Output is a
// pure function of the input. Throws kEmptySeries if no series has data.
std::string render_svg(const std::vector<Series>& series,
                       const PlotLabels& labels = {});

void emit_svg_plot(const std::vector<Series>& series,
                   const std::filesystem::path& path,
                   const PlotLabels& labels = {});

}  // namespace fasthaar::plot
