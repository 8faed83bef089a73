// Copyright 2026 The spindeph Authors
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

#pragma once

#include <string>
#include <vector>

#include "spindeph/mc.hpp"

namespace spindeph::svg {

// Minimal diagnostic SVG rendering: axes, ticks, bars, points with error
// bars and an optional fitted line. Not intended for publication figures.

void write_histogram_svg(const std::string& path, const mc::Histogram& hist,
                         const std::string& title, const std::string& xlabel);

void write_xy_svg(const std::string& path, const std::vector<double>& x,
                  const std::vector<double>& y, const std::vector<double>& yerr,
                  const std::vector<double>& fit_x,
                  const std::vector<double>& fit_y, const std::string& title,
                  const std::string& xlabel, const std::string& ylabel);

}  // namespace spindeph::svg
