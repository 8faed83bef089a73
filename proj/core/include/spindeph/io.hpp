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

#include <json.hpp>

#include "spindeph/inference.hpp"
#include "spindeph/mc.hpp"

namespace spindeph::io {

/// Shortest round-trip decimal representation (std::to_chars); locale-free
/// and deterministic, so identical data always serializes to identical bytes.
std::string format_double(double v);

// CSV schemas (documented in the README):
//   shots:     shot_index,alpha_re,alpha_im,theta_total,p_up,n_up,photons
//   minimal:   shot_index,photons           (externally measured data)
//   histogram: bin_lo,bin_hi,count
//   sweep:     detuning_rad_s,p_up_mean,p_up_err
//   heating:   delay_s,nbar,nbar_err

void write_shots_csv(const std::string& path,
                     const std::vector<mc::ShotRecord>& shots);
/// Accepts the full shot schema or the minimal (shot_index,photons) schema.
/// Throws std::runtime_error with a line diagnostic on malformed input.
std::vector<mc::ShotRecord> read_shots_csv(const std::string& path);

void write_histogram_csv(const std::string& path, const mc::Histogram& hist);

void write_sweep_csv(const std::string& path,
                     const std::vector<infer::SweepPoint>& points);
std::vector<infer::SweepPoint> read_sweep_csv(const std::string& path);

std::vector<infer::HeatingPoint> read_heating_csv(const std::string& path);
void write_heating_csv(const std::string& path,
                       const std::vector<infer::HeatingPoint>& points);

nlohmann::json estimate_to_json(const infer::Estimate& estimate);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

}  // namespace spindeph::io
