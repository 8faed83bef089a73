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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spindeph {

struct OracleCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass = true;
};

/// Cross-checks every identity that ties the closed forms together:
/// the thermal Laguerre sum against e^{-x nbar}, the Fock-state brute-force
/// thermal average against the closed form, the two-spin thermal correlator
/// against the coherent-state sigma^2, the sigma^2 <-> nbar round trip, the
/// spin-echo displacement continuity at zero detuning, and seeded Monte
/// Carlo averages against the analytic thermal expressions.
///
/// laguerre_fn overrides the Laguerre evaluator used inside the sum-based
/// checks (used by tests to verify the checks actually catch a broken
/// implementation); pass nullptr for the library implementation.
OracleReport run_oracle_checks(
    const std::function<double(int, double)>& laguerre_fn = nullptr,
    std::uint64_t mc_seed = 0xC0FFEEULL, long mc_samples = 1000000);

/// Formats one line per check: "PASS name  max_error=... tol=...".
std::string format_report(const OracleReport& report);

}  // namespace spindeph
