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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spindeph::infer {

/// Thrown on non-convergence or degenerate (non-identifiable) fits.
/// Carries the last iterate for diagnostics.
class fit_error : public std::runtime_error {
 public:
  fit_error(const std::string& what, std::vector<double> last)
      : std::runtime_error(what), last_params(std::move(last)) {}
  std::vector<double> last_params;
};

/// Computes the weighted residual vector r(p) for parameter vector p.
using ResidualFn =
    std::function<void(const std::vector<double>&, std::vector<double>&)>;

struct CurveFitOptions {
  int max_iterations = 200;
  /// Converged when the largest relative parameter step falls below this.
  double relative_step_tol = 1e-8;
  /// Optional elementwise lower bounds (empty = unbounded).
  std::vector<double> lower_bounds;
};

struct CurveFitResult {
  std::vector<double> params;
  std::vector<double> std_errors;              ///< sqrt(diag((J^T J)^-1))
  std::vector<std::vector<double>> covariance;  ///< (J^T J)^-1
  double chi2 = 0.0;
  int iterations = 0;
};

/// Levenberg-Marquardt minimization of |r(p)|^2 with forward finite-difference
/// Jacobians. Throws fit_error on singular normal equations (degenerate data)
/// or when max_iterations is exceeded.
CurveFitResult fit_curve(const ResidualFn& residuals,
                         std::vector<double> initial,
                         const CurveFitOptions& options = {});

struct LinearFitResult {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_err = 0.0;
  double slope_err = 0.0;
  double chi2 = 0.0;
};

/// Weighted straight-line fit y = a + b x by the closed-form normal
/// equations. Weights are 1/sigma^2; parameter errors come from the inverse
/// normal matrix without chi^2 rescaling (the convention when per-point
/// errors are supplied). Throws std::invalid_argument if fewer than two
/// distinct x values are present.
LinearFitResult weighted_linear_fit(const std::vector<double>& x,
                                    const std::vector<double>& y,
                                    const std::vector<double>& weights);

}  // namespace spindeph::infer
