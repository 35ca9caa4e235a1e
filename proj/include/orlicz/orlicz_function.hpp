// Copyright 2026 The Orlicz Toolkit Authors
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

#ifndef ORLICZ_ORLICZ_FUNCTION_HPP_
#define ORLICZ_ORLICZ_FUNCTION_HPP_

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/log_value.hpp"

namespace orlicz {

// M(t) = t^p, p >= 1.
struct PowerParams {
  double p = 2.0;
};

// M(t) = (t / log t)^2 below t0, continued by its tangent line at t0.
// The formula has M'' = 2 L^-4 (L^2 - 3L + 3) > 0 on (0, 1), so any
// t0 in (0, 0.1] gives a convex function.
struct PowerLogParams {
  double t0 = 0.1;
};

// Non-Delta2 stand-in. Anchor b_k owns the piece b_k^p (t/b_k)^{q_k} for
// t <= b_k, continued by its tangent line for t > b_k; M is the max of these
// convex pieces. Each anchor therefore satisfies M(b_k) = b_k^p (checked at
// construction) while M(2t)/M(t) reaches 2^{q_k} just below b_k.
struct SupPowerParams {
  double p = 2.0;
  std::vector<double> anchors;          // strictly decreasing, in (0, t_max]
  std::vector<double> steep_exponents;  // q_k >= p, one per anchor
};

// M(t) = integral_0^t rho, rho a step function: rho = densities[j] on
// [breakpoints[j-1], breakpoints[j]) with breakpoints[-1] = 0.
struct PiecewiseDerivativeParams {
  std::vector<double> breakpoints;  // strictly increasing, positive
  std::vector<double> densities;    // breakpoints.size() + 1 entries
};

using FamilyParams = std::variant<PowerParams, PowerLogParams, SupPowerParams,
                                  PiecewiseDerivativeParams>;

struct ValidationReport {
  bool passed = true;
  int points = 0;
  // Largest relative violations seen (<= 0 means none).
  double worst_monotone_margin = 0.0;
  double worst_convexity_margin = 0.0;
  // Offending triple (pair for monotonicity, midpoint included) if failed.
  std::vector<double> offending;
  std::string detail;
};

// Runs the monotonicity, positivity and convexity checks on a log grid from
// 1e-30 to t_max. Works for anything evaluable on log t, so derived
// functions reuse it.
ValidationReport ValidateCurve(const std::function<LogValue(long double)>& eval_log,
                               double t_max, int points_per_decade,
                               double tol = defaults::kValidationTolerance);

class OrliczFunction {
 public:
  // Factories check parameters, then validate on the grid and throw
  // "invalid-function" on any failure.
  static OrliczFunction Power(double p, double t_max = defaults::kTMax);
  static OrliczFunction PowerLog(double t0 = 0.1, double t_max = defaults::kTMax);
  static OrliczFunction SupPower(double p, std::vector<double> anchors,
                                 std::vector<double> steep_exponents,
                                 double t_max = defaults::kTMax);
  static OrliczFunction PiecewiseDerivative(std::vector<double> breakpoints,
                                            std::vector<double> densities,
                                            double t_max = defaults::kTMax);
  static OrliczFunction Create(FamilyParams params, double t_max = defaults::kTMax,
                               int grid_resolution = defaults::kPointsPerDecade,
                               bool validate = true);

  // p = 2, anchors 10^{-j^2} for j = 1..5, steep exponents 8, 16, ..., 40.
  static OrliczFunction ReferenceSupPower();

  // M(|t|). Range error when |t| > t_max or t is not finite.
  LogValue Eval(double t) const;
  // M(exp(log_t)); log_t = -inf means t = 0. Accepts up to a few ulps above
  // log t_max to absorb rounding of scaled arguments.
  LogValue EvalLog(long double log_t) const;

  ValidationReport Validate(double tol = defaults::kValidationTolerance) const;

  double t_max() const { return t_max_; }
  int grid_resolution() const { return grid_resolution_; }
  const FamilyParams& params() const { return params_; }
  // "power", "powerlog", "suppower", "piecewise_derivative".
  std::string family() const;

 private:
  OrliczFunction(FamilyParams params, double t_max, int grid_resolution);
  long double RawLog(long double log_t) const;

  FamilyParams params_;
  double t_max_;
  int grid_resolution_;
  // PowerLog: M(t0) and M'(t0) for the affine continuation.
  long double powerlog_m0_ = 0, powerlog_slope_ = 0;
  // PiecewiseDerivative: M at each breakpoint.
  std::vector<long double> cumulative_;
};

// M(ct)/M(t). Requires c > 1, t > 0, ct <= t_max.
double Ratio(const OrliczFunction& m, double c, double t);

}  // namespace orlicz

#endif  // ORLICZ_ORLICZ_FUNCTION_HPP_
