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

#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/grid.hpp"

namespace orlicz {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

std::string Fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

[[noreturn]] void Invalid(const std::string& detail) {
  throw PreconditionError("invalid-function", detail);
}

long double SupPowerPiece(double p, double anchor, double q, long double log_t) {
  const long double lb = std::log(static_cast<long double>(anchor));
  const long double x = log_t - lb;
  if (x <= 0) return p * lb + q * x;
  // Tangent line b^p (1 + q (t/b - 1)), written so small x keeps precision.
  return p * lb + std::log1p(q * std::expm1(x));
}

void CheckParams(const FamilyParams& params, double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) Invalid("t_max must be positive and finite");
  if (const auto* pw = std::get_if<PowerParams>(&params)) {
    if (!(pw->p >= 1.0) || !std::isfinite(pw->p)) Invalid("power: p must be >= 1");
  } else if (const auto* pl = std::get_if<PowerLogParams>(&params)) {
    if (!(pl->t0 > 0.0 && pl->t0 <= 0.1)) Invalid("powerlog: t0 must lie in (0, 0.1]");
  } else if (const auto* sp = std::get_if<SupPowerParams>(&params)) {
    if (!(sp->p >= 1.0) || !std::isfinite(sp->p)) Invalid("suppower: p must be >= 1");
    if (sp->anchors.empty()) Invalid("suppower: need at least one anchor");
    if (sp->anchors.size() != sp->steep_exponents.size()) {
      Invalid("suppower: anchors and steep_exponents differ in length");
    }
    for (std::size_t k = 0; k < sp->anchors.size(); ++k) {
      const double b = sp->anchors[k];
      if (!(b > 0.0 && b <= t_max)) Invalid("suppower: anchor " + Fmt(b) + " outside (0, t_max]");
      if (k > 0 && !(b < sp->anchors[k - 1])) Invalid("suppower: anchors must strictly decrease");
      if (!(sp->steep_exponents[k] >= sp->p) || !std::isfinite(sp->steep_exponents[k])) {
        Invalid("suppower: steep exponents must be >= p");
      }
    }
  } else {
    const auto& pd = std::get<PiecewiseDerivativeParams>(params);
    if (pd.densities.size() != pd.breakpoints.size() + 1) {
      Invalid("piecewise_derivative: need breakpoints.size() + 1 densities");
    }
    for (std::size_t j = 0; j < pd.breakpoints.size(); ++j) {
      if (!(pd.breakpoints[j] > 0.0) || (j > 0 && !(pd.breakpoints[j] > pd.breakpoints[j - 1]))) {
        Invalid("piecewise_derivative: breakpoints must be positive and strictly increasing");
      }
    }
    for (double r : pd.densities) {
      if (!(r >= 0.0) || !std::isfinite(r)) Invalid("piecewise_derivative: densities must be >= 0");
    }
    // rho_0 = 0 would make M vanish near zero (degenerate).
    if (!(pd.densities[0] > 0.0)) Invalid("piecewise_derivative: first density must be > 0");
  }
}

}  // namespace

OrliczFunction::OrliczFunction(FamilyParams params, double t_max, int grid_resolution)
    : params_(std::move(params)), t_max_(t_max), grid_resolution_(grid_resolution) {
  if (const auto* pl = std::get_if<PowerLogParams>(&params_)) {
    const long double t0 = pl->t0;
    const long double l0 = std::log(t0);
    powerlog_m0_ = (t0 / l0) * (t0 / l0);
    powerlog_slope_ = 2 * t0 * (l0 - 1) / (l0 * l0 * l0);
  } else if (const auto* pd = std::get_if<PiecewiseDerivativeParams>(&params_)) {
    long double acc = 0, prev = 0;
    cumulative_.reserve(pd->breakpoints.size());
    for (std::size_t j = 0; j < pd->breakpoints.size(); ++j) {
      acc += pd->densities[j] * (pd->breakpoints[j] - prev);
      prev = pd->breakpoints[j];
      cumulative_.push_back(acc);
    }
  }
}

OrliczFunction OrliczFunction::Create(FamilyParams params, double t_max, int grid_resolution,
                                      bool validate) {
  if (grid_resolution < 1) Invalid("grid_resolution must be positive");
  CheckParams(params, t_max);
  OrliczFunction m(std::move(params), t_max, grid_resolution);
  if (const auto* sp = std::get_if<SupPowerParams>(&m.params_)) {
    for (double b : sp->anchors) {
      const long double lb = std::log(static_cast<long double>(b));
      const long double excess = m.RawLog(lb) - sp->p * lb;
      if (excess > 1e-12L) {
        Invalid("suppower: M(b) exceeds b^p at anchor " + Fmt(b) +
                " (a neighbouring piece dominates; space the anchors further apart)");
      }
    }
  }
  if (validate) {
    ValidationReport r = m.Validate();
    if (!r.passed) Invalid(r.detail);
  }
  return m;
}

OrliczFunction OrliczFunction::Power(double p, double t_max) {
  return Create(PowerParams{p}, t_max);
}

OrliczFunction OrliczFunction::PowerLog(double t0, double t_max) {
  return Create(PowerLogParams{t0}, t_max);
}

OrliczFunction OrliczFunction::SupPower(double p, std::vector<double> anchors,
                                        std::vector<double> steep_exponents, double t_max) {
  return Create(SupPowerParams{p, std::move(anchors), std::move(steep_exponents)}, t_max);
}

OrliczFunction OrliczFunction::PiecewiseDerivative(std::vector<double> breakpoints,
                                                   std::vector<double> densities,
                                                   double t_max) {
  return Create(PiecewiseDerivativeParams{std::move(breakpoints), std::move(densities)}, t_max);
}

OrliczFunction OrliczFunction::ReferenceSupPower() {
  std::vector<double> anchors, q;
  for (int j = 1; j <= 5; ++j) {
    anchors.push_back(std::pow(10.0, -j * j));
    q.push_back(8.0 * j);
  }
  return SupPower(2.0, anchors, q);
}

std::string OrliczFunction::family() const {
  switch (params_.index()) {
    case 0: return "power";
    case 1: return "powerlog";
    case 2: return "suppower";
    default: return "piecewise_derivative";
  }
}

long double OrliczFunction::RawLog(long double log_t) const {
  if (const auto* pw = std::get_if<PowerParams>(&params_)) return pw->p * log_t;
  if (const auto* pl = std::get_if<PowerLogParams>(&params_)) {
    if (log_t < std::log(static_cast<long double>(pl->t0))) {
      return 2 * (log_t - std::log(-log_t));
    }
    return std::log(powerlog_m0_ + powerlog_slope_ * (std::exp(log_t) - pl->t0));
  }
  if (const auto* sp = std::get_if<SupPowerParams>(&params_)) {
    long double best = kNegInf;
    for (std::size_t k = 0; k < sp->anchors.size(); ++k) {
      best = std::max(best, SupPowerPiece(sp->p, sp->anchors[k], sp->steep_exponents[k], log_t));
    }
    return best;
  }
  const auto& pd = std::get<PiecewiseDerivativeParams>(params_);
  if (pd.breakpoints.empty() || log_t < std::log(static_cast<long double>(pd.breakpoints[0]))) {
    return std::log(static_cast<long double>(pd.densities[0])) + log_t;
  }
  const long double t = std::exp(log_t);
  // Last breakpoint <= t.
  std::size_t j = std::upper_bound(pd.breakpoints.begin(), pd.breakpoints.end(),
                                   static_cast<double>(t)) - pd.breakpoints.begin();
  if (j == 0) j = 1;
  const long double value = cumulative_[j - 1] + pd.densities[j] * (t - pd.breakpoints[j - 1]);
  return std::log(value);
}

LogValue OrliczFunction::EvalLog(long double log_t) const {
  if (std::isnan(log_t)) throw RangeError("argument is NaN");
  if (log_t == kNegInf) return LogValue::Zero();
  const long double log_tmax = std::log(static_cast<long double>(t_max_));
  if (log_t > log_tmax + 1e-12L * std::max(1.0L, std::fabs(log_tmax))) {
    throw RangeError("argument " + Fmt(static_cast<double>(std::exp(log_t))) +
                     " exceeds t_max " + Fmt(t_max_));
  }
  return LogValue::FromLog(RawLog(log_t));
}

LogValue OrliczFunction::Eval(double t) const {
  if (!std::isfinite(t)) throw RangeError("argument is not finite");
  const double a = std::fabs(t);
  if (a > t_max_) throw RangeError("|t| = " + Fmt(a) + " exceeds t_max " + Fmt(t_max_));
  if (a == 0.0) return LogValue::Zero();
  return EvalLog(std::log(static_cast<long double>(a)));
}

ValidationReport OrliczFunction::Validate(double tol) const {
  return ValidateCurve([this](long double l) { return EvalLog(l); }, t_max_, grid_resolution_,
                       tol);
}

double Ratio(const OrliczFunction& m, double c, double t) {
  if (!(c > 1.0) || !std::isfinite(c)) throw PreconditionError("invalid-argument", "c must be > 1");
  if (!(t > 0.0)) throw PreconditionError("invalid-argument", "t must be > 0");
  if (c * t > m.t_max()) throw RangeError("c*t = " + Fmt(c * t) + " exceeds t_max");
  const long double lt = std::log(static_cast<long double>(t));
  const long double lc = std::log(static_cast<long double>(c));
  return static_cast<double>(std::exp(m.EvalLog(lt + lc).log() - m.EvalLog(lt).log()));
}

ValidationReport ValidateCurve(const std::function<LogValue(long double)>& eval_log,
                               double t_max, int points_per_decade, double tol) {
  GridSpec grid;
  grid.points_per_decade = points_per_decade;
  const std::vector<long double> logs =
      LogGrid(grid, std::log(static_cast<long double>(t_max)));
  // Ascending t from here on.
  std::vector<long double> lt(logs.rbegin(), logs.rend());
  std::vector<long double> lm(lt.size());
  ValidationReport r;
  r.points = static_cast<int>(lt.size());
  r.worst_monotone_margin = -std::numeric_limits<double>::infinity();
  r.worst_convexity_margin = -std::numeric_limits<double>::infinity();
  auto fail = [&](std::string what, std::vector<long double> ts) {
    if (!r.passed) return;
    r.passed = false;
    r.detail = std::move(what);
    for (long double l : ts) r.offending.push_back(static_cast<double>(std::exp(l)));
    r.detail += " at t =";
    for (double t : r.offending) r.detail += " " + Fmt(t);
  };

  for (std::size_t i = 0; i < lt.size(); ++i) {
    LogValue v = eval_log(lt[i]);
    if (v.is_zero() || !std::isfinite(static_cast<double>(v.log()))) {
      fail("M is not positive and finite", {lt[i]});
      lm[i] = kNegInf;
      continue;
    }
    lm[i] = v.log();
  }
  if (!r.passed) return r;

  for (std::size_t i = 0; i + 1 < lt.size(); ++i) {
    // M(t1) <= M(t2) for t1 < t2, relative.
    const double drop = static_cast<double>(std::expm1(lm[i] - lm[i + 1]));
    r.worst_monotone_margin = std::max(r.worst_monotone_margin, drop);
    if (drop > tol) fail("monotonicity violated", {lt[i], lt[i + 1]});

    // Midpoint: M((a+b)/2) <= (M(a)+M(b))/2.
    const long double lmid = lt[i] + std::log((1 + std::exp(lt[i + 1] - lt[i])) / 2);
    const long double mid = std::exp(eval_log(lmid).log() - lm[i + 1]);
    const long double avg = (std::exp(lm[i] - lm[i + 1]) + 1) / 2;
    const double mid_margin = static_cast<double>(mid / avg - 1);
    r.worst_convexity_margin = std::max(r.worst_convexity_margin, mid_margin);
    if (mid_margin > tol) fail("midpoint convexity violated", {lt[i], lmid, lt[i + 1]});
  }
  for (std::size_t i = 0; i + 2 < lt.size(); ++i) {
    // M(b) below the chord from (a, M(a)) to (c, M(c)); everything is
    // normalised by M(c) and c so nothing underflows.
    const long double ra = std::exp(lm[i] - lm[i + 2]);
    const long double rb = std::exp(lm[i + 1] - lm[i + 2]);
    const long double w = std::expm1(lt[i + 1] - lt[i]) / std::expm1(lt[i + 2] - lt[i]);
    const long double chord = ra + (1 - ra) * w;
    const double margin = static_cast<double>(rb / chord - 1);
    r.worst_convexity_margin = std::max(r.worst_convexity_margin, margin);
    if (margin > tol) fail("chord convexity violated", {lt[i], lt[i + 1], lt[i + 2]});
  }
  return r;
}

}  // namespace orlicz
