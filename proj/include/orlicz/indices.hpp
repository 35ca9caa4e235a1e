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

#ifndef ORLICZ_INDICES_HPP_
#define ORLICZ_INDICES_HPP_

#include <map>
#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

struct BoydOptions {
  double p_min = defaults::kBoydPMin;
  double p_max = defaults::kBoydPMax;
  double escape = defaults::kBoydEscape;
  double width = defaults::kBoydWidth;
  // A ratio that keeps climbing over the deeper half of the u-range (by more
  // than this, in log, over the quarter before it) counts as unbounded even
  // below the escape threshold.
  double growth_tol = defaults::kBoydGrowthTol;
};

struct BoydSample {
  double log10_sup;       // over the full u-range
  double log10_sup_mid;   // u in [t_min^{1/2}, t_min^{1/4}]
  double log10_sup_deep;  // u below t_min^{1/2}
  bool infinite;
};

struct BoydBracket {
  double lower = 1.0;
  double upper = 1.0;
  GridSpec grid;
  double escape = defaults::kBoydEscape;
  // Every probed p, keyed by p.
  std::map<double, BoydSample> sup_samples;
};

// Precomputed Delta(s_i) = min over v of log M(v) - log M(e^{-s_i} v), the
// only grid-dependent part of S(q) = sup M(uv) / (u^q M(v)).
class BoydScan {
 public:
  BoydScan(const OrliczFunction& m, const GridSpec& grid);
  BoydSample Sample(double q, double escape, double growth_tol) const;
  int u_steps() const { return static_cast<int>(delta_.size()) - 1; }

 private:
  long double h_;
  std::vector<long double> delta_;
};

BoydBracket EstimateAlpha(const OrliczFunction& m, const GridSpec& grid = {},
                          const BoydOptions& opts = {});

enum class Delta2Verdict { kBounded, kUnbounded };
std::string ToString(Delta2Verdict v);

struct Delta2Report {
  Delta2Verdict verdict = Delta2Verdict::kBounded;
  double sup_ratio = 0;
  double log10_sup_ratio = 0;
  double witness_t = 0;
  double c = 2;
  double escape = defaults::kDelta2Escape;
  // (t, ratio) for every scanned grid point, descending t.
  std::vector<std::pair<double, double>> table;
};

Delta2Report Delta2AtZero(const OrliczFunction& m, double c = defaults::kDelta2C,
                          const GridSpec& grid = {}, double escape = defaults::kDelta2Escape);

enum class EquivalenceVerdict { kEquivalent, kNotEquivalent };
std::string ToString(EquivalenceVerdict v);

struct EquivalenceReport {
  EquivalenceVerdict verdict = EquivalenceVerdict::kEquivalent;
  double p = 2;
  // Extremes of phi = M(t)/t^p over the grid and the tail probes. The
  // constants themselves may be outside double range, so log10 is primary.
  double log10_lower_const = 0;
  double log10_upper_const = 0;
  double lower_const = 1;
  double upper_const = 1;
  double t_min = 0;  // deepest point examined (0 if it underflows)
  double log10_t_min = 0;
  double t_max = 1;
  double spread = defaults::kEquivalenceSpread;
};

EquivalenceReport EquivalentToPower(const OrliczFunction& m, double p, const GridSpec& grid = {},
                                    double spread = defaults::kEquivalenceSpread);

}  // namespace orlicz

#endif  // ORLICZ_INDICES_HPP_
