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

#ifndef ORLICZ_SMOOTHNESS_HPP_
#define ORLICZ_SMOOTHNESS_HPP_

#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/indices.hpp"
#include "orlicz/log_value.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/weighted_vector.hpp"

namespace orlicz {

// P(x) = sum of coefficient * x(g)^degree over coordinates.
class DiagonalForm {
 public:
  explicit DiagonalForm(int degree, double coefficient = 1.0);
  LogValue Evaluate(const WeightedVector& x) const;
  int degree() const { return degree_; }
  double coefficient() const { return coefficient_; }

 private:
  int degree_;
  double coefficient_;
};

struct ClassifyOptions {
  double limit_threshold = defaults::kLimitThreshold;
  BoydOptions boyd;
  double spread = defaults::kEquivalenceSpread;
};

struct SmoothnessClassification {
  std::string verdict;  // "a", "b", "c" or "none"
  int p = 2;
  BoydBracket alpha_bracket;
  EquivalenceReport equivalence;
  // phi = M(t)/t^p at the deepest point examined.
  double limit_evidence = 0;
  double log10_limit_evidence = 0;
  double log10_limit_t = 0;
};

// Throws "indeterminate" when p sits inside the Boyd bracket, M is not
// equivalent to t^p, and phi does not fall below the threshold.
SmoothnessClassification Classify(const OrliczFunction& m, int p, const GridSpec& grid = {},
                                  const ClassifyOptions& opts = {});

struct BfDemo {
  int n = 3;
  int degree = 2;
  double eps = 0.1;
  double t = 0;
  std::string m;        // decimal, exact
  Count m_count;
  double modular = 0;   // sigma_M(x_m) = m M(t)
  double form_value = 0;
  double certified_lower_bound = 0;  // 1/eps - eps^k
};

// Picks the first t = eps/2^j (j >= 1, t >= t_min) with M(t) < eps t^{n-1},
// sets m = floor(1/(eps t^k)) in exact arithmetic and returns x_m = (t, m).
BfDemo DiagonalFormBlowUp(const OrliczFunction& m, int n, const DiagonalForm& form, double eps,
                         const GridSpec& grid = {});

}  // namespace orlicz

#endif  // ORLICZ_SMOOTHNESS_HPP_
