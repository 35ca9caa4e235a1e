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

#ifndef ORLICZ_SUBSPACES_HPP_
#define ORLICZ_SUBSPACES_HPP_

#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/log_value.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/weighted_vector.hpp"

namespace orlicz {

// N(t) = sigma_M(t z). For finite z the series is a finite sum and is
// evaluated exactly (up to rounding); truncation_tol is carried for callers
// that append an analytic tail.
class DerivedOrlicz {
 public:
  DerivedOrlicz(OrliczFunction base, WeightedVector z,
                double truncation_tol = defaults::kTruncationTol);

  LogValue Eval(double t) const;
  LogValue EvalLog(long double log_t) const;
  // t_max of M divided by max|z|.
  double t_max() const { return t_max_; }
  ValidationReport Validate(double tol = defaults::kValidationTolerance) const;

  const OrliczFunction& base() const { return base_; }
  const WeightedVector& generator() const { return z_; }
  double truncation_tol() const { return truncation_tol_; }

 private:
  OrliczFunction base_;
  WeightedVector z_;
  double truncation_tol_;
  double t_max_;
};

struct IsometryReport {
  double lhs = 0;  // sigma_M(Ux), all products summed in one pass
  double rhs = 0;  // sigma_N(x), N evaluated per entry
  double log_lhs = 0, log_rhs = 0;
  double rel_discrepancy = 0;
  bool passed = true;
};

IsometryReport IsometryCheck(const OrliczFunction& m, const WeightedVector& z,
                             const WeightedVector& x, double tol = defaults::kIsometryTol);

struct WitnessPair {
  int k = 0;
  double u = 0, v = 0;
  long double log_card = 0;  // log |A_k|
  Count card;                // exact when |A_k| <= 2^53
  double log_ratio = 0;      // log of M(uv)/(u^p M(v))
};

struct WitnessData {
  double p = 3;
  int k_max = 0;
  GridSpec grid;
  double log10_ratio_sup = 0;      // grid sup of M(uv)/(u^p M(v))
  std::vector<WitnessPair> pairs;  // k = 1..k_max
  // omega[n-1] = floor(X)/X for X = 1/(4^n M(v_{2^n})); 1 with a bound when
  // only log X is known.
  std::vector<double> omega;
  std::vector<double> omega_error;  // bound on 1 - omega
  WeightedVector z;
};

// Block index n = ceil(log2 k) for k >= 2.
int BlockIndex(int k);

// Rebuilds z from the pairs (blocks start at k = 2).
WeightedVector AssembleWitnessVector(const std::vector<WitnessPair>& pairs);

WitnessData BuildWitness(const OrliczFunction& m, double p,
                         int k_max = defaults::kWitnessKMax, const GridSpec& grid = {});

// Re-checks M(v_k) < k^-3, ratio > k^3, u_k < k^{-3/(p-1)} and the omega
// bounds from the stored doubles. Throws "construction-defect" on failure.
void VerifyWitness(const OrliczFunction& m, const WitnessData& w);

struct MembershipRow {
  int i;
  double partial;  // sigma_M(i z) over stored blocks
  double tail;     // sum_{k > k_max} 1/k^2
  double total;
  bool finite;
};

std::vector<MembershipRow> WitnessMembershipCheck(const OrliczFunction& m, const WitnessData& w,
                                                  int i_max);

struct GrowthRow {
  int n;
  double t;           // n u_{2^n}
  double log10_r;     // r_n = N(t) / t^p
  double log10_bound; // 2^{n-1} / n^p
  double log10_t_cap; // n 2^{-3n/(p-1)}
};

std::vector<GrowthRow> WitnessGrowthCheck(const OrliczFunction& m, const WitnessData& w,
                                          int n_max);

}  // namespace orlicz

#endif  // ORLICZ_SUBSPACES_HPP_
