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

#ifndef ORLICZ_DELTA2_SEQUENCES_HPP_
#define ORLICZ_DELTA2_SEQUENCES_HPP_

#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/weighted_vector.hpp"

namespace orlicz {

// Decreasing sequence along which M(ct) <= s c^p M(t).
struct TSequence {
  double p = 2;
  std::vector<double> k;           // window index at which t_k became the argmax
  std::vector<double> t_values;    // strictly decreasing
  std::vector<double> phi_values;  // M(t_k) / t_k^p
  double s_bound = 1;              // max over grid t in [t_k, t_max] of phi(t)/phi(t_k)
  double a_estimate = 0;           // min phi over the last half / max phi scanned
  double phi_grid_max = 0;         // max phi over the scanned range
  // Log ratio between neighbouring grid points. Off the grid phi can exceed
  // its value at the next grid point up by at most exp(p * log_grid_step)
  // (M is increasing), which is the slack certification allows on top of
  // s_bound.
  double log_grid_step = 0;
};

struct ExtractOptions {
  double positivity_threshold = defaults::kPositivityThreshold;
};

// t_k = argmax of phi over grid points in [t_max/k, t_max], k = 1..k_max,
// with ties resolved towards the smaller t. k_max is a real so windows may
// reach all the way to t_min.
TSequence ExtractT(const OrliczFunction& m, double p, double k_max = defaults::kExtractKMax,
                   const GridSpec& grid = {}, const ExtractOptions& opts = {});

// Recomputes s_bound on the grid for a sequence read back from disk.
double ComputeSBound(const OrliczFunction& m, double p, const std::vector<double>& t_values,
                     const GridSpec& grid = {});

struct CertificateRow {
  double c;
  int retained;              // k with c t_k <= t_max
  double sup_ratio;          // max over retained k of M(c t_k)/M(t_k)
  double predicted_bound;    // s_bound c^p
  double worst_slack;        // max over k of ratio / predicted_bound
  // Elements above s_bound c^p (1 + tol) but inside the off-grid slack.
  int grid_exceedances;
};

struct RelativeDelta2Certificate {
  std::vector<CertificateRow> rows;
};

// Checks every retained element, not just the sup. Throws
// "certificate-violation" (internal) on the first element above
// s_bound c^p exp(p log_grid_step) (1 + tol), the bound that still holds
// between grid points.
RelativeDelta2Certificate CertifyRelativeDelta2(const OrliczFunction& m, const TSequence& t,
                                                const std::vector<double>& c_values,
                                                double tol = defaults::kCertificateTol);

struct BoundedCompleteRow {
  int i;
  double modular_ix;  // sigma_M(i x)
  double s_i;         // sup over retained k of M(i t_k)/M(t_k)
  double bound;       // s_i sigma_M(x)
};

struct BoundedCompleteReport {
  double modular_x = 0;
  std::vector<BoundedCompleteRow> rows;
};

// Preconditions: every |value| of x within 1e-12 of some t_k, sigma_M(x) <= 1
// and i_max max|x| <= t_max.
BoundedCompleteReport BoundedCompleteCheck(const OrliczFunction& m, const TSequence& t,
                                           const WeightedVector& x, int i_max,
                                           double membership_tol = defaults::kTMembershipTol);

}  // namespace orlicz

#endif  // ORLICZ_DELTA2_SEQUENCES_HPP_
