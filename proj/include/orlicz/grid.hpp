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

#ifndef ORLICZ_GRID_HPP_
#define ORLICZ_GRID_HPP_

#include <vector>

#include "orlicz/config.hpp"

namespace orlicz {

struct GridSpec {
  double t_min = defaults::kGridTMin;
  int points_per_decade = defaults::kPointsPerDecade;
  // Number of asymptotic probes below t_min (see TailProbes).
  int tail_doublings = defaults::kTailDoublings;
};

// Throws a precondition error for t_min outside (0, 1) or non-positive
// density.
void CheckGrid(const GridSpec& grid);

// Natural-log step between consecutive grid points.
long double LogStep(const GridSpec& grid);

// Number of steps needed to go from `top` down to t_min (inclusive of the
// last point that is still >= t_min up to rounding).
int StepsBelow(const GridSpec& grid, long double log_top);

// log t_i = log_top - i * h, i = 0..StepsBelow. Points are anchored at the
// top so doubling points_per_decade yields a superset of the old points.
std::vector<long double> LogGrid(const GridSpec& grid, long double log_top);

// log t = 2^j * log(t_min), j = 1..tail_doublings. These sit far below the
// regular grid and only feed asymptotic diagnostics; nothing is validated
// there.
std::vector<long double> TailProbes(const GridSpec& grid);

}  // namespace orlicz

#endif  // ORLICZ_GRID_HPP_
