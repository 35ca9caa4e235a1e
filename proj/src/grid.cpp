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

#include "orlicz/grid.hpp"

#include <cmath>
#include <string>

#include "orlicz/errors.hpp"

namespace orlicz {

void CheckGrid(const GridSpec& grid) {
  if (!(grid.t_min > 0.0 && grid.t_min < 1.0)) {
    throw PreconditionError("invalid-grid",
                            "t_min must lie in (0, 1), got " + std::to_string(grid.t_min));
  }
  if (grid.t_min < 1e-300) {
    throw PreconditionError("invalid-grid", "t_min below 1e-300");
  }
  if (grid.points_per_decade < 1 || grid.points_per_decade > 4096) {
    throw PreconditionError("invalid-grid", "points_per_decade must lie in [1, 4096]");
  }
  if (grid.tail_doublings < 0 || grid.tail_doublings > 40) {
    throw PreconditionError("invalid-grid", "tail_doublings must lie in [0, 40]");
  }
}

long double LogStep(const GridSpec& grid) {
  return std::log(10.0L) / grid.points_per_decade;
}

int StepsBelow(const GridSpec& grid, long double log_top) {
  const long double span = log_top - std::log(static_cast<long double>(grid.t_min));
  if (span <= 0) return 0;
  // A hair of slack so t_min itself is kept when it lands on the grid.
  return static_cast<int>(std::floor(span / LogStep(grid) + 1e-9L));
}

std::vector<long double> LogGrid(const GridSpec& grid, long double log_top) {
  const long double h = LogStep(grid);
  const int n = StepsBelow(grid, log_top);
  std::vector<long double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = log_top - i * h;
  return out;
}

std::vector<long double> TailProbes(const GridSpec& grid) {
  std::vector<long double> out;
  const long double base = std::log(static_cast<long double>(grid.t_min));
  long double scale = 1.0L;
  for (int j = 1; j <= grid.tail_doublings; ++j) {
    scale *= 2.0L;
    out.push_back(base * scale);
  }
  return out;
}

}  // namespace orlicz
