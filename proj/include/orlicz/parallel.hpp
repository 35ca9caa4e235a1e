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

#ifndef ORLICZ_PARALLEL_HPP_
#define ORLICZ_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace orlicz {

// Process-wide worker count for grid sweeps. 0 or 1 runs inline.
void SetThreads(int n);
int Threads();

// Calls body(i) for i in [0, n) using static contiguous chunks. Each index
// must write only its own output slot; reductions happen afterwards in index
// order, so results do not depend on the worker count.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace orlicz

#endif  // ORLICZ_PARALLEL_HPP_
