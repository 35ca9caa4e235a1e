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

#include "orlicz/log_value.hpp"

namespace orlicz {

void LogAccumulator::Add(LogValue term) {
  if (term.is_zero()) return;
  const long double x = term.log();
  if (empty_) {
    max_ = x;
    scaled_sum_ = 1.0L;
    empty_ = false;
  } else if (x > max_) {
    scaled_sum_ = scaled_sum_ * std::exp(max_ - x) + 1.0L;
    max_ = x;
  } else {
    scaled_sum_ += std::exp(x - max_);
  }
}

LogValue LogAccumulator::Result() const {
  if (empty_) return LogValue::Zero();
  return LogValue::FromLog(max_ + std::log(scaled_sum_));
}

LogValue LogSum(std::span<const LogValue> terms) {
  LogAccumulator acc;
  for (const LogValue& t : terms) acc.Add(t);
  return acc.Result();
}

LogValue operator+(LogValue a, LogValue b) {
  LogAccumulator acc;
  acc.Add(a);
  acc.Add(b);
  return acc.Result();
}

}  // namespace orlicz
