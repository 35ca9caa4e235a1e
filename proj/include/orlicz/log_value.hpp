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

#ifndef ORLICZ_LOG_VALUE_HPP_
#define ORLICZ_LOG_VALUE_HPP_

#include <cmath>
#include <limits>
#include <span>

namespace orlicz {

// A non-negative number carried as its natural logarithm. Values of M near
// zero routinely fall below the double range, so every evaluation of an
// Orlicz function returns one of these.
class LogValue {
 public:
  // Zero.
  constexpr LogValue() = default;

  static constexpr LogValue Zero() { return LogValue(); }
  static LogValue FromLog(long double log_magnitude) {
    LogValue v;
    v.log_ = log_magnitude;
    v.zero_ = false;
    return v;
  }
  // x must be >= 0.
  static LogValue FromDouble(double x) {
    return x == 0.0 ? Zero() : FromLog(std::log(static_cast<long double>(x)));
  }

  bool is_zero() const { return zero_; }
  // -inf for zero.
  long double log() const {
    return zero_ ? -std::numeric_limits<long double>::infinity() : log_;
  }
  long double log10() const { return log() / std::log(10.0L); }
  // May underflow to 0 or overflow to inf.
  double value() const { return zero_ ? 0.0 : static_cast<double>(std::exp(log_)); }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.zero_ || b.zero_) return Zero();
    return FromLog(a.log_ + b.log_);
  }
  friend LogValue operator/(LogValue a, LogValue b) {
    if (a.zero_) return Zero();
    return FromLog(a.log_ - b.log_);
  }
  friend bool operator==(const LogValue&, const LogValue&) = default;

 private:
  long double log_ = 0.0L;
  bool zero_ = true;
};

// Streaming log-sum-exp. The result is independent of the running maximum
// only up to rounding, so callers that need bit-identical results must feed
// terms in a fixed order.
class LogAccumulator {
 public:
  void Add(LogValue term);
  LogValue Result() const;

 private:
  long double max_ = 0.0L;
  long double scaled_sum_ = 0.0L;
  bool empty_ = true;
};

LogValue LogSum(std::span<const LogValue> terms);
LogValue operator+(LogValue a, LogValue b);

}  // namespace orlicz

#endif  // ORLICZ_LOG_VALUE_HPP_
