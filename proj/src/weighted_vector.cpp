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

#include "orlicz/weighted_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "orlicz/errors.hpp"

namespace orlicz {

Count Count::Exact(std::uint64_t n) {
  if (n == 0) throw PreconditionError("invalid-vector", "multiplicity must be positive");
  if (n > kExactLimit) return FromLog(std::log(static_cast<long double>(n)), 0.0);
  Count c;
  c.exact_ = true;
  c.value_ = n;
  c.log_ = std::log(static_cast<long double>(n));
  return c;
}

Count Count::FromLog(long double log_count, double rel_error) {
  if (!(log_count >= 0) || !std::isfinite(static_cast<double>(log_count))) {
    throw PreconditionError("invalid-vector", "log multiplicity must be finite and >= 0");
  }
  // Small enough to hold exactly: round to the nearest integer.
  if (log_count < std::log(static_cast<long double>(kExactLimit))) {
    const long double n = std::round(std::exp(log_count));
    if (rel_error == 0.0 && std::fabs(std::exp(log_count) - n) < 1e-6L) {
      return Exact(static_cast<std::uint64_t>(std::max(1.0L, n)));
    }
  }
  Count c;
  c.exact_ = false;
  c.value_ = 0;
  c.log_ = log_count;
  c.rel_error_ = rel_error;
  return c;
}

long double Count::log() const { return log_; }

Count operator+(const Count& a, const Count& b) {
  if (a.exact_ && b.exact_ && a.value_ + b.value_ <= Count::kExactLimit) {
    return Count::Exact(a.value_ + b.value_);
  }
  const long double hi = std::max(a.log_, b.log_), lo = std::min(a.log_, b.log_);
  Count c;
  c.exact_ = false;
  c.value_ = 0;
  c.log_ = hi + std::log1p(std::exp(lo - hi));
  c.rel_error_ = std::max(a.rel_error_, b.rel_error_);
  return c;
}

WeightedVector::WeightedVector(std::vector<Entry> entries) {
  // Merge by absolute value, largest first.
  std::map<double, Count, std::greater<double>> merged;
  for (const Entry& e : entries) {
    if (!std::isfinite(e.value)) throw PreconditionError("invalid-vector", "non-finite value");
    const double v = std::fabs(e.value);
    if (v == 0.0) continue;
    auto it = merged.find(v);
    if (it == merged.end()) {
      merged.emplace(v, e.count);
    } else {
      it->second = it->second + e.count;
    }
  }
  entries_.reserve(merged.size());
  for (const auto& [v, c] : merged) entries_.push_back({v, c});
}

WeightedVector WeightedVector::FromPairs(
    const std::vector<std::pair<double, std::uint64_t>>& pairs) {
  std::vector<Entry> e;
  for (const auto& [v, m] : pairs) e.push_back({v, Count::Exact(m)});
  return WeightedVector(std::move(e));
}

WeightedVector Scale(const WeightedVector& x, double c) {
  if (c == 0.0) return WeightedVector();
  std::vector<Entry> e = x.entries();
  for (Entry& en : e) en.value *= c;
  return WeightedVector(std::move(e));
}

LogValue ScaledModular(const OrliczFunction& m, const WeightedVector& x,
                       long double log_lambda) {
  LogAccumulator acc;
  for (const Entry& e : x.entries()) {
    const LogValue me = m.EvalLog(std::log(static_cast<long double>(e.value)) - log_lambda);
    acc.Add(LogValue::FromLog(e.count.log()) * me);
  }
  return acc.Result();
}

LogValue Modular(const OrliczFunction& m, const WeightedVector& x) {
  if (x.max_abs() > m.t_max()) throw RangeError("vector value exceeds t_max");
  return ScaledModular(m, x, 0.0L);
}

double LuxembourgNorm(const OrliczFunction& m, const WeightedVector& x, double rel_tol) {
  if (x.is_zero()) return 0.0;
  if (!(rel_tol > 0.0)) throw PreconditionError("invalid-argument", "rel_tol must be positive");
  // Smallest admissible lambda keeps every argument inside [0, t_max].
  long double lo = std::log(static_cast<long double>(x.max_abs())) -
                   std::log(static_cast<long double>(m.t_max()));
  auto f = [&](long double log_lambda) { return ScaledModular(m, x, log_lambda).log(); };
  const long double at_lo = f(lo);
  if (at_lo <= 0) {
    // sigma = 1 exactly at the edge is fine (e.g. a single coordinate with
    // M(t_max) = 1); anything smaller needs M past t_max.
    if (at_lo >= -2.0L * rel_tol) return static_cast<double>(std::exp(lo));
    throw RangeError("norm lies below max|x|/t_max; M(t_max) too small for this vector");
  }
  const long double step = std::log1p(static_cast<long double>(rel_tol));
  int iters = 0;
  long double hi = lo + std::log(2.0L);
  while (f(hi) > 0) {
    lo = hi;
    hi += std::log(2.0L) * (1 << std::min(iters, 6));
    if (++iters > defaults::kNormMaxBisections) {
      throw InternalError("norm-divergence", "could not bracket the norm");
    }
  }
  while (hi - lo > step) {
    const long double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
    if (++iters > defaults::kNormMaxBisections) {
      throw InternalError("norm-divergence", "bisection did not converge in 200 steps");
    }
  }
  return static_cast<double>(std::exp((lo + hi) / 2));
}

void WriteVectorCsv(std::ostream& os, const OrliczFunction& m, const WeightedVector& x) {
  os << "value,multiplicity,M_value,contribution\n";
  char buf[256];
  for (const Entry& e : x.entries()) {
    const LogValue me = m.Eval(e.value);
    const LogValue contrib = LogValue::FromLog(e.count.log()) * me;
    if (e.count.exact()) {
      std::snprintf(buf, sizeof buf, "%.17g,%llu,%.17Lg,%.17Lg\n", e.value,
                    static_cast<unsigned long long>(e.count.value()), std::exp(me.log()),
                    std::exp(contrib.log()));
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,%.17Lg,%.17Lg,%.17Lg\n", e.value,
                    std::exp(e.count.log()), std::exp(me.log()), std::exp(contrib.log()));
    }
    os << buf;
  }
}

}  // namespace orlicz
