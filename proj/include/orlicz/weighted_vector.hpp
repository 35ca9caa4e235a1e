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

#ifndef ORLICZ_WEIGHTED_VECTOR_HPP_
#define ORLICZ_WEIGHTED_VECTOR_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/log_value.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

// A positive multiplicity. Counts up to 2^53 are held exactly; larger ones
// keep only their logarithm together with a bound on the relative error
// introduced by the floor that produced them.
class Count {
 public:
  static constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;

  static Count Exact(std::uint64_t n);
  // log_count must be >= log(1). rel_error bounds |true/stored - 1|.
  static Count FromLog(long double log_count, double rel_error = 0.0);

  bool exact() const { return exact_; }
  std::uint64_t value() const { return value_; }  // meaningful only if exact()
  long double log() const;
  double rel_error() const { return rel_error_; }

  friend Count operator+(const Count& a, const Count& b);
  friend bool operator==(const Count&, const Count&) = default;

 private:
  bool exact_ = true;
  std::uint64_t value_ = 1;
  long double log_ = 0;
  double rel_error_ = 0;
};

struct Entry {
  double value;  // > 0 after canonicalisation
  Count count;
};

// Element of h_M(Gamma) up to a permutation of coordinates: a multiset of
// absolute values. Canonical form has distinct values sorted decreasingly.
class WeightedVector {
 public:
  WeightedVector() = default;
  explicit WeightedVector(std::vector<Entry> entries);
  // Convenience for exact multiplicities.
  static WeightedVector FromPairs(const std::vector<std::pair<double, std::uint64_t>>& pairs);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  double max_abs() const { return entries_.empty() ? 0.0 : entries_.front().value; }

 private:
  std::vector<Entry> entries_;
};

WeightedVector Scale(const WeightedVector& x, double c);

// sigma_M(x) = sum of count * M(value), accumulated in canonical order.
LogValue Modular(const OrliczFunction& m, const WeightedVector& x);

// sigma_M(x / lambda) for lambda = exp(log_lambda).
LogValue ScaledModular(const OrliczFunction& m, const WeightedVector& x, long double log_lambda);

// inf { lambda > 0 : sigma_M(x / lambda) <= 1 }, to relative accuracy rel_tol.
// Range error when the answer lies below max|x| / t_max, where M would be
// needed beyond its validated range.
double LuxembourgNorm(const OrliczFunction& m, const WeightedVector& x,
                      double rel_tol = defaults::kNormRelTol);

// Columns: value, multiplicity, M(value), contribution.
void WriteVectorCsv(std::ostream& os, const OrliczFunction& m, const WeightedVector& x);

}  // namespace orlicz

#endif  // ORLICZ_WEIGHTED_VECTOR_HPP_
