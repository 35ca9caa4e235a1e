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

#ifndef ORLICZ_TESTS_ORACLE_HPP_
#define ORLICZ_TESTS_ORACLE_HPP_

// Reference implementations in 50-digit decimal arithmetic. They work on
// t directly (no log domain) and share no code with the library.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "orlicz/orlicz_function.hpp"
#include "orlicz/weighted_vector.hpp"

namespace oracle {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>,
                                         boost::multiprecision::et_off>;

// The binary value held by a double, exactly.
inline Dec Exact(double x) { return Dec(x); }

inline Dec PowerM(double p, const Dec& t) { return pow(t, Dec(p)); }

inline Dec PowerLogM(double t0, const Dec& t) {
  const Dec T0 = Exact(t0);
  if (t < T0) {
    const Dec r = t / log(t);
    return r * r;
  }
  const Dec l0 = log(T0);
  const Dec m0 = (T0 / l0) * (T0 / l0);
  const Dec slope = 2 * T0 * (l0 - 1) / (l0 * l0 * l0);
  return m0 + slope * (t - T0);
}

// Direct max over every piece: steep power below the anchor, tangent line
// above it.
inline Dec SupPowerM(const orlicz::SupPowerParams& sp, const Dec& t) {
  Dec best = 0;
  for (std::size_t k = 0; k < sp.anchors.size(); ++k) {
    const Dec b = Exact(sp.anchors[k]);
    const Dec q = Exact(sp.steep_exponents[k]);
    const Dec bp = pow(b, Dec(sp.p));
    const Dec piece = t <= b ? bp * pow(t / b, q) : bp * (1 + q * (t / b - 1));
    if (piece > best) best = piece;
  }
  return best;
}

inline Dec PiecewiseM(const orlicz::PiecewiseDerivativeParams& pd, const Dec& t) {
  Dec acc = 0, prev = 0;
  for (std::size_t j = 0; j <= pd.breakpoints.size(); ++j) {
    const Dec hi = j < pd.breakpoints.size() ? Exact(pd.breakpoints[j]) : t;
    const Dec top = hi < t ? hi : t;
    if (top > prev) acc += Exact(pd.densities[j]) * (top - prev);
    if (hi >= t) break;
    prev = hi;
  }
  return acc;
}

inline Dec M(const orlicz::OrliczFunction& m, const Dec& t_in) {
  const Dec t = abs(t_in);
  if (t == 0) return 0;
  const auto& fp = m.params();
  if (const auto* pw = std::get_if<orlicz::PowerParams>(&fp)) return PowerM(pw->p, t);
  if (const auto* pl = std::get_if<orlicz::PowerLogParams>(&fp)) return PowerLogM(pl->t0, t);
  if (const auto* sp = std::get_if<orlicz::SupPowerParams>(&fp)) return SupPowerM(*sp, t);
  return PiecewiseM(std::get<orlicz::PiecewiseDerivativeParams>(fp), t);
}

inline Dec M(const orlicz::OrliczFunction& m, double t) { return M(m, Exact(t)); }

inline Dec Modular(const orlicz::OrliczFunction& m, const orlicz::WeightedVector& x,
                   const Dec& scale = 1) {
  Dec s = 0;
  for (const auto& e : x.entries()) {
    s += exp(Dec(static_cast<double>(e.count.log()))) * M(m, Exact(e.value) * scale);
  }
  return s;
}

inline double RelErr(double got, const Dec& want) {
  if (want == 0) return got == 0 ? 0 : 1;
  return std::fabs(static_cast<double>((Dec(got) - want) / want));
}

// long double to Dec without going through a single double.
inline Dec FromLong(long double x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - hi);
  return Dec(hi) + Dec(lo);
}

// Relative error of a library log value against an oracle value.
inline double LogRelErr(long double got_log, const Dec& want) {
  return std::fabs(std::expm1(static_cast<double>(FromLong(got_log) - log(want))));
}

}  // namespace oracle

namespace testutil {

// Families used by the randomized property tests.
inline std::vector<orlicz::OrliczFunction> FamilyZoo() {
  using orlicz::OrliczFunction;
  return {OrliczFunction::Power(1.0),
          OrliczFunction::Power(2.5),
          OrliczFunction::PowerLog(),
          OrliczFunction::ReferenceSupPower(),
          OrliczFunction::PiecewiseDerivative({0.01, 0.1, 0.5}, {0.5, 1.0, 3.0, 10.0})};
}

// Random vector whose norm is computable (sigma at the range edge above 1).
inline orlicz::WeightedVector RandomVector(const orlicz::OrliczFunction& m, std::mt19937_64& rng,
                                           int max_entries = 8, double lo_exp = -8) {
  std::uniform_int_distribution<int> nent(1, max_entries), mult(1, 5);
  std::uniform_real_distribution<double> ex(lo_exp, 0.0);
  std::vector<std::pair<double, std::uint64_t>> pairs;
  const int n = nent(rng);
  for (int i = 0; i < n; ++i) pairs.push_back({std::pow(10.0, ex(rng)), mult(rng)});
  orlicz::WeightedVector x = orlicz::WeightedVector::FromPairs(pairs);
  // Families with M(t_max) < 1 need enough mass at the top.
  for (int tries = 0; tries < 64; ++tries) {
    const long double edge = orlicz::ScaledModular(
        m, x, std::log(static_cast<long double>(x.max_abs() / m.t_max()))).log();
    if (edge > 0) break;
    for (auto& p : pairs) p.second *= 2;
    x = orlicz::WeightedVector::FromPairs(pairs);
  }
  return x;
}

}  // namespace testutil

#endif  // ORLICZ_TESTS_ORACLE_HPP_
