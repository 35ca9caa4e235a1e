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

#include "orlicz/smoothness.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

using boost::multiprecision::cpp_int;

// x = mantissa * 2^exponent with an integer mantissa.
void Split(double x, cpp_int& mantissa, int& exponent) {
  int e = 0;
  const double f = std::frexp(x, &e);
  mantissa = static_cast<long long>(std::ldexp(f, 53));
  exponent = e - 53;
}

// floor(1 / (eps t^k)) for the binary values actually held.
cpp_int FloorInverse(double eps, double t, int k) {
  cpp_int me, mt;
  int ee, et;
  Split(eps, me, ee);
  Split(t, mt, et);
  cpp_int den = me;
  for (int i = 0; i < k; ++i) den *= mt;
  const long long shift = -static_cast<long long>(ee) - static_cast<long long>(k) * et;
  // 1/(den 2^{-shift}) = 2^shift / den.
  if (shift < 0) return cpp_int(0);
  cpp_int num = cpp_int(1) << static_cast<unsigned>(shift);
  return num / den;
}

}  // namespace

DiagonalForm::DiagonalForm(int degree, double coefficient)
    : degree_(degree), coefficient_(coefficient) {
  if (degree < 1) throw PreconditionError("invalid-argument", "degree must be >= 1");
  if (!(coefficient >= 1.0)) throw PreconditionError("invalid-argument", "coefficient must be >= 1");
}

LogValue DiagonalForm::Evaluate(const WeightedVector& x) const {
  LogAccumulator acc;
  const long double lc = std::log(static_cast<long double>(coefficient_));
  for (const Entry& e : x.entries()) {
    acc.Add(LogValue::FromLog(e.count.log() + lc +
                              degree_ * std::log(static_cast<long double>(e.value))));
  }
  return acc.Result();
}

SmoothnessClassification Classify(const OrliczFunction& m, int p, const GridSpec& grid,
                                  const ClassifyOptions& opts) {
  if (p < 1) throw PreconditionError("invalid-argument", "p must be >= 1");
  SmoothnessClassification c;
  c.p = p;
  c.alpha_bracket = EstimateAlpha(m, grid, opts.boyd);
  c.equivalence = EquivalentToPower(m, p, grid, opts.spread);

  std::vector<long double> probes = TailProbes(grid);
  const long double deepest =
      probes.empty() ? std::log(static_cast<long double>(grid.t_min)) : probes.back();
  const long double lphi = m.EvalLog(deepest).log() - p * deepest;
  c.log10_limit_t = static_cast<double>(deepest / kLn10);
  c.log10_limit_evidence = static_cast<double>(lphi / kLn10);
  c.limit_evidence = static_cast<double>(std::exp(lphi));

  const double lo = c.alpha_bracket.lower, hi = c.alpha_bracket.upper;
  if (p < lo) {
    c.verdict = "a";
  } else if (p > hi) {
    c.verdict = "none";
  } else if (c.equivalence.verdict == EquivalenceVerdict::kEquivalent) {
    // Equivalence to t^p only helps for even p.
    c.verdict = p % 2 == 0 ? "c" : "none";
  } else if (lphi < std::log(static_cast<long double>(opts.limit_threshold))) {
    c.verdict = "b";
  } else {
    std::ostringstream os;
    os << "p = " << p << " lies in the Boyd bracket [" << lo << ", " << hi
       << "], M is not equivalent to t^p and M(t)/t^p = 10^" << c.log10_limit_evidence
       << " at t = 10^" << c.log10_limit_t << "; candidates: a, none";
    throw PreconditionError("indeterminate", os.str());
  }
  return c;
}

BfDemo DiagonalFormBlowUp(const OrliczFunction& m, int n, const DiagonalForm& form, double eps,
                         const GridSpec& grid) {
  const int k = form.degree();
  if (n < 2 || k >= n) throw PreconditionError("invalid-argument", "need 1 <= degree < n");
  if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("invalid-argument", "eps must lie in (0, 1)");
  CheckGrid(grid);
  const long double leps = std::log(static_cast<long double>(eps));
  double t = 0;
  for (double cand = eps / 2; cand >= grid.t_min; cand /= 2) {
    if (cand > m.t_max()) continue;
    const long double lt = std::log(static_cast<long double>(cand));
    if (m.EvalLog(lt).log() < leps + (n - 1) * lt) {
      t = cand;
      break;
    }
  }
  if (t == 0) {
    throw PreconditionError("liminf-hypothesis",
                            "no t = eps/2^j down to t_min with M(t) < eps t^{n-1}; "
                            "liminf M(t)/t^{n-1} shows no sign of vanishing");
  }
  const cpp_int mm = FloorInverse(eps, t, k);
  if (mm < 1) throw InternalError("demo-defect", "m = 0");

  BfDemo d;
  d.n = n;
  d.degree = k;
  d.eps = eps;
  d.t = t;
  d.m = mm.str();
  d.m_count = mm <= Count::kExactLimit
                  ? Count::Exact(static_cast<std::uint64_t>(mm))
                  : Count::FromLog(std::log(static_cast<long double>(mm.convert_to<double>())));
  const WeightedVector x({{t, d.m_count}});
  const LogValue mod = Modular(m, x);
  const LogValue pv = form.Evaluate(x);
  d.modular = mod.value();
  d.form_value = pv.value();
  d.certified_lower_bound = 1.0 / eps - std::pow(eps, k);
  if (mod.log() > 0) throw InternalError("demo-defect", "sigma_M(x_m) exceeds 1");
  if (pv.log() < std::log(static_cast<long double>(d.certified_lower_bound))) {
    throw InternalError("demo-defect", "P(x_m) below 1/eps - eps^k");
  }
  return d;
}

}  // namespace orlicz
