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

#include "orlicz/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

void CheckDeepGrid(const GridSpec& grid) {
  CheckGrid(grid);
  if (grid.t_min < 1e-30) {
    throw PreconditionError("invalid-grid", "Boyd and Delta2 scans need t_min >= 1e-30");
  }
}

}  // namespace

BoydScan::BoydScan(const OrliczFunction& m, const GridSpec& grid) : h_(LogStep(grid)) {
  CheckDeepGrid(grid);
  const int nu = StepsBelow(grid, 0.0L);
  const long double vtop = std::log(static_cast<long double>(std::min(m.t_max(), 1.0)));
  const int nv = StepsBelow(grid, vtop);

  // lm[k] = log M(v_top * e^{-k h}); products u_i v_j land on index i + j.
  std::vector<long double> lm(nu + nv + 1);
  ParallelFor(lm.size(), [&](std::size_t k) { lm[k] = m.EvalLog(vtop - k * h_).log(); });

  const std::vector<long double> probes = TailProbes(grid);
  std::vector<std::vector<long double>> probe_lm(probes.size());
  ParallelFor(probes.size(), [&](std::size_t r) {
    probe_lm[r].resize(nu + 1);
    for (int i = 0; i <= nu; ++i) probe_lm[r][i] = m.EvalLog(probes[r] - i * h_).log();
  });

  delta_.assign(nu + 1, 0.0L);
  ParallelFor(delta_.size(), [&](std::size_t i) {
    long double best = std::numeric_limits<long double>::infinity();
    for (int j = 0; j <= nv; ++j) best = std::min(best, lm[j] - lm[i + j]);
    for (const auto& row : probe_lm) best = std::min(best, row[0] - row[i]);
    delta_[i] = best;
  });
}

BoydSample BoydScan::Sample(double q, double escape, double growth_tol) const {
  const std::size_t n = delta_.size() - 1;
  constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
  long double full = kNegInf, mid = kNegInf, deep = kNegInf;
  for (std::size_t i = 0; i <= n; ++i) {
    const long double v = q * (i * h_) - delta_[i];
    full = std::max(full, v);
    if (4 * i >= n && 2 * i <= n) mid = std::max(mid, v);
    if (2 * i > n) deep = std::max(deep, v);
  }
  BoydSample s;
  s.log10_sup = static_cast<double>(full / kLn10);
  s.log10_sup_mid = static_cast<double>(mid / kLn10);
  s.log10_sup_deep = static_cast<double>(deep / kLn10);
  // A bump near u = 1 can hide slow growth from the global max (PowerLog
  // has ratio ~3.7 at u = 0.1 but only ~u^{-0.01} growth far out), so the
  // deep half is compared with the quarter before it.
  const bool growing = deep > 0 && deep - mid > growth_tol;
  s.infinite = full > std::log(static_cast<long double>(escape)) || growing;
  return s;
}

BoydBracket EstimateAlpha(const OrliczFunction& m, const GridSpec& grid, const BoydOptions& opts) {
  if (!(opts.p_min >= 1.0 && opts.p_max <= 64.0 && opts.p_min < opts.p_max)) {
    throw PreconditionError("invalid-argument", "p range must satisfy 1 <= p_min < p_max <= 64");
  }
  if (!(opts.width > 0.0)) throw PreconditionError("invalid-argument", "width must be positive");
  const BoydScan scan(m, grid);
  BoydBracket b;
  b.grid = grid;
  b.escape = opts.escape;
  auto sample = [&](double q) {
    BoydSample s = scan.Sample(q, opts.escape, opts.growth_tol);
    b.sup_samples[q] = s;
    return s;
  };
  const BoydSample at_min = sample(opts.p_min);
  const BoydSample at_max = sample(opts.p_max);
  if (at_min.infinite || !at_max.infinite) {
    std::ostringstream os;
    os << "no bracket inside [" << opts.p_min << ", " << opts.p_max
       << "]: log10 sup at p_min = " << at_min.log10_sup
       << ", log10 sup at p_max = " << at_max.log10_sup;
    throw PreconditionError("range-exhausted", os.str());
  }
  double lo = opts.p_min, hi = opts.p_max;
  while (hi - lo > opts.width) {
    const double mid = 0.5 * (lo + hi);
    (sample(mid).infinite ? hi : lo) = mid;
  }
  b.lower = lo;
  b.upper = hi;
  return b;
}

std::string ToString(Delta2Verdict v) {
  return v == Delta2Verdict::kBounded ? "bounded_evidence" : "unbounded_evidence";
}

Delta2Report Delta2AtZero(const OrliczFunction& m, double c, const GridSpec& grid, double escape) {
  if (!(c > 1.0) || !std::isfinite(c)) throw PreconditionError("invalid-argument", "c must be > 1");
  CheckDeepGrid(grid);
  const long double ltop = std::log(static_cast<long double>(m.t_max()));
  const long double lc = std::log(static_cast<long double>(c));
  std::vector<long double> pts;
  for (long double l : LogGrid(grid, ltop)) {
    if (l + lc <= ltop) pts.push_back(l);
  }
  if (pts.empty()) throw PreconditionError("invalid-argument", "no grid point with c*t <= t_max");
  std::vector<long double> lr(pts.size());
  ParallelFor(pts.size(), [&](std::size_t i) {
    lr[i] = m.EvalLog(pts[i] + lc).log() - m.EvalLog(pts[i]).log();
  });
  Delta2Report r;
  r.c = c;
  r.escape = escape;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (lr[i] >= lr[arg]) arg = i;  // ties: smallest t
    r.table.emplace_back(static_cast<double>(std::exp(pts[i])),
                         static_cast<double>(std::exp(lr[i])));
  }
  r.log10_sup_ratio = static_cast<double>(lr[arg] / kLn10);
  r.sup_ratio = static_cast<double>(std::exp(lr[arg]));
  r.witness_t = static_cast<double>(std::exp(pts[arg]));
  r.verdict = lr[arg] > std::log(static_cast<long double>(escape)) ? Delta2Verdict::kUnbounded
                                                                   : Delta2Verdict::kBounded;
  return r;
}

std::string ToString(EquivalenceVerdict v) {
  return v == EquivalenceVerdict::kEquivalent ? "equivalent_evidence" : "not_equivalent_evidence";
}

EquivalenceReport EquivalentToPower(const OrliczFunction& m, double p, const GridSpec& grid,
                                    double spread) {
  if (!(p >= 1.0)) throw PreconditionError("invalid-argument", "p must be >= 1");
  CheckGrid(grid);
  std::vector<long double> pts = LogGrid(grid, std::log(static_cast<long double>(m.t_max())));
  for (long double l : TailProbes(grid)) pts.push_back(l);
  std::vector<long double> lphi(pts.size());
  ParallelFor(pts.size(), [&](std::size_t i) { lphi[i] = m.EvalLog(pts[i]).log() - p * pts[i]; });
  const auto [mn, mx] = std::minmax_element(lphi.begin(), lphi.end());
  EquivalenceReport r;
  r.p = p;
  r.spread = spread;
  r.log10_lower_const = static_cast<double>(*mn / kLn10);
  r.log10_upper_const = static_cast<double>(*mx / kLn10);
  r.lower_const = static_cast<double>(std::exp(*mn));
  r.upper_const = static_cast<double>(std::exp(*mx));
  const long double deepest = *std::min_element(pts.begin(), pts.end());
  r.log10_t_min = static_cast<double>(deepest / kLn10);
  r.t_min = static_cast<double>(std::exp(deepest));
  r.t_max = m.t_max();
  r.verdict = (*mx - *mn) <= std::log(static_cast<long double>(spread))
                  ? EquivalenceVerdict::kEquivalent
                  : EquivalenceVerdict::kNotEquivalent;
  return r;
}

}  // namespace orlicz
