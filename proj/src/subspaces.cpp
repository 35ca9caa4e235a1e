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

#include "orlicz/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kLn10 = 2.302585092994045684017991454684364208L;
constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

// Selection margin so the re-check from rounded doubles cannot flip.
constexpr long double kMargin = 1e-9L;

}  // namespace

DerivedOrlicz::DerivedOrlicz(OrliczFunction base, WeightedVector z, double truncation_tol)
    : base_(std::move(base)), z_(std::move(z)), truncation_tol_(truncation_tol) {
  if (z_.is_zero()) throw PreconditionError("invalid-vector", "generator z must be non-zero");
  t_max_ = base_.t_max() / z_.max_abs();
}

LogValue DerivedOrlicz::EvalLog(long double log_t) const {
  if (log_t == kNegInf) return LogValue::Zero();
  LogAccumulator acc;
  for (const Entry& e : z_.entries()) {
    acc.Add(LogValue::FromLog(e.count.log()) *
            base_.EvalLog(log_t + std::log(static_cast<long double>(e.value))));
  }
  return acc.Result();
}

LogValue DerivedOrlicz::Eval(double t) const {
  if (!std::isfinite(t)) throw RangeError("argument is not finite");
  const double a = std::fabs(t);
  if (a > t_max_) throw RangeError("|t| exceeds t_max of the derived function");
  if (a == 0.0) return LogValue::Zero();
  return EvalLog(std::log(static_cast<long double>(a)));
}

ValidationReport DerivedOrlicz::Validate(double tol) const {
  return ValidateCurve([this](long double l) { return EvalLog(l); }, t_max_,
                       base_.grid_resolution(), tol);
}

IsometryReport IsometryCheck(const OrliczFunction& m, const WeightedVector& z,
                             const WeightedVector& x, double tol) {
  IsometryReport r;
  if (x.is_zero() || z.is_zero()) {
    r.log_lhs = r.log_rhs = -std::numeric_limits<double>::infinity();
    return r;
  }
  if (x.max_abs() * z.max_abs() > m.t_max()) {
    throw RangeError("max|x| max|z| exceeds t_max");
  }
  // Left: Ux has coordinates x(g) z(g_n), so its modular is one flat sum
  // over all products, z outermost.
  LogAccumulator left;
  for (const Entry& ze : z.entries()) {
    const long double lz = std::log(static_cast<long double>(ze.value));
    for (const Entry& xe : x.entries()) {
      const long double lx = std::log(static_cast<long double>(xe.value));
      left.Add(LogValue::FromLog(ze.count.log() + xe.count.log()) * m.EvalLog(lx + lz));
    }
  }
  // Right: sigma_N(x) through the derived function.
  const DerivedOrlicz n(m, z);
  LogAccumulator right;
  for (const Entry& xe : x.entries()) {
    right.Add(LogValue::FromLog(xe.count.log()) *
              n.EvalLog(std::log(static_cast<long double>(xe.value))));
  }
  const LogValue l = left.Result(), rv = right.Result();
  r.log_lhs = static_cast<double>(l.log());
  r.log_rhs = static_cast<double>(rv.log());
  r.lhs = l.value();
  r.rhs = rv.value();
  r.rel_discrepancy = static_cast<double>(std::fabs(std::expm1(l.log() - rv.log())));
  r.passed = r.rel_discrepancy <= tol;
  return r;
}

int BlockIndex(int k) {
  int n = 0;
  while ((1LL << n) < k) ++n;
  return n;
}

WeightedVector AssembleWitnessVector(const std::vector<WitnessPair>& pairs) {
  std::vector<Entry> e;
  for (const WitnessPair& w : pairs) {
    if (w.k < 2) continue;  // k = 1 is unused
    e.push_back({w.v / BlockIndex(w.k), w.card});
  }
  return WeightedVector(std::move(e));
}

WitnessData BuildWitness(const OrliczFunction& m, double p, int k_max, const GridSpec& grid) {
  if (!(p > 1.0)) {
    throw PreconditionError(
        "p-le-one",
        "p must exceed 1: convexity with M(0) = 0 gives M(uv) <= u M(v), so "
        "M(uv)/(u^p M(v)) <= u^{1-p} and k^3 < u_k^{1-p} cannot hold for p <= 1");
  }
  if (k_max < 0) throw PreconditionError("invalid-argument", "k_max must be >= 0");
  CheckGrid(grid);
  WitnessData w;
  w.p = p;
  w.k_max = k_max;
  w.grid = grid;
  if (k_max == 0) return w;

  const long double h = LogStep(grid);
  const int nu = StepsBelow(grid, 0.0L);
  const long double vtop = std::log(static_cast<long double>(std::min(m.t_max(), 1.0)));
  const int nv = StepsBelow(grid, vtop);
  std::vector<long double> lm(nu + nv + 1);
  ParallelFor(lm.size(), [&](std::size_t k) { lm[k] = m.EvalLog(vtop - k * h).log(); });

  // Best u for each v: r[j] = max_i log M(u_i v_j) - log M(v_j) + p s_i.
  std::vector<long double> r(nv + 1);
  std::vector<int> arg(nv + 1);
  ParallelFor(r.size(), [&](std::size_t j) {
    long double best = kNegInf;
    int bi = 0;
    for (int i = 0; i <= nu; ++i) {
      const long double val = lm[i + j] - lm[j] + p * (i * h);
      if (val > best) {
        best = val;
        bi = i;
      }
    }
    r[j] = best;
    arg[j] = bi;
  });
  const long double sup = *std::max_element(r.begin(), r.end());
  w.log10_ratio_sup = static_cast<double>(sup / kLn10);
  if (sup <= 3 * std::log(static_cast<long double>(k_max)) + kMargin) {
    std::ostringstream os;
    os << "grid sup of M(uv)/(u^p M(v)) is 10^" << w.log10_ratio_sup
       << ", not above k_max^3 = " << std::pow(static_cast<double>(k_max), 3);
    throw PreconditionError("eq11-sup-finite", os.str());
  }

  const long double log_exact = std::log(static_cast<long double>(Count::kExactLimit));
  for (int k = 1; k <= k_max; ++k) {
    const long double l3k = 3 * std::log(static_cast<long double>(k));
    // Smallest v first, then the largest ratio for that v.
    int pick = -1;
    long double best_ratio = kNegInf;
    for (int j = nv; j >= 0; --j) {
      if (!(lm[j] < -l3k - kMargin)) continue;
      best_ratio = std::max(best_ratio, r[j]);
      if (r[j] > l3k + kMargin) {
        pick = j;
        break;
      }
    }
    if (pick < 0) {
      std::ostringstream os;
      os << "no admissible (u, v) for k = " << k << "; best ratio with M(v) < k^-3 is 10^"
         << static_cast<double>(best_ratio / kLn10) << " vs k^3 = " << std::pow(k, 3.0);
      throw PreconditionError("grid-exhausted", os.str());
    }
    WitnessPair wp;
    wp.k = k;
    wp.v = static_cast<double>(std::exp(vtop - pick * h));
    wp.u = static_cast<double>(std::exp(-(arg[pick] * h)));
    wp.log_ratio = static_cast<double>(r[pick]);
    const long double log_x = -2 * std::log(static_cast<long double>(k)) - lm[pick];
    if (log_x < log_exact) {
      const long double x = std::exp(log_x);
      const auto card = static_cast<std::uint64_t>(std::floor(x));
      wp.card = Count::Exact(card);
      wp.log_card = std::log(static_cast<long double>(card));
    } else {
      // Only log X is representable; the floor moves it by less than 1/X.
      wp.card = Count::FromLog(log_x, static_cast<double>(std::exp(-log_x)));
      wp.log_card = log_x;
    }
    w.pairs.push_back(wp);
  }

  for (int n = 1; (1 << n) <= k_max; ++n) {
    const WitnessPair& wp = w.pairs[(1 << n) - 1];
    const long double log_x =
        -2 * std::log(static_cast<long double>(1 << n)) -
        m.EvalLog(std::log(static_cast<long double>(wp.v))).log();
    if (wp.card.exact()) {
      w.omega.push_back(static_cast<double>(static_cast<long double>(wp.card.value()) /
                                            std::exp(log_x)));
      w.omega_error.push_back(0.0);
    } else {
      w.omega.push_back(1.0);
      w.omega_error.push_back(static_cast<double>(std::exp(-log_x)));
    }
  }
  w.z = AssembleWitnessVector(w.pairs);
  VerifyWitness(m, w);
  return w;
}

void VerifyWitness(const OrliczFunction& m, const WitnessData& w) {
  auto defect = [](const std::string& what, int k) {
    throw InternalError("construction-defect", what + " fails at k = " + std::to_string(k));
  };
  for (const WitnessPair& wp : w.pairs) {
    const long double l3k = 3 * std::log(static_cast<long double>(wp.k));
    const long double lv = std::log(static_cast<long double>(wp.v));
    const long double lu = std::log(static_cast<long double>(wp.u));
    const long double lmv = m.EvalLog(lv).log();
    if (!(lmv < -l3k)) defect("M(v_k) < k^-3", wp.k);
    if (!(m.EvalLog(lu + lv).log() - lmv - w.p * lu > l3k)) defect("M(u v)/(u^p M(v)) > k^3", wp.k);
    if (!(lu < -l3k / (w.p - 1))) defect("u_k < k^{-3/(p-1)}", wp.k);
  }
  for (std::size_t n = 1; n <= w.omega.size(); ++n) {
    const double lo = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
    const double om = w.omega[n - 1];
    if (!(om - w.omega_error[n - 1] > lo && om <= 1.0)) {
      throw InternalError("construction-defect",
                          "omega_n outside (1 - 2^-n, 1] at n = " + std::to_string(n));
    }
  }
}

std::vector<MembershipRow> WitnessMembershipCheck(const OrliczFunction& m, const WitnessData& w,
                                                  int i_max) {
  if (i_max < 1) throw PreconditionError("invalid-argument", "i_max must be >= 1");
  std::vector<MembershipRow> rows;
  // Blocks of unstored k start at this index; the 1/k^2 majorant needs
  // M((i/n) v_k) <= M(v_k), i.e. i <= n there.
  const int first_unstored_block = BlockIndex(w.k_max + 1);
  long double head = 0;
  for (int k = 1; k <= w.k_max; ++k) head += 1.0L / (static_cast<long double>(k) * k);
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double tail = w.k_max == 0 ? 0.0L : pi * pi / 6 - head;
  for (int i = 1; i <= i_max; ++i) {
    if (w.k_max > 0 && i > first_unstored_block) {
      throw PreconditionError("membership-range",
                              "i = " + std::to_string(i) + " exceeds the first unstored block index " +
                                  std::to_string(first_unstored_block) +
                                  "; the tail majorant does not apply");
    }
    const LogValue part = ScaledModular(m, w.z, -std::log(static_cast<long double>(i)));
    MembershipRow row;
    row.i = i;
    row.partial = part.value();
    row.tail = static_cast<double>(tail);
    row.total = row.partial + row.tail;
    row.finite = std::isfinite(row.total);
    rows.push_back(row);
  }
  return rows;
}

std::vector<GrowthRow> WitnessGrowthCheck(const OrliczFunction& m, const WitnessData& w,
                                          int n_max) {
  if (n_max < 1) throw PreconditionError("invalid-argument", "n_max must be >= 1");
  if (n_max >= 31 || (1 << n_max) > w.k_max) {
    throw PreconditionError("growth-range", "2^n_max exceeds k_max of the witness");
  }
  const DerivedOrlicz n_fn(m, w.z);
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const WitnessPair& wp = w.pairs[(1 << n) - 1];
    const long double lt = std::log(static_cast<long double>(n)) +
                           std::log(static_cast<long double>(wp.u));
    const long double lr = n_fn.EvalLog(lt).log() - w.p * lt;
    const long double lbound = (n - 1) * kLn2 - w.p * std::log(static_cast<long double>(n));
    const long double lcap = std::log(static_cast<long double>(n)) - 3 * n * kLn2 / (w.p - 1);
    GrowthRow row{n, static_cast<double>(std::exp(lt)), static_cast<double>(lr / kLn10),
                  static_cast<double>(lbound / kLn10), static_cast<double>(lcap / kLn10)};
    if (!(lr >= lbound)) {
      throw InternalError("construction-defect",
                          "r_n below 2^{n-1}/n^p at n = " + std::to_string(n));
    }
    if (!(lt < lcap)) {
      throw InternalError("construction-defect",
                          "n u_{2^n} not below n 2^{-3n/(p-1)} at n = " + std::to_string(n));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace orlicz
