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

#include "orlicz/delta2_sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

std::vector<long double> LogPhi(const OrliczFunction& m, double p,
                                const std::vector<long double>& pts) {
  std::vector<long double> out(pts.size());
  ParallelFor(pts.size(), [&](std::size_t i) { out[i] = m.EvalLog(pts[i]).log() - p * pts[i]; });
  return out;
}

long double LogPhiAt(const OrliczFunction& m, double p, double t) {
  const long double l = std::log(static_cast<long double>(t));
  return m.EvalLog(l).log() - p * l;
}

}  // namespace

TSequence ExtractT(const OrliczFunction& m, double p, double k_max, const GridSpec& grid,
                   const ExtractOptions& opts) {
  if (!(p >= 1.0)) throw PreconditionError("invalid-argument", "p must be >= 1");
  if (!(k_max >= 1.0)) throw PreconditionError("invalid-argument", "k_max must be >= 1");
  CheckGrid(grid);
  const long double ltop = std::log(static_cast<long double>(m.t_max()));
  const std::vector<long double> pts = LogGrid(grid, ltop);
  const std::vector<long double> lphi = LogPhi(m, p, pts);

  // limsup phi > 0, read as: phi on the deeper half of the grid (log scale)
  // still reaches threshold * phi(t_max). Comparing against the whole grid
  // would always pass since t_max is a grid point.
  long double deep_max = -std::numeric_limits<long double>::infinity();
  for (std::size_t i = pts.size() / 2; i < pts.size(); ++i) deep_max = std::max(deep_max, lphi[i]);
  if (deep_max < lphi[0] + std::log(static_cast<long double>(opts.positivity_threshold))) {
    std::ostringstream os;
    os << "limsup of M(t)/t^p at zero shows no positive lower bound: max phi below t = "
       << static_cast<double>(std::exp(pts[pts.size() / 2])) << " is 10^"
       << static_cast<double>(deep_max / std::log(10.0L)) << ", phi(t_max) is 10^"
       << static_cast<double>(lphi[0] / std::log(10.0L));
    throw PreconditionError("phi-vanishes", os.str());
  }

  TSequence out;
  out.p = p;
  std::vector<std::size_t> chosen;
  std::size_t best = 0;
  long double scanned_max = -std::numeric_limits<long double>::infinity();
  std::size_t i = 0;
  while (i < pts.size()) {
    const double k = std::ceil(static_cast<double>(std::exp(ltop - pts[i])) * (1 - 1e-12));
    if (k > k_max) break;
    // Every point entering the window at this k.
    for (; i < pts.size(); ++i) {
      const double ki = std::ceil(static_cast<double>(std::exp(ltop - pts[i])) * (1 - 1e-12));
      if (ki != k) break;
      if (lphi[i] >= lphi[best]) best = i;
      scanned_max = std::max(scanned_max, lphi[i]);
    }
    if (chosen.empty() || chosen.back() != best) {
      chosen.push_back(best);
      out.k.push_back(k);
    }
  }
  if (chosen.size() < 3) {
    throw PreconditionError("degenerate-sequence",
                            "only " + std::to_string(chosen.size()) +
                                " distinct t_k; raise k_max or refine the grid");
  }

  long double s = 0, prefix = -std::numeric_limits<long double>::infinity();
  std::size_t next = 0;
  for (std::size_t j = 0; j < pts.size() && next < chosen.size(); ++j) {
    prefix = std::max(prefix, lphi[j]);
    if (j == chosen[next]) {
      s = std::max(s, prefix - lphi[j]);
      ++next;
    }
  }
  for (std::size_t idx : chosen) {
    out.t_values.push_back(static_cast<double>(std::exp(pts[idx])));
    out.phi_values.push_back(static_cast<double>(std::exp(lphi[idx])));
  }
  out.s_bound = static_cast<double>(std::exp(s));
  long double tail_min = std::numeric_limits<long double>::infinity();
  for (std::size_t j = chosen.size() / 2; j < chosen.size(); ++j) {
    tail_min = std::min(tail_min, lphi[chosen[j]]);
  }
  out.a_estimate = static_cast<double>(std::exp(tail_min - scanned_max));
  out.phi_grid_max = static_cast<double>(std::exp(scanned_max));
  out.log_grid_step = static_cast<double>(LogStep(grid));
  return out;
}

double ComputeSBound(const OrliczFunction& m, double p, const std::vector<double>& t_values,
                     const GridSpec& grid) {
  CheckGrid(grid);
  const std::vector<long double> pts = LogGrid(grid, std::log(static_cast<long double>(m.t_max())));
  const std::vector<long double> lphi = LogPhi(m, p, pts);
  std::vector<long double> prefix(lphi.size());
  for (std::size_t j = 0; j < lphi.size(); ++j) {
    prefix[j] = j == 0 ? lphi[0] : std::max(prefix[j - 1], lphi[j]);
  }
  long double s = 0;
  for (double t : t_values) {
    const long double lt = std::log(static_cast<long double>(t));
    // Grid points with t_j >= t, allowing for the round trip through text.
    std::size_t n = 0;
    while (n < pts.size() && pts[n] >= lt - 1e-12L) ++n;
    if (n == 0) continue;
    s = std::max(s, prefix[n - 1] - LogPhiAt(m, p, t));
  }
  return static_cast<double>(std::exp(s));
}

RelativeDelta2Certificate CertifyRelativeDelta2(const OrliczFunction& m, const TSequence& t,
                                                const std::vector<double>& c_values, double tol) {
  RelativeDelta2Certificate cert;
  for (double c : c_values) {
    if (!(c > 1.0) || !std::isfinite(c)) {
      throw PreconditionError("invalid-argument", "every c must be > 1");
    }
    CertificateRow row{c, 0, 0.0, t.s_bound * std::pow(c, t.p), 0.0, 0};
    const long double lc = std::log(static_cast<long double>(c));
    const long double lbound = std::log(static_cast<long double>(t.s_bound)) + t.p * lc;
    const long double ltol = std::log1p(static_cast<long double>(tol));
    const long double lslack = t.p * static_cast<long double>(t.log_grid_step);
    long double sup = -std::numeric_limits<long double>::infinity();
    long double worst = -std::numeric_limits<long double>::infinity();
    for (double tk : t.t_values) {
      if (c * tk > m.t_max()) continue;  // finitely many, dropped
      ++row.retained;
      const long double lt = std::log(static_cast<long double>(tk));
      const long double lr = m.EvalLog(lt + lc).log() - m.EvalLog(lt).log();
      sup = std::max(sup, lr);
      worst = std::max(worst, lr - lbound);
      if (lr - lbound > ltol) ++row.grid_exceedances;
      if (lr - lbound > lslack + ltol) {
        std::ostringstream os;
        os.precision(17);
        os << "M(c t_k)/M(t_k) = " << static_cast<double>(std::exp(lr)) << " exceeds s c^p = "
           << row.predicted_bound << " at c = " << c << ", t_k = " << tk;
        throw InternalError("certificate-violation", os.str());
      }
    }
    if (row.retained > 0) {
      row.sup_ratio = static_cast<double>(std::exp(sup));
      row.worst_slack = static_cast<double>(std::exp(worst));
    }
    cert.rows.push_back(row);
  }
  return cert;
}

BoundedCompleteReport BoundedCompleteCheck(const OrliczFunction& m, const TSequence& t,
                                           const WeightedVector& x, int i_max,
                                           double membership_tol) {
  if (i_max < 1) throw PreconditionError("invalid-argument", "i_max must be >= 1");
  for (const Entry& e : x.entries()) {
    const bool member = std::any_of(t.t_values.begin(), t.t_values.end(), [&](double tk) {
      return std::fabs(e.value - tk) <= membership_tol * tk;
    });
    if (!member) {
      std::ostringstream os;
      os.precision(17);
      os << "value " << e.value << " is not an element of T";
      throw PreconditionError("not-in-T", os.str());
    }
  }
  if (i_max * x.max_abs() > m.t_max()) {
    throw RangeError("i_max * max|x| exceeds t_max");
  }
  const LogValue sx = Modular(m, x);
  if (sx.log() > 0) {
    throw PreconditionError("modular-too-large", "sigma_M(x) exceeds 1");
  }
  BoundedCompleteReport rep;
  rep.modular_x = sx.value();
  for (int i = 1; i <= i_max; ++i) {
    const long double li = std::log(static_cast<long double>(i));
    long double ls = i == 1 ? 0.0L : -std::numeric_limits<long double>::infinity();
    for (double tk : t.t_values) {
      if (i * tk > m.t_max()) continue;
      const long double lt = std::log(static_cast<long double>(tk));
      ls = std::max(ls, m.EvalLog(lt + li).log() - m.EvalLog(lt).log());
    }
    const LogValue six = ScaledModular(m, x, -li);
    BoundedCompleteRow row{i, six.value(), static_cast<double>(std::exp(ls)), 0.0};
    row.bound = static_cast<double>(std::exp(ls + sx.log()));
    if (!x.is_zero() &&
        six.log() > ls + sx.log() + std::log1p(static_cast<long double>(defaults::kCertificateTol))) {
      std::ostringstream os;
      os.precision(17);
      os << "sigma_M(" << i << "x) = " << row.modular_ix << " exceeds s_i sigma_M(x) = " << row.bound;
      throw InternalError("completeness-violation", os.str());
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace orlicz
