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

// Command-line front end. Every subcommand prints one JSON report on stdout.
// Exit codes: 0 ok, 2 precondition or hypothesis failure, 1 internal error,
// 64 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/delta2_sequences.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/indices.hpp"
#include "orlicz/io.hpp"
#include "orlicz/parallel.hpp"
#include "orlicz/smoothness.hpp"
#include "orlicz/subspaces.hpp"

namespace {

using nlohmann::json;
using namespace orlicz;
using io::Num;

constexpr int kExitUsage = 64;

struct Common {
  std::string fn;
  GridSpec grid;
};

void AddFn(CLI::App* sub, Common& c) {
  sub->add_option("--fn", c.fn, "function spec JSON")->required();
}

void AddGrid(CLI::App* sub, Common& c) {
  sub->add_option("--tmin", c.grid.t_min, "smallest grid point");
  sub->add_option("--ppd", c.grid.points_per_decade, "grid points per decade");
  sub->add_option("--tail", c.grid.tail_doublings, "asymptotic probes below t_min");
}

std::string G17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> ParseList(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || *end != '\0') {
      throw PreconditionError("invalid-argument", "bad number '" + tok + "' in list");
    }
    out.push_back(v);
  }
  return out;
}

json BracketJson(const BoydBracket& b) {
  json samples = json::array();
  for (const auto& [q, s] : b.sup_samples) {
    samples.push_back(json{{"p", q},
                           {"log10_sup", s.log10_sup},
                           {"log10_sup_mid", s.log10_sup_mid},
                           {"log10_sup_deep", s.log10_sup_deep},
                           {"evidence", s.infinite ? "infinite_sup" : "finite_sup"}});
  }
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"width", b.upper - b.lower},
              {"sup_samples", samples}};
}

json EquivJson(const EquivalenceReport& r) {
  return json{{"verdict", ToString(r.verdict)},
              {"p", r.p},
              {"lower_const", Num(r.lower_const)},
              {"upper_const", Num(r.upper_const)},
              {"log10_lower_const", r.log10_lower_const},
              {"log10_upper_const", r.log10_upper_const},
              {"t_range", {{"log10_t_min", r.log10_t_min}, {"t_max", r.t_max}}}};
}

json TJson(const TSequence& t) {
  return json{{"p", t.p},
              {"count", t.t_values.size()},
              {"t_values", t.t_values},
              {"phi_values", t.phi_values},
              {"s_bound", t.s_bound},
              {"a_estimate", t.a_estimate},
              {"phi_grid_max", t.phi_grid_max}};
}

class Runner {
 public:
  Runner(std::string command, json inputs, json grid_metadata)
      : command_(std::move(command)),
        inputs_(std::move(inputs)),
        grid_(std::move(grid_metadata)) {}

  void Emit(json results) const {
    json report{{"command", command_},
                {"version", defaults::kVersion},
                {"inputs", inputs_},
                {"grid_metadata", grid_},
                {"results", std::move(results)}};
    std::cout << report.dump(2) << "\n";
  }

 private:
  std::string command_;
  json inputs_;
  json grid_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz sequence space toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  unsigned seed = defaults::kSeed;
  app.add_option("--threads", threads, "worker threads for grid sweeps");
  app.add_option("--seed", seed, "seed for randomized drivers");

  Common c;

  // eval
  double eval_t = 0, eval_c = 0;
  auto* eval = app.add_subcommand("eval", "evaluate M(t) and optionally M(ct)/M(t)");
  AddFn(eval, c);
  eval->add_option("--t", eval_t, "argument")->required();
  eval->add_option("--c", eval_c, "ratio factor > 1");

  // norm
  std::string vec_path, csv_path, out_path;
  double rel_tol = defaults::kNormRelTol;
  auto* norm = app.add_subcommand("norm", "Luxembourg norm and modular of a vector");
  AddFn(norm, c);
  norm->add_option("--vec", vec_path, "vector JSON")->required();
  norm->add_option("--rel-tol", rel_tol, "relative tolerance");
  norm->add_option("--csv", csv_path, "per-entry contribution table");

  // alpha
  BoydOptions boyd;
  auto* alpha = app.add_subcommand("alpha", "lower Boyd index bracket");
  AddFn(alpha, c);
  AddGrid(alpha, c);
  alpha->add_option("--p-min", boyd.p_min);
  alpha->add_option("--p-max", boyd.p_max);
  alpha->add_option("--escape", boyd.escape);
  alpha->add_option("--width", boyd.width);
  alpha->add_option("--csv", csv_path, "probed p and sups");

  // delta2
  double d2_c = defaults::kDelta2C, d2_escape = defaults::kDelta2Escape;
  auto* delta2 = app.add_subcommand("delta2", "Delta2-at-zero scan of M(ct)/M(t)");
  AddFn(delta2, c);
  AddGrid(delta2, c);
  delta2->add_option("--c", d2_c);
  delta2->add_option("--escape", d2_escape);
  delta2->add_option("--csv", csv_path, "scanned (t, ratio) table");

  // equiv
  double eq_p = 2, eq_spread = defaults::kEquivalenceSpread;
  auto* equiv = app.add_subcommand("equiv", "equivalence of M to t^p at zero");
  AddFn(equiv, c);
  AddGrid(equiv, c);
  equiv->add_option("--p", eq_p)->required();
  equiv->add_option("--spread", eq_spread);

  // extract-t
  double ex_p = 2, ex_kmax = defaults::kExtractKMax;
  auto* extract = app.add_subcommand("extract-t", "extract a sequence T with Delta2 relative to T");
  AddFn(extract, c);
  AddGrid(extract, c);
  extract->add_option("--p", ex_p)->required();
  extract->add_option("--kmax", ex_kmax, "largest window index (real, may be huge)");
  extract->add_option("--out", out_path, "CSV k,t_k,phi_k");

  // certify
  std::string t_path, c_list = "1.5,2,4,8";
  double t_p = 0;
  auto* certify = app.add_subcommand("certify", "certify M(c t_k) <= s c^p M(t_k)");
  AddFn(certify, c);
  AddGrid(certify, c);
  certify->add_option("--t", t_path, "T CSV")->required();
  certify->add_option("--c", c_list, "comma-separated factors > 1");
  certify->add_option("--p", t_p, "override p from the T file");

  // bc-check
  int imax = 10;
  auto* bc = app.add_subcommand("bc-check", "sigma_M(ix) <= s_i sigma_M(x) for x supported on T");
  AddFn(bc, c);
  AddGrid(bc, c);
  bc->add_option("--t", t_path, "T CSV")->required();
  bc->add_option("--vec", vec_path, "vector JSON")->required();
  bc->add_option("--imax", imax);
  bc->add_option("--p", t_p, "override p from the T file");

  // witness
  double w_p = 3;
  int w_kmax = defaults::kWitnessKMax;
  auto* witness = app.add_subcommand("witness", "build the block witness vector z");
  AddFn(witness, c);
  AddGrid(witness, c);
  witness->add_option("--p", w_p)->required();
  witness->add_option("--kmax", w_kmax);
  witness->add_option("--out", out_path, "witness JSON");

  // witness-check
  std::string w_path;
  int nmax = 10;
  auto* wcheck = app.add_subcommand("witness-check", "membership and growth checks on a witness");
  AddFn(wcheck, c);
  wcheck->add_option("--witness", w_path, "witness JSON")->required();
  wcheck->add_option("--nmax", nmax);
  wcheck->add_option("--imax", imax);

  // derive
  std::string tgrid = "1e-12:1:64";
  auto* derive = app.add_subcommand("derive", "tabulate N(t) = sigma_M(t z)");
  AddFn(derive, c);
  derive->add_option("--vec", vec_path, "generator z JSON")->required();
  derive->add_option("--tgrid", tgrid, "a:b:ppd log grid");
  derive->add_option("--out", out_path, "CSV t,N,log10_N");

  // classify
  int cl_p = 2;
  double limit_threshold = defaults::kLimitThreshold;
  auto* classify = app.add_subcommand("classify", "smoothness trichotomy verdict");
  AddFn(classify, c);
  AddGrid(classify, c);
  classify->add_option("--p", cl_p)->required();
  classify->add_option("--limit-threshold", limit_threshold);

  // bf-demo
  int bf_n = 3, bf_degree = 2;
  double bf_eps = 0.1, bf_coef = 1.0;
  auto* bf = app.add_subcommand("bf-demo", "unit-ball blow-up of a diagonal k-form");
  AddFn(bf, c);
  AddGrid(bf, c);
  bf->add_option("--n", bf_n);
  bf->add_option("--degree", bf_degree);
  bf->add_option("--eps", bf_eps);
  bf->add_option("--coefficient", bf_coef);
  bf->add_option("--out", out_path, "demo JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  SetThreads(threads);

  const json grid_meta{{"t_min", c.grid.t_min},
                       {"points_per_decade", c.grid.points_per_decade},
                       {"tail_doublings", c.grid.tail_doublings},
                       {"boyd_escape", boyd.escape},
                       {"delta2_escape", d2_escape},
                       {"equivalence_spread", eq_spread},
                       {"limit_threshold", limit_threshold}};

  try {
    const OrliczFunction m = io::FunctionFromJson(io::ReadJsonFile(c.fn));
    json inputs{{"function", io::FunctionToJson(m)}, {"seed", seed}};

    if (*eval) {
      inputs["t"] = eval_t;
      const LogValue v = m.Eval(eval_t);
      json res{{"M", Num(v.value())},
               {"log_M", Num(static_cast<double>(v.log()))},
               {"log10_M", Num(static_cast<double>(v.log10()))}};
      if (eval_c != 0) {
        inputs["c"] = eval_c;
        res["ratio"] = Num(Ratio(m, eval_c, eval_t));
      }
      Runner("eval", inputs, grid_meta).Emit(res);
    } else if (*norm) {
      inputs["vector"] = io::ReadJsonFile(vec_path);
      inputs["rel_tol"] = rel_tol;
      const WeightedVector x = io::VectorFromJson(inputs["vector"]);
      const double nv = LuxembourgNorm(m, x, rel_tol);
      json res{{"norm", nv}, {"modular", Num(Modular(m, x).value())}};
      if (nv > 0) res["modular_at_norm"] = Num(Modular(m, Scale(x, 1.0 / nv)).value());
      if (!csv_path.empty()) {
        std::ostringstream os;
        WriteVectorCsv(os, m, x);
        io::WriteTextFile(csv_path, os.str());
      }
      Runner("norm", inputs, grid_meta).Emit(res);
    } else if (*alpha) {
      inputs["p_min"] = boyd.p_min;
      inputs["p_max"] = boyd.p_max;
      inputs["width"] = boyd.width;
      const BoydBracket b = EstimateAlpha(m, c.grid, boyd);
      if (!csv_path.empty()) {
        std::ostringstream os;
        os << "p,log10_sup,evidence\n";
        for (const auto& [q, s] : b.sup_samples) {
          os << G17(q) << "," << G17(s.log10_sup) << "," << (s.infinite ? "infinite" : "finite")
             << "\n";
        }
        io::WriteTextFile(csv_path, os.str());
      }
      Runner("alpha", inputs, grid_meta).Emit(BracketJson(b));
    } else if (*delta2) {
      inputs["c"] = d2_c;
      const Delta2Report r = Delta2AtZero(m, d2_c, c.grid, d2_escape);
      if (!csv_path.empty()) {
        std::ostringstream os;
        os << "t,ratio\n";
        for (const auto& [t, ratio] : r.table) os << G17(t) << "," << G17(ratio) << "\n";
        io::WriteTextFile(csv_path, os.str());
      }
      Runner("delta2", inputs, grid_meta)
          .Emit(json{{"verdict", ToString(r.verdict)},
                     {"sup_ratio", Num(r.sup_ratio)},
                     {"log10_sup_ratio", r.log10_sup_ratio},
                     {"witness_t", r.witness_t},
                     {"c", r.c}});
    } else if (*equiv) {
      inputs["p"] = eq_p;
      Runner("equiv", inputs, grid_meta).Emit(EquivJson(EquivalentToPower(m, eq_p, c.grid, eq_spread)));
    } else if (*extract) {
      inputs["p"] = ex_p;
      inputs["k_max"] = ex_kmax;
      const TSequence t = ExtractT(m, ex_p, ex_kmax, c.grid);
      if (!out_path.empty()) {
        std::ostringstream os;
        io::WriteTCsv(os, t);
        io::WriteTextFile(out_path, os.str());
      }
      Runner("extract-t", inputs, grid_meta).Emit(TJson(t));
    } else if (*certify || *bc) {
      std::istringstream in(io::ReadTextFile(t_path));
      TSequence t = io::ReadTCsv(in, t_p > 0 ? std::optional<double>(t_p) : std::nullopt);
      t.s_bound = ComputeSBound(m, t.p, t.t_values, c.grid);
      t.log_grid_step = static_cast<double>(LogStep(c.grid));
      inputs["t_file"] = t_path;
      inputs["p"] = t.p;
      if (*certify) {
        const std::vector<double> cs = ParseList(c_list);
        inputs["c_values"] = cs;
        const RelativeDelta2Certificate cert = CertifyRelativeDelta2(m, t, cs);
        json rows = json::array();
        for (const CertificateRow& r : cert.rows) {
          rows.push_back(json{{"c", r.c},
                              {"retained", r.retained},
                              {"sup_ratio", Num(r.sup_ratio)},
                              {"predicted_bound", Num(r.predicted_bound)},
                              {"worst_slack", Num(r.worst_slack)},
                              {"grid_exceedances", r.grid_exceedances}});
        }
        Runner("certify", inputs, grid_meta)
            .Emit(json{{"s_bound", t.s_bound}, {"certificate", rows}, {"passed", true}});
      } else {
        inputs["vector"] = io::ReadJsonFile(vec_path);
        inputs["i_max"] = imax;
        const WeightedVector x = io::VectorFromJson(inputs["vector"]);
        const BoundedCompleteReport rep = BoundedCompleteCheck(m, t, x, imax);
        json rows = json::array();
        for (const BoundedCompleteRow& r : rep.rows) {
          rows.push_back(json{{"i", r.i},
                              {"modular_ix", Num(r.modular_ix)},
                              {"s_i", Num(r.s_i)},
                              {"bound", Num(r.bound)}});
        }
        Runner("bc-check", inputs, grid_meta)
            .Emit(json{{"modular_x", rep.modular_x}, {"rows", rows}, {"passed", true}});
      }
    } else if (*witness) {
      inputs["p"] = w_p;
      inputs["k_max"] = w_kmax;
      const WitnessData w = BuildWitness(m, w_p, w_kmax, c.grid);
      const json doc = io::WitnessToJson(w);
      if (!out_path.empty()) io::WriteTextFile(out_path, doc.dump(2) + "\n");
      json omega = json::array();
      for (double o : w.omega) omega.push_back(o);
      Runner("witness", inputs, grid_meta)
          .Emit(json{{"k_max", w.k_max},
                     {"log10_ratio_sup", w.log10_ratio_sup},
                     {"z_entries", w.z.entries().size()},
                     {"omega", omega},
                     {"verified", true}});
    } else if (*wcheck) {
      inputs["witness_file"] = w_path;
      inputs["n_max"] = nmax;
      inputs["i_max"] = imax;
      const WitnessData w = io::WitnessFromJson(io::ReadJsonFile(w_path), m);
      json members = json::array();
      for (const MembershipRow& r : WitnessMembershipCheck(m, w, imax)) {
        members.push_back(json{{"i", r.i},
                               {"partial", Num(r.partial)},
                               {"tail", Num(r.tail)},
                               {"total", Num(r.total)},
                               {"finite", r.finite}});
      }
      json growth = json::array();
      for (const GrowthRow& r : WitnessGrowthCheck(m, w, nmax)) {
        growth.push_back(json{{"n", r.n},
                              {"t", r.t},
                              {"log10_r", r.log10_r},
                              {"log10_bound", r.log10_bound},
                              {"log10_t_cap", r.log10_t_cap}});
      }
      Runner("witness-check", inputs, grid_meta)
          .Emit(json{{"membership", members}, {"growth", growth}, {"passed", true}});
    } else if (*derive) {
      inputs["vector"] = io::ReadJsonFile(vec_path);
      inputs["tgrid"] = tgrid;
      const std::vector<double> g = [&] {
        std::string s = tgrid;
        for (char& ch : s) ch = ch == ':' ? ',' : ch;
        return ParseList(s);
      }();
      if (g.size() != 3 || !(g[0] > 0 && g[0] < g[1]) || g[2] < 1) {
        throw PreconditionError("invalid-argument", "--tgrid must be a:b:ppd with 0 < a < b");
      }
      const DerivedOrlicz n(m, io::VectorFromJson(inputs["vector"]));
      if (g[1] > n.t_max()) throw RangeError("--tgrid upper end exceeds t_max of N");
      GridSpec tg;
      tg.t_min = g[0];
      tg.points_per_decade = static_cast<int>(g[2]);
      std::ostringstream os;
      os << "t,N,log10_N\n";
      int count = 0;
      for (long double l : LogGrid(tg, std::log(static_cast<long double>(g[1])))) {
        const LogValue v = n.EvalLog(l);
        os << G17(static_cast<double>(std::exp(l))) << "," << G17(v.value()) << ","
           << G17(static_cast<double>(v.log10())) << "\n";
        ++count;
      }
      if (!out_path.empty()) io::WriteTextFile(out_path, os.str());
      const ValidationReport vr = n.Validate();
      Runner("derive", inputs, grid_meta)
          .Emit(json{{"t_max_N", n.t_max()},
                     {"points", count},
                     {"convexity_check", vr.passed},
                     {"worst_convexity_margin", vr.worst_convexity_margin}});
    } else if (*classify) {
      inputs["p"] = cl_p;
      ClassifyOptions opts;
      opts.limit_threshold = limit_threshold;
      const SmoothnessClassification r = Classify(m, cl_p, c.grid, opts);
      Runner("classify", inputs, grid_meta)
          .Emit(json{{"verdict", r.verdict},
                     {"alpha_bracket", BracketJson(r.alpha_bracket)},
                     {"equivalence", EquivJson(r.equivalence)},
                     {"limit_evidence", Num(r.limit_evidence)},
                     {"log10_limit_evidence", r.log10_limit_evidence},
                     {"log10_limit_t", r.log10_limit_t}});
    } else if (*bf) {
      inputs["n"] = bf_n;
      inputs["degree"] = bf_degree;
      inputs["eps"] = bf_eps;
      inputs["coefficient"] = bf_coef;
      const BfDemo d = DiagonalFormBlowUp(m, bf_n, DiagonalForm(bf_degree, bf_coef), bf_eps, c.grid);
      const json demo{{"t", d.t},
                      {"m", d.m_count.exact() ? json(d.m_count.value()) : json(d.m)},
                      {"modular", d.modular},
                      {"form_value", d.form_value},
                      {"certified_lower_bound", d.certified_lower_bound}};
      if (!out_path.empty()) io::WriteTextFile(out_path, demo.dump(2) + "\n");
      Runner("bf-demo", inputs, grid_meta).Emit(demo);
    }
  } catch (const Error& e) {
    json body{{"error", {{"kind", e.kind()}, {"detail", e.what()}}}};
    std::cout << body.dump(2) << "\n";
    return e.error_class() == ErrorClass::kInternal ? 1 : 2;
  } catch (const std::exception& e) {
    json body{{"error", {{"kind", "internal"}, {"detail", e.what()}}}};
    std::cout << body.dump(2) << "\n";
    return 1;
  }
  return 0;
}
