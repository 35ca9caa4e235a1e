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

#include "orlicz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz::io {

namespace {

[[noreturn]] void BadSpec(const std::string& detail) {
  throw PreconditionError("invalid-spec", detail);
}

double NumberField(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    BadSpec(std::string("missing numeric field '") + key + "'");
  }
  return obj[key].get<double>();
}

std::vector<double> NumberList(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_array()) {
    BadSpec(std::string("missing array field '") + key + "'");
  }
  std::vector<double> out;
  for (const json& v : obj[key]) {
    if (!v.is_number()) BadSpec(std::string("non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string G17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json Num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

OrliczFunction FunctionFromJson(const json& spec) {
  if (!spec.is_object()) BadSpec("function spec must be a JSON object");
  if (!spec.contains("family") || !spec["family"].is_string()) BadSpec("missing 'family'");
  const std::string family = spec["family"];
  const json params = spec.value("params", json::object());
  if (!params.is_object()) BadSpec("'params' must be an object");
  const double t_max = spec.contains("t_max") ? NumberField(spec, "t_max") : defaults::kTMax;
  int resolution = defaults::kPointsPerDecade;
  if (spec.contains("grid_resolution")) {
    if (!spec["grid_resolution"].is_number_integer()) BadSpec("'grid_resolution' must be an integer");
    resolution = spec["grid_resolution"].get<int>();
  }
  FamilyParams fp;
  if (family == "power") {
    fp = PowerParams{NumberField(params, "p")};
  } else if (family == "powerlog") {
    fp = PowerLogParams{params.contains("t0") ? NumberField(params, "t0") : 0.1};
  } else if (family == "suppower") {
    fp = SupPowerParams{NumberField(params, "p"), NumberList(params, "anchors"),
                        NumberList(params, "steep_exponents")};
  } else if (family == "piecewise_derivative") {
    fp = PiecewiseDerivativeParams{NumberList(params, "breakpoints"),
                                   NumberList(params, "densities")};
  } else {
    BadSpec("unknown family '" + family + "'");
  }
  return OrliczFunction::Create(std::move(fp), t_max, resolution);
}

json FunctionToJson(const OrliczFunction& m) {
  json params = json::object();
  if (const auto* pw = std::get_if<PowerParams>(&m.params())) {
    params["p"] = pw->p;
  } else if (const auto* pl = std::get_if<PowerLogParams>(&m.params())) {
    params["t0"] = pl->t0;
  } else if (const auto* sp = std::get_if<SupPowerParams>(&m.params())) {
    params["p"] = sp->p;
    params["anchors"] = sp->anchors;
    params["steep_exponents"] = sp->steep_exponents;
  } else {
    const auto& pd = std::get<PiecewiseDerivativeParams>(m.params());
    params["breakpoints"] = pd.breakpoints;
    params["densities"] = pd.densities;
  }
  return json{{"family", m.family()},
              {"params", params},
              {"t_max", m.t_max()},
              {"grid_resolution", m.grid_resolution()}};
}

WeightedVector VectorFromJson(const json& doc) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw PreconditionError("invalid-vector", "vector file needs an 'entries' array");
  }
  std::vector<Entry> entries;
  for (const json& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number()) {
      throw PreconditionError("invalid-vector", "each entry must be [value, multiplicity]");
    }
    const double v = e[0].get<double>();
    const json& mult = e[1];
    if (mult.is_number_unsigned() || (mult.is_number_integer() && mult.get<long long>() > 0)) {
      entries.push_back({v, Count::Exact(mult.get<std::uint64_t>())});
    } else if (mult.is_number_float() && mult.get<double>() >= 1 &&
               mult.get<double>() == std::floor(mult.get<double>()) &&
               mult.get<double>() <= static_cast<double>(Count::kExactLimit)) {
      entries.push_back({v, Count::Exact(static_cast<std::uint64_t>(mult.get<double>()))});
    } else if (mult.is_object() && mult.contains("log_mult") && mult["log_mult"].is_number()) {
      const double err = mult.contains("rel_error") && mult["rel_error"].is_number()
                             ? mult["rel_error"].get<double>()
                             : 0.0;
      entries.push_back({v, Count::FromLog(mult["log_mult"].get<double>(), err)});
    } else {
      throw PreconditionError("invalid-vector",
                              "multiplicity must be a positive integer or {\"log_mult\": x}");
    }
  }
  return WeightedVector(std::move(entries));
}

json VectorToJson(const WeightedVector& x) {
  json entries = json::array();
  for (const Entry& e : x.entries()) {
    if (e.count.exact()) {
      entries.push_back(json::array({e.value, e.count.value()}));
    } else {
      json m{{"log_mult", static_cast<double>(e.count.log())}};
      if (e.count.rel_error() > 0) m["rel_error"] = e.count.rel_error();
      entries.push_back(json::array({e.value, m}));
    }
  }
  return json{{"entries", entries}};
}

void WriteTCsv(std::ostream& os, const TSequence& t) {
  os << "# p=" << G17(t.p) << " s_bound=" << G17(t.s_bound) << " a_estimate=" << G17(t.a_estimate)
     << "\n";
  os << "k,t_k,phi_k\n";
  for (std::size_t i = 0; i < t.t_values.size(); ++i) {
    os << G17(t.k[i]) << "," << G17(t.t_values[i]) << "," << G17(t.phi_values[i]) << "\n";
  }
}

TSequence ReadTCsv(std::istream& is, std::optional<double> p_override) {
  TSequence t;
  std::optional<double> p;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string tok;
      while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const double val = std::strtod(tok.c_str() + eq + 1, nullptr);
        if (key == "p") p = val;
        if (key == "s_bound") t.s_bound = val;
        if (key == "a_estimate") t.a_estimate = val;
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("k,", 0) == 0) continue;
    }
    double k = 0, tk = 0, phi = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &k, &tk, &phi) != 3) {
      throw PreconditionError("invalid-spec", "malformed T row: " + line);
    }
    t.k.push_back(k);
    t.t_values.push_back(tk);
    t.phi_values.push_back(phi);
  }
  if (p_override) p = p_override;
  if (!p) throw PreconditionError("invalid-spec", "T file has no p; pass --p");
  t.p = *p;
  for (std::size_t i = 0; i < t.t_values.size(); ++i) {
    if (!(t.t_values[i] > 0) || (i > 0 && !(t.t_values[i] < t.t_values[i - 1]))) {
      throw PreconditionError("invalid-spec", "T must be positive and strictly decreasing");
    }
  }
  if (t.t_values.empty()) throw PreconditionError("invalid-spec", "T file has no rows");
  return t;
}

json WitnessToJson(const WitnessData& w) {
  json pairs = json::array();
  for (const WitnessPair& wp : w.pairs) {
    json j{{"k", wp.k},
           {"u", wp.u},
           {"v", wp.v},
           {"log_card", static_cast<double>(wp.log_card)},
           {"log_ratio", wp.log_ratio}};
    if (wp.card.exact()) {
      j["card"] = wp.card.value();
    } else {
      j["card_rel_error"] = wp.card.rel_error();
    }
    pairs.push_back(j);
  }
  json blocks = json::array();
  for (int n = 1; (1 << (n - 1)) < w.k_max; ++n) {
    json values = json::array();
    const int lo = (1 << (n - 1)) + 1, hi = std::min(1 << n, w.k_max);
    for (int k = lo; k <= hi; ++k) values.push_back(w.pairs[k - 1].v / n);
    blocks.push_back(json{{"n", n}, {"values", values}});
  }
  json omega = json::array();
  for (std::size_t n = 0; n < w.omega.size(); ++n) {
    omega.push_back(json{{"n", n + 1}, {"omega", w.omega[n]}, {"error", w.omega_error[n]}});
  }
  return json{{"p", w.p},
              {"k_max", w.k_max},
              {"grid", {{"t_min", w.grid.t_min},
                        {"points_per_decade", w.grid.points_per_decade},
                        {"tail_doublings", w.grid.tail_doublings}}},
              {"log10_ratio_sup", w.log10_ratio_sup},
              {"pairs", pairs},
              {"blocks", blocks},
              {"omega", omega}};
}

WitnessData WitnessFromJson(const json& doc, const OrliczFunction& m) {
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw PreconditionError("invalid-spec", "witness file needs 'p' and 'pairs'");
  }
  WitnessData w;
  w.p = NumberField(doc, "p");
  w.k_max = static_cast<int>(doc["pairs"].size());
  if (doc.contains("k_max") && doc["k_max"].get<int>() != w.k_max) {
    throw PreconditionError("invalid-spec", "k_max does not match the number of pairs");
  }
  if (doc.contains("log10_ratio_sup")) w.log10_ratio_sup = doc["log10_ratio_sup"].get<double>();
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    w.grid.t_min = g.value("t_min", w.grid.t_min);
    w.grid.points_per_decade = g.value("points_per_decade", w.grid.points_per_decade);
    w.grid.tail_doublings = g.value("tail_doublings", w.grid.tail_doublings);
  }
  int expect = 1;
  for (const json& j : doc["pairs"]) {
    WitnessPair wp;
    wp.k = j.at("k").get<int>();
    if (wp.k != expect++) throw PreconditionError("invalid-spec", "pairs must list k = 1, 2, ...");
    wp.u = j.at("u").get<double>();
    wp.v = j.at("v").get<double>();
    wp.log_ratio = j.value("log_ratio", 0.0);
    if (j.contains("card")) {
      wp.card = Count::Exact(j["card"].get<std::uint64_t>());
      wp.log_card = wp.card.log();
    } else {
      wp.log_card = j.at("log_card").get<double>();
      wp.card = Count::FromLog(wp.log_card, j.value("card_rel_error", 0.0));
    }
    w.pairs.push_back(wp);
  }
  for (int n = 1; (1 << n) <= w.k_max; ++n) {
    const WitnessPair& wp = w.pairs[(1 << n) - 1];
    const long double log_x = -2 * std::log(static_cast<long double>(1 << n)) -
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

json ReadJsonFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError("invalid-spec", path + ": " + e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("io", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("io", "cannot write " + path);
  out << text;
}

}  // namespace orlicz::io
