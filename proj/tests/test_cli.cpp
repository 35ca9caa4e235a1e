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


#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args) {
  const std::string cmd = std::string(ORLICZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Scratch directory with a few function specs.
const fs::path& Dir() {
  static const fs::path dir = [] {
    std::string tmpl = (fs::temp_directory_path() / "orlicz_cli_XXXXXX").string();
    const char* d = mkdtemp(tmpl.data());
    REQUIRE(d != nullptr);
    const fs::path p(d);
    std::ofstream(p / "power2.json") << R"({"family":"power","params":{"p":2}})";
    std::ofstream(p / "power3.json") << R"({"family":"power","params":{"p":3}})";
    std::ofstream(p / "sup.json")
        << R"({"family":"suppower","params":{"p":2,"anchors":[0.1,1e-4,1e-9,1e-16,1e-25],)"
           R"("steep_exponents":[8,16,24,32,40]}})";
    std::ofstream(p / "vec.json") << R"({"entries":[[0.5,2],[0.01,100]]})";
    return p;
  }();
  return dir;
}

std::string P(const std::string& name) { return (Dir() / name).string(); }

json Report(const Run& r) {
  INFO(r.out);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("alpha on power 2") {
  const Run r = Cli("alpha --fn " + P("power2.json"));
  REQUIRE(r.code == 0);
  const json j = Report(r);
  CHECK(j["command"] == "alpha");
  CHECK(j.contains("version"));
  CHECK(j["grid_metadata"].contains("t_min"));
  CHECK(j["grid_metadata"].contains("points_per_decade"));
  CHECK(j["results"]["lower"].get<double>() <= 2);
  CHECK(j["results"]["upper"].get<double>() >= 2);
}

TEST_CASE("witness on power 2 is a hypothesis error") {
  const Run r = Cli("witness --fn " + P("power2.json") + " --p 2");
  CHECK(r.code == 2);
  const json j = Report(r);
  CHECK(j["error"]["kind"] == "eq11-sup-finite");
  CHECK(j["error"]["detail"].is_string());
}

TEST_CASE("bf demo") {
  const Run r = Cli("bf-demo --fn " + P("power3.json") + " --n 3 --degree 2 --eps 0.1");
  REQUIRE(r.code == 0);
  const json res = Report(r)["results"];
  CHECK(res["t"] == 0.05);
  CHECK(res["m"] == 3999);
  CHECK(res["modular"].get<double>() <= 1);
  CHECK(res["form_value"].get<double>() >= 9.99);
  CHECK(res["certified_lower_bound"].get<double>() == doctest::Approx(9.99));
}

TEST_CASE("usage errors exit 64") {
  CHECK(Cli("").code == 64);
  CHECK(Cli("frobnicate").code == 64);
  CHECK(Cli("alpha").code == 64);
  CHECK(Cli("alpha --fn " + P("power2.json") + " --bogus 1").code == 64);
}

TEST_CASE("precondition errors exit 2") {
  const Run missing = Cli("alpha --fn " + P("nope.json"));
  CHECK(missing.code == 2);
  CHECK(Report(missing)["error"]["kind"] == "io");
  const Run range = Cli("eval --fn " + P("power2.json") + " --t 2");
  CHECK(range.code == 2);
  CHECK(Report(range)["error"]["kind"] == "range");
  const Run hyp = Cli("bf-demo --fn " + P("power2.json") + " --n 3 --degree 2 --eps 0.1");
  CHECK(hyp.code == 2);
  CHECK(Report(hyp)["error"]["kind"] == "liminf-hypothesis");
}

TEST_CASE("extract-t, certify and bc-check chain") {
  const std::string tcsv = P("t.csv");
  const Run ex = Cli("extract-t --fn " + P("sup.json") + " --p 2 --kmax 1e30 --out " + tcsv);
  REQUIRE(ex.code == 0);
  REQUIRE(fs::exists(tcsv));
  const Run cert = Cli("certify --fn " + P("sup.json") + " --t " + tcsv + " --c 1.5,2,4,8");
  REQUIRE(cert.code == 0);
  const json rows = Report(cert)["results"]["certificate"];
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row["sup_ratio"].get<double>() <= row["predicted_bound"].get<double>() * (1 + 1e-12));
  }

  // A vector supported on the first two T points.
  std::ifstream in(tcsv);
  std::string line;
  std::vector<double> ts;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'k') continue;
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    ts.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  REQUIRE(ts.size() > 10);
  json v;
  v["entries"] = json::array({json::array({ts[ts.size() - 1], 3}), json::array({ts[ts.size() - 2], 5})});
  std::ofstream(P("tvec.json")) << v.dump();
  const Run bc = Cli("bc-check --fn " + P("sup.json") + " --t " + tcsv + " --vec " + P("tvec.json") +
                     " --imax 5");
  REQUIRE(bc.code == 0);
  CHECK(Report(bc)["results"]["rows"].size() == 5);

  // Not on T.
  v["entries"] = json::array({json::array({ts[3] * 0.7, 1})});
  std::ofstream(P("offvec.json")) << v.dump();
  const Run off = Cli("bc-check --fn " + P("sup.json") + " --t " + tcsv + " --vec " + P("offvec.json"));
  CHECK(off.code == 2);
  CHECK(Report(off)["error"]["kind"] == "not-in-T");
}

TEST_CASE("witness and witness-check chain") {
  const std::string wpath = P("w.json");
  const Run w = Cli("witness --fn " + P("sup.json") + " --p 3 --kmax 64 --out " + wpath);
  REQUIRE(w.code == 0);
  const Run chk = Cli("witness-check --fn " + P("sup.json") + " --witness " + wpath +
                      " --nmax 6 --imax 4");
  REQUIRE(chk.code == 0);
  const json res = Report(chk)["results"];
  CHECK(res["growth"].size() == 6);
  CHECK(res["membership"].size() == 4);

  // A tampered witness trips the internal re-verification: exit 1.
  json doc = json::parse(std::ifstream(wpath));
  doc["pairs"][4]["u"] = 1.0;
  std::ofstream(P("bad_w.json")) << doc.dump();
  const Run bad = Cli("witness-check --fn " + P("sup.json") + " --witness " + P("bad_w.json") +
                      " --nmax 3 --imax 2");
  CHECK(bad.code == 1);
  CHECK(Report(bad)["error"]["kind"] == "construction-defect");
}

TEST_CASE("reports are deterministic and independent of thread count") {
  for (const std::string args :
       {"alpha --fn " + P("sup.json"), "delta2 --fn " + P("sup.json"),
        "extract-t --fn " + P("sup.json") + " --p 2 --kmax 1e30",
        "classify --fn " + P("sup.json") + " --p 2", "norm --fn " + P("sup.json") + " --vec " + P("vec.json")}) {
    const Run a = Cli(args), b = Cli(args);
    const Run t1 = Cli("--threads 1 " + args), t4 = Cli("--threads 4 " + args);
    CHECK_MESSAGE(a.out == b.out, args);
    CHECK_MESSAGE(t1.out == t4.out, args);
    CHECK(a.code == t1.code);
  }
}

TEST_CASE("derive writes a curve") {
  const std::string out = P("n.csv");
  const Run r = Cli("derive --fn " + P("power2.json") + " --vec " + P("vec.json") +
                    " --tgrid 1e-6:1:8 --out " + out);
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("t") == 0);
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 49);
}
