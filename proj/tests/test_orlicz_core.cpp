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

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/orlicz_function.hpp"

using namespace orlicz;

namespace {

std::string KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("power eval closed form") {
  const auto m = OrliczFunction::Power(2);
  CHECK(m.Eval(0.5).value() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(m.Eval(-0.5).value() == m.Eval(0.5).value());
  CHECK(m.Eval(0.0).is_zero());
  CHECK(OrliczFunction::ReferenceSupPower().Eval(0.0).is_zero());
}

TEST_CASE("eval outside t_max is a range error") {
  const auto m = OrliczFunction::Power(2);
  CHECK(KindOf([&] { m.Eval(1.5); }) == "range");
  CHECK(KindOf([&] { m.Eval(std::nan("")); }) == "range");
  CHECK(KindOf([&] { m.Eval(INFINITY); }) == "range");
  const auto wide = OrliczFunction::Power(2, 4.0);
  CHECK(wide.Eval(3.0).value() == doctest::Approx(9.0));
}

TEST_CASE("eval matches the 50-digit oracle for every family") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ex(-300, 0);
  for (const auto& m : testutil::FamilyZoo()) {
    double worst = 0;
    for (int i = 0; i < 400; ++i) {
      const double t = std::pow(10.0, ex(rng));
      worst = std::max(worst, oracle::LogRelErr(m.Eval(t).log(), oracle::M(m, t)));
    }
    INFO(m.family());
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("suppower at 1e-20 against direct max over pieces") {
  const auto m = OrliczFunction::ReferenceSupPower();
  CHECK(oracle::LogRelErr(m.Eval(1e-20).log(), oracle::M(m, 1e-20)) <= 1e-13);
  // Touches t^p at each anchor.
  for (int j = 1; j <= 5; ++j) {
    const double b = std::pow(10.0, -j * j);
    CHECK(oracle::LogRelErr(m.Eval(b).log(), oracle::Dec(b) * oracle::Dec(b)) <= 1e-13);
  }
}

TEST_CASE("ratio examples") {
  CHECK(Ratio(OrliczFunction::Power(3), 2, 0.1) == doctest::Approx(8).epsilon(1e-14));
  CHECK(Ratio(OrliczFunction::Power(1), 5, 1e-6) == doctest::Approx(5).epsilon(1e-14));
  const auto sp = OrliczFunction::ReferenceSupPower();
  // Just below the deepest anchor the steep piece (q = 40) is active.
  const double t = 0.5e-25;
  const oracle::Dec want = oracle::M(sp, 2 * t) / oracle::M(sp, t);
  CHECK(oracle::RelErr(Ratio(sp, 2, t), want) <= 1e-13);
  CHECK(Ratio(sp, 2, t) == doctest::Approx(std::pow(2.0, 40)).epsilon(1e-12));
  CHECK(KindOf([&] { Ratio(sp, 2, 0.6); }) == "range");
  CHECK(KindOf([&] { Ratio(sp, 1.0, 0.1); }) == "invalid-argument");
}

TEST_CASE("ratio is at least c on the grid") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> cdist(1.0 + 1e-9, 50.0);
  for (const auto& m : testutil::FamilyZoo()) {
    for (int i = 0; i < 1920; i += 7) {
      const double t = std::pow(10.0, -i / 64.0);
      const double c = cdist(rng);
      if (c * t > m.t_max()) continue;
      INFO(m.family() << " t=" << t << " c=" << c);
      CHECK(Ratio(m, c, t) >= c * (1 - 1e-12));
    }
  }
}

TEST_CASE("eval is bit-for-bit deterministic") {
  for (const auto& m : testutil::FamilyZoo()) {
    for (double t : {1e-29, 3.3e-7, 0.123, 1.0}) {
      const LogValue a = m.Eval(t), b = m.Eval(t);
      CHECK(a == b);
    }
  }
}

TEST_CASE("power log is p log t") {
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
    const auto m = OrliczFunction::Power(p);
    for (double t : {1e-300, 1e-30, 0.37, 1.0}) {
      const long double lt = std::log(static_cast<long double>(t));
      const long double got = m.Eval(t).log();
      CHECK(std::fabs(got - p * lt) <= 2 * std::numeric_limits<long double>::epsilon() *
                                           std::fabs(p * lt));
    }
  }
}

TEST_CASE("validation accepts the convex families") {
  CHECK(OrliczFunction::Power(1.5).Validate().passed);
  CHECK(OrliczFunction::PowerLog().Validate().passed);
  const ValidationReport r = OrliczFunction::ReferenceSupPower().Validate();
  CHECK(r.passed);
  CHECK(r.points >= 1920);
  CHECK(r.worst_convexity_margin <= 1e-12);
}

TEST_CASE("validation rejects a decreasing density") {
  const auto bad = OrliczFunction::Create(PiecewiseDerivativeParams{{0.5}, {2.0, 1.0}}, 1.0, 64,
                                          /*validate=*/false);
  const ValidationReport r = bad.Validate();
  CHECK_FALSE(r.passed);
  CHECK(r.worst_convexity_margin > 1e-12);
  REQUIRE(r.offending.size() >= 2);
  CHECK(r.offending.front() <= 0.5);
  CHECK(r.offending.back() >= 0.5);
  CHECK(KindOf([] { OrliczFunction::PiecewiseDerivative({0.5}, {2.0, 1.0}); }) ==
        "invalid-function");
}

TEST_CASE("parameter checks") {
  CHECK(KindOf([] { OrliczFunction::Power(0.5); }) == "invalid-function");
  CHECK(KindOf([] { OrliczFunction::PowerLog(0.2); }) == "invalid-function");
  CHECK(KindOf([] { OrliczFunction::SupPower(2, {1e-2, 1e-1}, {8, 8}); }) == "invalid-function");
  CHECK(KindOf([] { OrliczFunction::SupPower(2, {1e-1}, {1.5}); }) == "invalid-function");
  // Anchors too close: the steep piece of the outer anchor does not fall
  // below t^p in time.
  CHECK(KindOf([] { OrliczFunction::SupPower(2, {0.1, 0.09}, {3, 40}); }) == "invalid-function");
  CHECK(KindOf([] { OrliczFunction::PiecewiseDerivative({0.5}, {0.0, 1.0}); }) ==
        "invalid-function");
}

TEST_CASE("powerlog continuation is C1 at t0") {
  const auto m = OrliczFunction::PowerLog();
  const double below = m.Eval(0.1 * (1 - 1e-9)).value();
  const double at = m.Eval(0.1).value();
  const double above = m.Eval(0.1 * (1 + 1e-9)).value();
  CHECK((at - below) == doctest::Approx(above - at).epsilon(1e-5));
}
