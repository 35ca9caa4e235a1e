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
#include "orlicz/weighted_vector.hpp"

using namespace orlicz;
using oracle::Dec;

TEST_CASE("modular examples") {
  const auto m = OrliczFunction::Power(2);
  CHECK(Modular(m, WeightedVector::FromPairs({{0.5, 4}})).value() == doctest::Approx(1.0));
  CHECK(Modular(m, WeightedVector()).is_zero());
  CHECK(Modular(OrliczFunction::ReferenceSupPower(), WeightedVector()).is_zero());
}

TEST_CASE("modular on suppower matches a 50-digit direct sum") {
  const auto m = OrliczFunction::ReferenceSupPower();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ex(-30, 0);
  std::uniform_int_distribution<std::uint64_t> mult(1, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<double, std::uint64_t>> pairs;
    for (int i = 0; i < 20; ++i) pairs.push_back({std::pow(10.0, ex(rng)), mult(rng)});
    const WeightedVector x = WeightedVector::FromPairs(pairs);
    Dec want = 0;
    for (const auto& [v, c] : pairs) want += Dec(c) * oracle::M(m, v);
    CHECK(oracle::LogRelErr(Modular(m, x).log(), want) <= 1e-13);
  }
}

TEST_CASE("norm examples") {
  CHECK(LuxembourgNorm(OrliczFunction::Power(2, 10.0), WeightedVector::FromPairs({{3, 1}, {4, 1}})) ==
        doctest::Approx(5).epsilon(1e-12));
  for (double t : {1.0, 0.5, 1e-3, 1e-20}) {
    CHECK(LuxembourgNorm(OrliczFunction::Power(3), WeightedVector::FromPairs({{t, 1}})) ==
          doctest::Approx(t).epsilon(1e-12));
  }
  CHECK(LuxembourgNorm(OrliczFunction::Power(2), WeightedVector()) == 0.0);
}

TEST_CASE("norm below max|x|/t_max is a range error") {
  // M(1) = 0.73 < 1 so a single coordinate never reaches modular 1.
  const auto m = OrliczFunction::ReferenceSupPower();
  bool thrown = false;
  try {
    LuxembourgNorm(m, WeightedVector::FromPairs({{0.3, 1}}));
  } catch (const Error& e) {
    thrown = e.kind() == "range";
  }
  CHECK(thrown);
}

TEST_CASE("norm on suppower matches a monotone scan of sigma(x/lambda)") {
  // Three nested scans of 100 log-spaced lambdas each (10^6 equivalent
  // resolution), all in 50-digit arithmetic.
  const auto m = OrliczFunction::ReferenceSupPower();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const WeightedVector x = testutil::RandomVector(m, rng, 6);
    const double got = LuxembourgNorm(m, x);
    Dec lo = Dec(x.max_abs() / m.t_max()), hi = lo * 1e4;
    for (int stage = 0; stage < 3; ++stage) {
      const Dec ratio = pow(hi / lo, Dec(1) / 100);
      Dec lam = lo;
      for (int i = 0; i < 100; ++i) {
        const Dec next = lam * ratio;
        if (oracle::Modular(m, x, 1 / next) <= 1) {
          lo = lam;
          hi = next;
          break;
        }
        lam = next;
      }
    }
    INFO("norm " << got << " scan [" << lo << ", " << hi << "]");
    CHECK(Dec(got) >= lo * (1 - 1e-12));
    CHECK(Dec(got) <= hi * (1 + 1e-12));
  }
}

TEST_CASE("scale examples") {
  const WeightedVector a = Scale(WeightedVector::FromPairs({{1, 2}}), 0.5);
  REQUIRE(a.entries().size() == 1);
  CHECK(a.entries()[0].value == 0.5);
  CHECK(a.entries()[0].count.value() == 2);
  CHECK(Scale(WeightedVector(), 7).is_zero());
  CHECK(Scale(WeightedVector::FromPairs({{1, 2}}), 0).is_zero());
  const WeightedVector b = Scale(WeightedVector::FromPairs({{0.3, 1}, {0.1, 5}}), -2);
  REQUIRE(b.entries().size() == 2);
  CHECK(b.entries()[0].value == doctest::Approx(0.6));
  CHECK(b.entries()[0].count.value() == 1);
  CHECK(b.entries()[1].value == doctest::Approx(0.2));
  CHECK(b.entries()[1].count.value() == 5);
}

TEST_CASE("canonical form merges and sorts") {
  const WeightedVector x = WeightedVector::FromPairs({{-0.2, 1}, {0.5, 2}, {0.2, 3}, {0.0, 9}});
  REQUIRE(x.entries().size() == 2);
  CHECK(x.entries()[0].value == 0.5);
  CHECK(x.entries()[1].value == 0.2);
  CHECK(x.entries()[1].count.value() == 4);
}

TEST_CASE("huge multiplicities stay in log form") {
  const Count big = Count::FromLog(500.0L, 1e-200);
  CHECK_FALSE(big.exact());
  const Count sum = big + Count::Exact(3);
  CHECK_FALSE(sum.exact());
  CHECK(static_cast<double>(sum.log()) == doctest::Approx(500.0));
  const Count edge = Count::Exact(Count::kExactLimit) + Count::Exact(1);
  CHECK_FALSE(edge.exact());
  CHECK(Count::FromLog(std::log(12.0L)).exact());
  CHECK(Count::FromLog(std::log(12.0L)).value() == 12);
  const auto m = OrliczFunction::Power(2);
  const WeightedVector x({{1e-100, big}});
  CHECK(static_cast<double>(Modular(m, x).log()) ==
        doctest::Approx(500.0 + 2 * std::log(1e-100)).epsilon(1e-15));
}

TEST_CASE("norm attains modular one and is homogeneous") {
  std::mt19937_64 rng(11);
  for (const auto& m : testutil::FamilyZoo()) {
    for (int trial = 0; trial < 20; ++trial) {
      const WeightedVector x = testutil::RandomVector(m, rng);
      const double n = LuxembourgNorm(m, x);
      INFO(m.family());
      CHECK(std::fabs(Modular(m, Scale(x, 1 / n)).value() - 1) <= 1e-10);
      for (double c : {0.1, 0.5}) {
        CHECK(LuxembourgNorm(m, Scale(x, c)) == doctest::Approx(c * n).epsilon(1e-11));
      }
    }
  }
  // Growing by 2 and 10 needs room above t_max.
  const auto wide = OrliczFunction::Power(2.5, 100.0);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedVector x = testutil::RandomVector(wide, rng);
    const double n = LuxembourgNorm(wide, x);
    for (double c : {2.0, 10.0}) {
      CHECK(LuxembourgNorm(wide, Scale(x, c)) == doctest::Approx(c * n).epsilon(1e-11));
    }
  }
}

TEST_CASE("splitting a multiplicity into unit entries changes nothing") {
  std::mt19937_64 rng(3);
  const auto m = OrliczFunction::ReferenceSupPower();
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedVector x = testutil::RandomVector(m, rng, 4);
    // Split into unit entries, each nudged by one ulp so they stay distinct.
    std::vector<Entry> split;
    for (const Entry& e : x.entries()) {
      REQUIRE(e.count.exact());
      double v = e.value;
      for (std::uint64_t i = 0; i < e.count.value(); ++i) {
        split.push_back({v, Count::Exact(1)});
        v = std::nextafter(v, 0.0);
      }
    }
    const WeightedVector y(split);
    CHECK(y.entries().size() > x.entries().size() - 1);
    CHECK(Modular(m, y).value() == doctest::Approx(Modular(m, x).value()).epsilon(1e-12));
    CHECK(LuxembourgNorm(m, y) == doctest::Approx(LuxembourgNorm(m, x)).epsilon(1e-11));
  }
}

TEST_CASE("norm-modular equivalence on random vectors") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> theta(0.5, 1.0);
  int checked = 0;
  for (const auto& m : testutil::FamilyZoo()) {
    for (int trial = 0; trial < 10; ++trial) {
      const WeightedVector x = testutil::RandomVector(m, rng);
      const double n = LuxembourgNorm(m, x);
      for (int i = 1; i <= 10; ++i) {
        for (double eps : {1.0, 0.1, 0.01}) {
          // Put x exactly on, and strictly inside, the sphere of radius eps/i.
          for (double th : {1.0, theta(rng)}) {
            const WeightedVector y = Scale(x, th * eps / (i * n));
            REQUIRE(LuxembourgNorm(m, y) <= eps / i * (1 + 1e-11));
            CHECK(Modular(m, Scale(y, i)).value() <= eps * (1 + 1e-10));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked == 5 * 10 * 10 * 3 * 2);
}

TEST_CASE("decreasing a value decreases modular and norm") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> shrink(0.1, 1.0);
  for (const auto& m : testutil::FamilyZoo()) {
    for (int trial = 0; trial < 10; ++trial) {
      const WeightedVector x = testutil::RandomVector(m, rng);
      std::vector<Entry> e = x.entries();
      e.back().value *= shrink(rng);
      const WeightedVector y(e);
      CHECK(Modular(m, y).log() <= Modular(m, x).log());
      double ny = 0;
      try {
        ny = LuxembourgNorm(m, y);
      } catch (const Error& err) {
        // y may drop below the computable range; x itself was fine.
        CHECK(err.kind() == "range");
        continue;
      }
      CHECK(ny <= LuxembourgNorm(m, x) * (1 + 1e-12));
    }
  }
}

TEST_CASE("csv export") {
  std::ostringstream os;
  WriteVectorCsv(os, OrliczFunction::Power(2), WeightedVector::FromPairs({{0.5, 4}}));
  CHECK(os.str() == "value,multiplicity,M_value,contribution\n0.5,4,0.25,1\n");
}
