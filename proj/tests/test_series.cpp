// Copyright 2026 The weylruns Authors
//
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

#include "support.hpp"
#include "weylruns/errors.hpp"
#include "weylruns/series.hpp"

using namespace weylruns;

namespace {

BigInt frozen_count(const std::string& stem, int n) { return BigInt(support::frozen_value(support::key(stem, n))); }

}  // namespace

TEST_CASE("sin and cos coefficients") {
  Series s = Series::sin(8), c = Series::cos(8);
  CHECK(s[1] == 1);
  CHECK(s[3] == Rational(-1, 6));
  CHECK(c[0] == 1);
  CHECK(c[2] == Rational(-1, 2));
  CHECK(c[6] == Rational(-1, 720));
  Series id = s * s + c * c;
  CHECK(id == Series::constant(1, 8));
}

TEST_CASE("sec + tan gives the Euler zigzag numbers") {
  Series sec_tan = (Series::constant(1, 12) + Series::sin(12)) / Series::cos(12);
  const int euler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792};
  for (int n = 0; n < 12; ++n) CHECK(egf_coeff(sec_tan, n) == euler[n]);
}

TEST_CASE("division and argument scaling") {
  Series x = Series::x(6);
  Series one = Series::constant(1, 6);
  Series geo = one / (one - x);
  for (int i = 0; i < 6; ++i) CHECK(geo[i] == 1);
  CHECK_THROWS_AS(one / x, DomainError);
  CHECK(scale_arg(geo, 2)[3] == 8);
}

TEST_CASE("egf_coeff rejects non-integers and out-of-order requests") {
  Series half = Series::x(4) * Rational(1, 2);
  CHECK_THROWS_AS(egf_coeff(half, 1), IntegrityError);
  CHECK(egf_coeff(half, 0) == 0);
  CHECK_THROWS(egf_coeff(half, 4));
}

TEST_CASE("printed alternating EGFs match the brute-force counts") {
  struct Row {
    AltFamily f;
    const char* stem;
    int n_max;
  };
  const Row rows[] = {
      {AltFamily::A, "A.E.all", 10},       {AltFamily::Aplus, "A.E.plus", 10},   {AltFamily::Aminus, "A.E.minus", 10},
      {AltFamily::B, "B.E.all", 8},        {AltFamily::Bplus, "B.E.plus", 8},    {AltFamily::Bminus, "B.E.minus", 8},
      {AltFamily::D, "D.E.all", 8},        {AltFamily::BminusD, "BmD.E.all", 8}, {AltFamily::Dplus, "D.E.plus", 8},
      {AltFamily::Dminus, "D.E.minus", 8},
  };
  for (const Row& r : rows) {
    Series s = egf_alt(r.f, 12);
    for (int n = 1; n <= r.n_max; ++n) {
      INFO(family_name(r.f), " n = ", n);
      CHECK(egf_coeff(s, n) == frozen_count(r.stem, n));
    }
  }
}

TEST_CASE("printed snake EGFs match the brute-force counts") {
  struct Row {
    SnakeFamily f;
    const char* stem;
  };
  const Row rows[] = {
      {SnakeFamily::B, "B.S.all"},          {SnakeFamily::Bplus, "B.S.plus"},       {SnakeFamily::Bminus, "B.S.minus"},
      {SnakeFamily::D, "D.S.all"},          {SnakeFamily::BminusD, "BmD.S.all"},    {SnakeFamily::Dplus, "D.S.plus"},
      {SnakeFamily::Dminus, "D.S.minus"},   {SnakeFamily::BminusDplus, "BmD.S.plus"},
      {SnakeFamily::BminusDminus, "BmD.S.minus"},
  };
  for (const Row& r : rows) {
    Series s = egf_snakes(r.f, 12);
    for (int n = 1; n <= 8; ++n) {
      INFO(family_name(r.f), " n = ", n);
      CHECK(egf_coeff(s, n) == frozen_count(r.stem, n));
    }
  }
}

TEST_CASE("the printed (B-D)+/- alternating EGF is off; the refit matches") {
  for (bool plus : {true, false}) {
    Series printed = egf_alt(plus ? AltFamily::BminusDplus : AltFamily::BminusDminus, 12);
    Series refit = egf_alt_bminusd_refit(plus, 12);
    for (int n = 1; n <= 8; ++n) {
      BigInt oracle = frozen_count(plus ? "BmD.E.plus" : "BmD.E.minus", n);
      CHECK(egf_coeff(refit, n) == oracle);
      if (n == 1) {
        CHECK_THROWS_AS(egf_coeff(printed, n), IntegrityError);
      } else {
        CHECK(egf_coeff(printed, n) == 2 * oracle);
      }
    }
  }
}
