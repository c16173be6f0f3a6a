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

#include <sstream>

#include "support.hpp"
#include "weylruns/closed_forms.hpp"
#include "weylruns/errors.hpp"

using namespace weylruns;
using support::canon;
using support::frozen_value;
using support::key;

namespace {

oracle::Uni frozen_uni(const std::string& stem, int n) {
  oracle::Uni m;
  std::istringstream is(frozen_value(key(stem, n)));
  std::string tok;
  while (is >> tok) {
    auto colon = tok.find(':');
    m[std::stoi(tok.substr(0, colon))] = std::stoll(tok.substr(colon + 1));
  }
  return m;
}

UniPoly to_poly(const oracle::Uni& m) {
  UniPoly f;
  for (auto [e, c] : m) f.add_term(BigInt(c), e);
  return f;
}

std::int64_t frozen_int(const std::string& stem, int n) { return std::stoll(frozen_value(key(stem, n))); }

// Direct int64 evaluation of the odd/even moment identity.
bool moments_equal(const oracle::Uni& f, int k) {
  __int128 odd = 0, even = 0;
  for (auto [s, c] : f) {
    __int128 pw = 1;
    for (int i = 0; i < k; ++i) pw *= s;
    (s % 2 ? odd : even) += pw * c;
  }
  return odd == even;
}

struct FamilyStems {
  std::vector<std::string> stems;
  bool type_a;
};

FamilyStems stems(DivFamily f) {
  switch (f) {
    case DivFamily::R: return {{"A.R.all"}, true};
    case DivFamily::Rpm: return {{"A.R.plus", "A.R.minus"}, true};
    case DivFamily::RB: return {{"B.R.all"}, false};
    case DivFamily::RBgt: return {{"B.Rgt.all"}, false};
    case DivFamily::RBpm: return {{"B.R.plus", "B.R.minus"}, false};
    case DivFamily::RD: return {{"D.R.all"}, false};
    case DivFamily::RBmD: return {{"BmD.R.all"}, false};
    case DivFamily::RDpm: return {{"D.R.plus", "D.R.minus"}, false};
    case DivFamily::RBmDpm: return {{"BmD.R.plus", "BmD.R.minus"}, false};
  }
  return {};
}

FamilyStems stems(MomentFamily f) {
  switch (f) {
    case MomentFamily::R: return {{"A.R.all"}, true};
    case MomentFamily::Rpm: return {{"A.R.plus", "A.R.minus"}, true};
    case MomentFamily::RB: return {{"B.R.all"}, false};
    case MomentFamily::RBgt: return {{"B.Rgt.all"}, false};
    case MomentFamily::RBpm: return {{"B.R.plus", "B.R.minus"}, false};
    case MomentFamily::RD: return {{"D.R.all"}, false};
    case MomentFamily::RDgt: return {{"D.Rgt.all"}, false};
    case MomentFamily::RBmDgt: return {{"BmD.Rgt.all"}, false};
    case MomentFamily::RDpm: return {{"D.R.plus", "D.R.minus"}, false};
  }
  return {};
}

}  // namespace

TEST_CASE("signed bivariate sum over S_n") {
  for (int n = 1; n <= frozen::kMaxA; ++n) {
    INFO("n = ", n);
    CHECK(canon(thm_sgn_altrun_biv(n)) == frozen_value(key("A.sgn", n)));
    if (n % 4 == 2 || n % 4 == 3) CHECK(thm_sgn_altrun_biv(n).is_zero());
    CHECK(canon(cor_sgn_altrun_uni(n)) == frozen_value(key("A.sgnuni", n)));
  }
  CHECK(thm_sgn_altrun_biv(1) == BiPoly::constant(1));
  CHECK(cor_sgn_altrun_uni(1) == UniPoly::t());
  CHECK_THROWS_AS(thm_sgn_altrun_biv(0), DomainError);
}

TEST_CASE("class formulas and the recurrence") {
  const std::pair<EndClass, const char*> classes[] = {{kAA, "aa"}, {kAD, "ad"}, {kDA, "da"}, {kDD, "dd"}};
  CHECK_FALSE(thm_class_in_range(1));
  for (int n = 2; n <= frozen::kMaxA; ++n) {
    for (auto [cls, name] : classes) {
      INFO("n = ", n, " class ", name);
      const std::string want = frozen_value(key(std::string("A.class.") + name, n));
      CHECK(canon(recurrence_class_biv(n, cls)) == want);
      if (thm_class_in_range(n)) CHECK(canon(thm_class_biv(n, cls)) == want);
    }
  }
  CHECK_THROWS_AS(recurrence_class_biv(1, kAA), DomainError);
}

TEST_CASE("explicit R^+/- coefficients") {
  for (int n = 2; n <= frozen::kMaxA; ++n) {
    auto r = frozen_uni("A.R.all", n);
    auto plus = frozen_uni("A.R.plus", n);
    auto minus = frozen_uni("A.R.minus", n);
    for (int l = 1; l <= n - 1; ++l) {
      INFO("n = ", n, " l = ", l);
      CHECK(r_pm_coeff(BigInt(r[l]), n, l, true) == plus[l]);
      CHECK(r_pm_coeff(BigInt(r[l]), n, l, false) == minus[l]);
      CHECK(g_coeff(n, l) == plus[l] - minus[l]);
    }
  }
  CHECK_THROWS_AS(g_coeff(1, 1), DomainError);
  CHECK_THROWS_AS(g_coeff(5, 5), DomainError);
  CHECK_THROWS_AS(r_pm_coeff(BigInt(3), 4, 1, true), IntegrityError);
}

TEST_CASE("type B and D closed forms") {
  for (int n = 1; n <= frozen::kMaxBD; ++n) {
    INFO("n = ", n);
    EndTriple b = thm_b_formulas(n);
    CHECK(canon(b.end_a) == frozen_value(key("B.sgn.a", n)));
    CHECK(canon(b.end_d) == frozen_value(key("B.sgn.d", n)));
    CHECK(canon(b.total) == frozen_value(key("B.sgn", n)));
    CHECK(canon(cor_b_uni(n)) == frozen_value(key("B.sgnuni", n)));
    EndTriple d = thm_d_formulas(n);
    CHECK(canon(d.end_a) == frozen_value(key("D.sgn.a", n)));
    CHECK(canon(d.end_d) == frozen_value(key("D.sgn.d", n)));
    CHECK(canon(d.total) == frozen_value(key("D.sgn", n)));
    CHECK(canon(cor_d_uni(n)) == frozen_value(key("D.sgnuni", n)));
  }
  CHECK(thm_b_formulas(1).end_a == BiPoly::constant(1));
  CHECK(thm_b_formulas(1).end_d == BiPoly::constant(-1));
}

TEST_CASE("differences between D_n and B_n - D_n") {
  for (int n = 1; n <= frozen::kMaxBD; ++n) {
    INFO("n = ", n);
    GaoSun g = gao_sun_differences(n);
    CHECK(g.first_positive_diff == to_poly(frozen_uni("D.Rgt.all", n)) - to_poly(frozen_uni("BmD.Rgt.all", n)));
    CHECK(g.total_diff == to_poly(frozen_uni("D.R.all", n)) - to_poly(frozen_uni("BmD.R.all", n)));
    CHECK(frozen_uni("B.R.plus", n) == frozen_uni("D.R.all", n));
    CHECK(frozen_uni("B.R.minus", n) == frozen_uni("BmD.R.all", n));
  }
}

TEST_CASE("divisibility claims hold for every family within the caps") {
  int checked = 0;
  for (DivFamily f : kAllDivFamilies) {
    FamilyStems fs = stems(f);
    int n_max = fs.type_a ? frozen::kMaxA : frozen::kMaxBD;
    for (int n = 1; n <= n_max; ++n) {
      if (!divisibility_in_range(f, n)) {
        CHECK_THROWS_AS(divisibility_claim(f, n), DomainError);
        continue;
      }
      int claim = divisibility_claim(f, n);
      for (const auto& s : fs.stems) {
        auto poly = frozen_uni(s, n);
        if (poly.empty()) continue;
        INFO(div_family_name(f), " ", s, " n = ", n);
        CHECK(oracle::one_plus_t_mult(poly) >= claim);
        CHECK(one_plus_t_multiplicity(to_poly(poly)) == oracle::one_plus_t_mult(poly));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("R^+/- multiplicity is exactly m-1 at n = 4, 5, 8") {
  for (int n : {4, 5, 8}) {
    int m = divisibility_claim(DivFamily::R, n);
    CHECK(oracle::one_plus_t_mult(frozen_uni("A.R.plus", n)) == m - 1);
    CHECK(oracle::one_plus_t_mult(frozen_uni("A.R.minus", n)) == m - 1);
  }
}

TEST_CASE("moment identities within the stated ranges") {
  int checked = 0;
  for (MomentFamily f : kAllMomentFamilies) {
    FamilyStems fs = stems(f);
    int n_max = fs.type_a ? frozen::kMaxA : frozen::kMaxBD;
    for (int n = 1; n <= n_max; ++n)
      for (int k = 1; 2 * k + 3 <= n; ++k) {
        if (!moment_in_range(f, n, k)) continue;
        for (const auto& s : fs.stems) {
          INFO(moment_family_name(f), " ", s, " n = ", n, " k = ", k);
          auto poly = frozen_uni(s, n);
          CHECK(moments_equal(poly, k));
          CHECK(moment_check(to_poly(poly), k));
          ++checked;
        }
      }
  }
  CHECK(checked > 20);
  CHECK_FALSE(moment_in_range(MomentFamily::R, 5, 1));
  CHECK(moment_in_range(MomentFamily::R, 6, 1));
  CHECK_FALSE(moment_in_range(MomentFamily::Rpm, 9, 2));
  CHECK(moment_in_range(MomentFamily::Rpm, 7, 1));
  CHECK(moment_in_range(MomentFamily::Rpm, 8, 1));
  CHECK(moment_in_range(MomentFamily::Rpm, 6, 1));
  CHECK(moment_in_range(MomentFamily::RB, 5, 1));
}

TEST_CASE("alternating and snake difference tables") {
  for (int n = 1; n <= frozen::kMaxA; ++n)
    CHECK(alt_difference_a(n) == frozen_int("A.E.plus", n) - frozen_int("A.E.minus", n));
  CHECK(alt_difference_a(0) == 1);
  for (int n = 1; n <= frozen::kMaxBD; ++n) {
    INFO("n = ", n);
    CHECK(snake_difference(n) == frozen_int("B.S.plus", n) - frozen_int("B.S.minus", n));
    CHECK(snake_difference(n) == frozen_int("D.S.plus", n) - frozen_int("D.S.minus", n));
    CHECK(snake_difference(n) == frozen_int("D.S.all", n) - frozen_int("BmD.S.all", n));
    CHECK(frozen_int("BmD.S.plus", n) == frozen_int("BmD.S.minus", n));
  }
}
