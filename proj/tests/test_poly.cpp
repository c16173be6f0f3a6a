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

#include "weylruns/errors.hpp"
#include "weylruns/poly.hpp"

using namespace weylruns;

TEST_CASE("univariate arithmetic") {
  UniPoly a{1, 1};
  UniPoly b{1, -1};
  CHECK(a * b == UniPoly{1, 0, -1});
  CHECK(a + b == UniPoly{2});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == kZeroDegree);
  CHECK(pow(a, 3) == UniPoly{1, 3, 3, 1});
  CHECK(pow(a, 0) == UniPoly{1});
  CHECK(-a == UniPoly{-1, -1});
  CHECK(eval_int(UniPoly{0, 2, 12, 10}, 1) == 24);
  CHECK(UniPoly{0, 0, 0} == UniPoly{});
}

TEST_CASE("bivariate arithmetic and substitution") {
  BiPoly p = BiPoly::p(), q = BiPoly::q();
  BiPoly one = BiPoly::constant(1);
  BiPoly f = (one - p) * (one - q);
  CHECK(f.coeff(1, 1) == 1);
  CHECK(f.coeff(1, 0) == -1);
  CHECK(f.swapped() == f);
  CHECK((p * p * q).swapped() == p * q * q);
  CHECK(substitute_diag(f) == UniPoly{1, -2, 1});
  CHECK(pow(one + p * q, 2) == one + BiPoly::term(2, 1, 1) + BiPoly::term(1, 2, 2));
  CHECK((f - f).is_zero());
}

TEST_CASE("big coefficients stay exact") {
  UniPoly f = pow(UniPoly{1, 1}, 80);
  CHECK(f.coeff(40) == BigInt("107507208733336176461620"));
  CHECK(eval_int(f, 1) == pow(BigInt(2), 80));
}

TEST_CASE("(1+t)-multiplicity") {
  CHECK(one_plus_t_multiplicity(UniPoly{1}) == 0);
  CHECK(one_plus_t_multiplicity(UniPoly{1, 1}) == 1);
  CHECK(one_plus_t_multiplicity(pow(UniPoly{1, 1}, 5) * UniPoly{2, 7}) == 5);
  CHECK(one_plus_t_multiplicity(UniPoly{0, 2, 12, 10}) == 1);
  CHECK(one_plus_t_multiplicity(UniPoly{0, 2, 252, 2766, 9576, 14622, 10332, 2770}) == 3);
  CHECK(one_plus_t_multiplicity(UniPoly{0, 2, 124, 1382, 4792, 7310, 5164, 1386}) == 2);
  CHECK_THROWS_AS(one_plus_t_multiplicity(UniPoly{}), DomainError);
}

TEST_CASE("moment identity") {
  // t (1+t)^m g has matching odd/even moments for k < m.
  UniPoly f = UniPoly::t() * pow(UniPoly{1, 1}, 4) * UniPoly{3, 1, 5};
  for (int k = 0; k < 4; ++k) CHECK(moment_check(f, k));
  CHECK_FALSE(moment_check(f, 4));
  // Even s starts at 2, so a constant term breaks k = 0.
  CHECK_FALSE(moment_check(UniPoly{1, 1}, 0));
  CHECK_FALSE(moment_check(UniPoly{0, 1, 1}, 1));
}

TEST_CASE("JSON form: sorted terms and decimal string coefficients") {
  CHECK(to_json(UniPoly{0, 2, 12, 10}) ==
        R"({"vars":["t"],"terms":[{"exp":[1],"coef":"2"},{"exp":[2],"coef":"12"},{"exp":[3],"coef":"10"}]})");
  BiPoly g = BiPoly::constant(2) - BiPoly::term(2, 1, 0) - BiPoly::term(2, 0, 1) + BiPoly::term(2, 1, 1);
  CHECK(to_json(g) ==
        R"({"vars":["p","q"],"terms":[{"exp":[0,0],"coef":"2"},{"exp":[0,1],"coef":"-2"},)"
        R"({"exp":[1,0],"coef":"-2"},{"exp":[1,1],"coef":"2"}]})");
  CHECK(to_json(UniPoly{}) == R"({"vars":["t"],"terms":[]})");
}

TEST_CASE("JSON round trip") {
  UniPoly f = pow(UniPoly{1, -1}, 70);
  auto back = poly_from_json(to_json(f));
  REQUIRE(std::holds_alternative<UniPoly>(back));
  CHECK(std::get<UniPoly>(back) == f);
  BiPoly g = pow(BiPoly::constant(1) - BiPoly::p() * BiPoly::q(), 5) * BiPoly::q();
  auto back2 = poly_from_json(to_json(g));
  REQUIRE(std::holds_alternative<BiPoly>(back2));
  CHECK(std::get<BiPoly>(back2) == g);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(poly_from_json("nope"), DomainError);
  CHECK_THROWS_AS(poly_from_json(R"({"vars":["x"],"terms":[]})"), DomainError);
  CHECK_THROWS_AS(poly_from_json(R"({"vars":["t"],"terms":[{"exp":[1,2],"coef":"1"}]})"), DomainError);
  CHECK_THROWS_AS(poly_from_json(R"({"vars":["t"],"terms":[{"exp":[-1],"coef":"1"}]})"), DomainError);
  CHECK_THROWS_AS(poly_from_json(R"({"vars":["t"],"terms":[{"exp":[999999999],"coef":"1"}]})"), DomainError);
  CHECK_THROWS_AS(poly_from_json(R"({"vars":["t"],"terms":[{"exp":[1],"coef":"1.5"}]})"), DomainError);
}

TEST_CASE("CSV and LaTeX") {
  CHECK(to_csv(UniPoly{0, 2, 12, 10}) == "exp,coef\n1,2\n2,12\n3,10\n");
  CHECK(to_csv(BiPoly::term(-3, 1, 2)) == "exp_p,exp_q,coef\n1,2,-3\n");
  CHECK(to_latex(UniPoly{0, 2, 12, 10}) == "2t + 12t^{2} + 10t^{3}");
  CHECK(to_latex(UniPoly{0, -1, 1}) == "-t + t^{2}");
  CHECK(to_latex(UniPoly{}) == "0");
  CHECK(to_string(UniPoly{0, 2, 12, 10}) == "2t + 12t^2 + 10t^3");
}
