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

#include <json.hpp>
#include <set>

#include "weylruns/errors.hpp"
#include "weylruns/verify.hpp"

using namespace weylruns;

namespace {

Engine& engine() {
  static Engine e;
  return e;
}

}  // namespace

TEST_CASE("identity ids are unique and titled") {
  const auto& ids = theorem_ids();
  CHECK(ids.size() >= 40);
  std::set<std::string> seen(ids.begin(), ids.end());
  CHECK(seen.size() == ids.size());
  for (const char* id : {"thm-sgn-altrun", "lem-moment", "thm-b-main", "thm-snakes-d-egf", "wilf", "inv-maps"})
    CHECK(is_theorem_id(id));
  CHECK_FALSE(is_theorem_id("nonsense"));
  CHECK_FALSE(is_theorem_id("all"));
  for (const auto& id : ids) CHECK_FALSE(theorem_title(id).empty());
  CHECK_THROWS_AS(theorem_title("nonsense"), DomainError);
}

TEST_CASE("bad requests are rejected") {
  CHECK_THROWS_AS(verify(engine(), "nonsense", 1, 3), DomainError);
  CHECK_THROWS_AS(verify(engine(), "wilf", 0, 3), DomainError);
  CHECK_THROWS_AS(verify(engine(), "wilf", 5, 4), DomainError);
  CHECK_THROWS_AS(verify(engine(), "thm-b-main", 1, kDefaultCapBD + 1), DomainError);
}

TEST_CASE("every identity passes for n <= 6") {
  Report r = verify(engine(), "all", 1, 6);
  CHECK(r.passed());
  CHECK(r.theorems.size() == theorem_ids().size());
  for (const auto& t : r.theorems) {
    INFO(t.id);
    CHECK(t.lines.size() == 6);
    for (const auto& l : t.lines) CHECK(l.status != Status::fail);
  }
}

TEST_CASE("lines past a cap are skipped in the all run") {
  Engine small(1);
  small.set_caps(5, 4);
  Report r = verify(small, "all", 4, 5);
  bool saw_skip = false;
  for (const auto& t : r.theorems)
    for (const auto& l : t.lines)
      if (l.n == 5 && l.status == Status::skip && l.detail == "beyond the enumeration cap") saw_skip = true;
  CHECK(saw_skip);
  CHECK(r.passed());
}

TEST_CASE("the (B-D)+/- alternating EGF reports its mismatch without failing") {
  Report r = verify(engine(), "thm-alt-bmd-egf", 1, 6);
  CHECK(r.passed());
  for (const auto& l : r.theorems.at(0).lines) {
    CHECK(l.status == Status::mismatch_documented);
    CHECK(l.detail.find("oracle") != std::string::npos);
    CHECK(l.detail.find("printed") != std::string::npos);
  }
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["theorems"][0]["lines"][0]["status"] == "formula-mismatch-documented");
  CHECK(j["passed"] == true);
}

TEST_CASE("wilf prints multiplicities") {
  Report r = verify(engine(), "wilf", 4, 10);
  REQUIRE(r.passed());
  const auto& lines = r.theorems.at(0).lines;
  CHECK(lines.front().detail.find("mult 1") != std::string::npos);
  CHECK(lines.at(4).detail.find("mult 3") != std::string::npos);  // n = 8
}

TEST_CASE("golden tables line") {
  Report r = verify(engine(), "golden-tables", 4, 8);
  const auto& lines = r.theorems.at(0).lines;
  CHECK(lines.at(0).status == Status::pass);
  CHECK(lines.at(1).status == Status::pass);
  CHECK(lines.at(2).status == Status::skip);
  CHECK(lines.at(4).status == Status::pass);
}

TEST_CASE("renderings") {
  Report r = verify(engine(), "thm-sgn-altrun", 1, 3);
  std::string text = render_text(r);
  CHECK(text.find("thm-sgn-altrun n=1 oracle-supplied") != std::string::npos);
  CHECK(text.find("thm-sgn-altrun n=2 pass") != std::string::npos);
  CHECK(text.find("PASS: 1 theorem(s), 0 failing line(s)\n") != std::string::npos);
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["n_min"] == 1);
  CHECK(j["n_max"] == 3);
  CHECK(j["theorems"][0]["id"] == "thm-sgn-altrun");
  CHECK(j["theorems"][0]["lines"].size() == 3);
  CHECK(status_name(Status::fail) == "fail");
}
