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

#include "weylruns/errors.hpp"
#include "weylruns/tables.hpp"

using namespace weylruns;

namespace {

Engine& engine() {
  static Engine e;
  return e;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (TableFamily f : all_table_families()) CHECK(parse_table_family(table_family_name(f)) == f);
  CHECK_FALSE(parse_table_family("Q").has_value());
}

TEST_CASE("count tables") {
  std::string e = render_table(engine(), TableFamily::E, 1, 8, TableFormat::csv);
  CHECK(e.rfind("n,count\n", 0) == 0);
  CHECK(e.find("\n4,5\n") != std::string::npos);
  CHECK(e.find("\n8,1385\n") != std::string::npos);
  std::string s = render_table(engine(), TableFamily::S, 1, 5, TableFormat::csv);
  CHECK(s == "n,count\n1,1\n2,3\n3,11\n4,57\n5,361\n");
}

TEST_CASE("polynomial tables") {
  std::string r = render_table(engine(), TableFamily::R, 4, 4, TableFormat::csv);
  CHECK(r == "n,k,coef\n4,1,2\n4,2,12\n4,3,10\n");
  std::string pm = render_table(engine(), TableFamily::Rpm, 4, 4, TableFormat::csv);
  CHECK(pm == "n,parity,k,coef\n4,plus,1,2\n4,plus,2,4\n4,plus,3,6\n4,minus,2,8\n4,minus,3,4\n");
  auto j = nlohmann::json::parse(render_table(engine(), TableFamily::RBpm, 1, 3, TableFormat::json));
  CHECK(j["family"] == "RBpm");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["plus"]["vars"][0] == "t");
}

TEST_CASE("empty range gives the header alone") {
  CHECK(render_table(engine(), TableFamily::E, 1, 0, TableFormat::csv) == "n,count\n");
  CHECK(render_table(engine(), TableFamily::RD, 1, 0, TableFormat::csv) == "n,k,coef\n");
  auto j = nlohmann::json::parse(render_table(engine(), TableFamily::S, 1, 0, TableFormat::json));
  CHECK(j["rows"].empty());
}

TEST_CASE("tables are deterministic and respect caps") {
  Engine one(1), many(8);
  for (TableFamily f : all_table_families()) {
    INFO(table_family_name(f));
    CHECK(render_table(one, f, 1, 6, TableFormat::json) == render_table(many, f, 1, 6, TableFormat::json));
  }
  CHECK_THROWS_AS(render_table(engine(), TableFamily::SD, 1, kDefaultCapBD + 1, TableFormat::csv), DomainError);
  CHECK_THROWS_AS(render_table(engine(), TableFamily::E, 0, 3, TableFormat::csv), DomainError);
}
