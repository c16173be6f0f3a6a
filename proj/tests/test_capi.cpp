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

#include <memory>
#include <string>

#include "weylruns/weylruns.h"

namespace {

struct Ctx {
  wr_context* p = nullptr;
  explicit Ctx(unsigned threads = 0) { REQUIRE(wr_context_new(threads, &p) == WR_OK); }
  ~Ctx() { wr_context_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  wr_string_free(s);
  return out;
}

std::string render(const wr_poly* p, int format) {
  char* s = nullptr;
  REQUIRE(wr_poly_render(p, format, &s) == WR_OK);
  return take(s);
}

wr_poly* dist(wr_context* ctx, const wr_dist_request& req) {
  wr_poly* p = nullptr;
  wr_status s = wr_dist(ctx, &req, &p);
  REQUIRE_MESSAGE(s == WR_OK, wr_last_error());
  return p;
}

}  // namespace

TEST_CASE("distribution through the C API") {
  Ctx c;
  wr_dist_request req;
  wr_dist_request_init(&req);
  req.n = 4;
  wr_poly* p = dist(c.p, req);
  CHECK(render(p, WR_FORMAT_JSON) ==
        R"({"vars":["t"],"terms":[{"exp":[1],"coef":"2"},{"exp":[2],"coef":"12"},{"exp":[3],"coef":"10"}]})");
  CHECK(render(p, WR_FORMAT_TEXT) == "2t + 12t^2 + 10t^3");
  wr_poly_free(p);

  req.sign = WR_SIGN_INV_A;
  req.bivariate = 1;
  p = dist(c.p, req);
  CHECK(render(p, WR_FORMAT_TEXT) == "2 - 2q - 2p + 2pq");
  wr_poly_free(p);

  wr_dist_request_init(&req);
  req.group = WR_GROUP_B;
  req.n = 1;
  req.sign = WR_SIGN_INV_B;
  req.bivariate = 1;
  req.end_last = WR_DESCENT;
  p = dist(c.p, req);
  CHECK(render(p, WR_FORMAT_TEXT) == "-1");
  wr_poly_free(p);
}

TEST_CASE("errors carry a status and a message") {
  Ctx c;
  wr_dist_request req;
  wr_dist_request_init(&req);
  req.group = WR_GROUP_B;
  req.n = 0;
  wr_poly* p = nullptr;
  CHECK(wr_dist(c.p, &req, &p) == WR_ERR_DOMAIN);
  CHECK(p == nullptr);
  CHECK(std::string(wr_last_error()).size() > 0);
  req.n = 3;
  req.group = 17;
  CHECK(wr_dist(c.p, &req, &p) == WR_ERR_DOMAIN);
  req.group = WR_GROUP_A;
  req.sign = WR_SIGN_INV_B;
  CHECK(wr_dist(c.p, &req, &p) == WR_ERR_DOMAIN);
  CHECK(wr_dist(nullptr, &req, &p) == WR_ERR_DOMAIN);
  wr_dist_request_init(&req);
  p = dist(c.p, req);
  CHECK(std::string(wr_last_error()).empty());
  char* s = nullptr;
  CHECK(wr_poly_render(p, 99, &s) == WR_ERR_DOMAIN);
  wr_poly_free(p);
  CHECK(wr_context_new(0, nullptr) == WR_ERR_DOMAIN);
  CHECK(wr_context_set_caps(c.p, 99, 0) == WR_ERR_DOMAIN);
}

TEST_CASE("JSON round trip through handles") {
  Ctx c;
  wr_dist_request req;
  wr_dist_request_init(&req);
  req.group = WR_GROUP_D;
  req.n = 6;
  req.sign = WR_SIGN_INV_D;
  req.bivariate = 1;
  wr_poly* p = dist(c.p, req);
  std::string json = render(p, WR_FORMAT_JSON);
  wr_poly* q = nullptr;
  REQUIRE(wr_poly_parse_json(json.c_str(), &q) == WR_OK);
  CHECK(wr_poly_equal(p, q));
  wr_poly_free(q);
  CHECK(wr_poly_parse_json("{", &q) == WR_ERR_DOMAIN);
  wr_poly_free(p);
}

TEST_CASE("caps") {
  Ctx c;
  wr_dist_request req;
  wr_dist_request_init(&req);
  req.n = 6;
  REQUIRE(wr_context_set_caps(c.p, 5, 0) == WR_OK);
  wr_poly* p = nullptr;
  CHECK(wr_dist(c.p, &req, &p) == WR_ERR_DOMAIN);
  REQUIRE(wr_context_set_caps(c.p, 6, 0) == WR_OK);
  CHECK(wr_dist(c.p, &req, &p) == WR_OK);
  wr_poly_free(p);
}

TEST_CASE("verification reports") {
  Ctx c;
  CHECK(wr_theorem_count() >= 40);
  CHECK(std::string(wr_theorem_id(0)).size() > 0);
  CHECK(wr_theorem_id(-1) == nullptr);
  CHECK(wr_theorem_id(wr_theorem_count()) == nullptr);
  CHECK(wr_is_theorem_id("wilf"));
  CHECK_FALSE(wr_is_theorem_id("nonsense"));
  wr_report* r = nullptr;
  REQUIRE(wr_verify(c.p, "wilf", 4, 8, &r) == WR_OK);
  CHECK(wr_report_passed(r));
  char* s = nullptr;
  REQUIRE(wr_report_render(r, WR_FORMAT_TEXT, &s) == WR_OK);
  CHECK(take(s).find("wilf n=8 pass") != std::string::npos);
  REQUIRE(wr_report_render(r, WR_FORMAT_JSON, &s) == WR_OK);
  CHECK(take(s).find("\"passed\": true") != std::string::npos);
  CHECK(wr_report_render(r, WR_FORMAT_CSV, &s) == WR_ERR_DOMAIN);
  wr_report_free(r);
  CHECK(wr_verify(c.p, "nonsense", 1, 3, &r) == WR_ERR_DOMAIN);
}

TEST_CASE("tables") {
  Ctx c;
  char* s = nullptr;
  REQUIRE(wr_table(c.p, "S", 1, 3, WR_FORMAT_CSV, &s) == WR_OK);
  CHECK(take(s) == "n,count\n1,1\n2,3\n3,11\n");
  CHECK(wr_table(c.p, "Q", 1, 3, WR_FORMAT_CSV, &s) == WR_ERR_DOMAIN);
  CHECK(wr_table(c.p, "S", 1, 3, WR_FORMAT_LATEX, &s) == WR_ERR_DOMAIN);
  CHECK(std::string(wr_version()) == "0.1.0");
}
