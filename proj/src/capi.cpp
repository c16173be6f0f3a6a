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

#include "weylruns/weylruns.h"

#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "weylruns/enumerate.hpp"
#include "weylruns/errors.hpp"
#include "weylruns/tables.hpp"
#include "weylruns/verify.hpp"

struct wr_context {
  weylruns::Engine engine;
  explicit wr_context(unsigned threads) : engine(threads) {}
};

struct wr_poly {
  weylruns::AnyPoly value;
};

struct wr_report {
  weylruns::Report value;
};

namespace {

thread_local std::string g_error;

template <class F>
wr_status guarded(F&& f) {
  try {
    g_error.clear();
    f();
    return WR_OK;
  } catch (const weylruns::DomainError& e) {
    g_error = e.what();
    return WR_ERR_DOMAIN;
  } catch (const weylruns::IntegrityError& e) {
    g_error = e.what();
    return WR_ERR_INTEGRITY;
  } catch (const std::exception& e) {
    g_error = e.what();
    return WR_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return WR_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw weylruns::DomainError(what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<weylruns::Dir> dir_of(int v) {
  require(v >= WR_UNSET && v <= WR_DESCENT, "end direction out of range");
  if (v == WR_UNSET) return std::nullopt;
  return v == WR_ASCENT ? weylruns::Dir::ascent : weylruns::Dir::descent;
}

weylruns::SignedDistributionRequest convert(const wr_dist_request& r) {
  using namespace weylruns;
  require(r.group >= WR_GROUP_A && r.group <= WR_GROUP_BMD, "group out of range");
  require(r.sign >= WR_SIGN_NONE && r.sign <= WR_SIGN_INV_D, "sign statistic out of range");
  require(r.parity >= WR_PARITY_ALL && r.parity <= WR_PARITY_MINUS, "parity out of range");
  require(r.first_sign >= WR_UNSET && r.first_sign <= WR_FIRST_NEGATIVE, "first-letter sign out of range");
  SignedDistributionRequest req;
  req.group = static_cast<Group>(r.group);
  req.n = r.n;
  req.sign = static_cast<SignStat>(r.sign);
  req.parity = static_cast<Parity>(r.parity);
  auto first = dir_of(r.end_first);
  auto last = dir_of(r.end_last);
  if (first || last) req.end = EndRestriction{first, last};
  if (r.first_sign != WR_UNSET)
    req.first_letter_sign = r.first_sign == WR_FIRST_POSITIVE ? FirstSign::positive : FirstSign::negative;
  return req;
}

}  // namespace

extern "C" {

const char* wr_version(void) { return "0.1.0"; }

const char* wr_last_error(void) { return g_error.c_str(); }

void wr_string_free(char* s) { std::free(s); }

void wr_dist_request_init(wr_dist_request* req) {
  if (!req) return;
  *req = wr_dist_request{WR_GROUP_A, 1, WR_SIGN_NONE, WR_UNSET, WR_UNSET, WR_UNSET, WR_PARITY_ALL, 0};
}

wr_status wr_context_new(unsigned threads, wr_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new wr_context(threads);
  });
}

void wr_context_free(wr_context* ctx) { delete ctx; }

wr_status wr_context_set_caps(wr_context* ctx, int cap_a, int cap_bd) {
  return guarded([&] {
    require(ctx != nullptr, "null context");
    ctx->engine.set_caps(cap_a ? cap_a : ctx->engine.cap_a(), cap_bd ? cap_bd : ctx->engine.cap_bd());
  });
}

wr_status wr_dist(wr_context* ctx, const wr_dist_request* req, wr_poly** out) {
  return guarded([&] {
    require(ctx && req && out, "null argument");
    auto r = convert(*req);
    auto p = std::make_unique<wr_poly>();
    if (req->bivariate)
      p->value = weylruns::dist_runs_pq(ctx->engine, r);
    else
      p->value = weylruns::dist_runs_t(ctx->engine, r);
    *out = p.release();
  });
}

wr_status wr_poly_render(const wr_poly* p, int format, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    std::string s = std::visit(
        [&](const auto& f) -> std::string {
          switch (format) {
            case WR_FORMAT_JSON: return weylruns::to_json(f);
            case WR_FORMAT_CSV: return weylruns::to_csv(f);
            case WR_FORMAT_LATEX: return weylruns::to_latex(f);
            case WR_FORMAT_TEXT: return weylruns::to_string(f);
          }
          throw weylruns::DomainError("unknown polynomial format");
        },
        p->value);
    *out = dup(s);
  });
}

wr_status wr_poly_parse_json(const char* text, wr_poly** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new wr_poly{weylruns::poly_from_json(text)};
  });
}

int wr_poly_equal(const wr_poly* a, const wr_poly* b) { return a && b && a->value == b->value; }

void wr_poly_free(wr_poly* p) { delete p; }

int wr_theorem_count(void) { return static_cast<int>(weylruns::theorem_ids().size()); }

const char* wr_theorem_id(int i) {
  const auto& ids = weylruns::theorem_ids();
  if (i < 0 || i >= static_cast<int>(ids.size())) return nullptr;
  return ids[i].c_str();
}

int wr_is_theorem_id(const char* id) { return id && weylruns::is_theorem_id(id); }

wr_status wr_verify(wr_context* ctx, const char* id, int n_min, int n_max, wr_report** out) {
  return guarded([&] {
    require(ctx && id && out, "null argument");
    *out = new wr_report{weylruns::verify(ctx->engine, id, n_min, n_max)};
  });
}

wr_status wr_report_render(const wr_report* r, int format, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(format == WR_FORMAT_TEXT || format == WR_FORMAT_JSON, "reports render as text or JSON");
    *out = dup(format == WR_FORMAT_TEXT ? weylruns::render_text(r->value) : weylruns::render_json(r->value));
  });
}

int wr_report_passed(const wr_report* r) { return r && r->value.passed(); }

void wr_report_free(wr_report* r) { delete r; }

wr_status wr_table(wr_context* ctx, const char* family, int n_min, int n_max, int format, char** out) {
  return guarded([&] {
    require(ctx && family && out, "null argument");
    auto f = weylruns::parse_table_family(family);
    require(f.has_value(), "unknown table family");
    require(format == WR_FORMAT_CSV || format == WR_FORMAT_JSON, "tables render as CSV or JSON");
    *out = dup(weylruns::render_table(ctx->engine, *f, n_min, n_max,
                                      format == WR_FORMAT_CSV ? weylruns::TableFormat::csv
                                                              : weylruns::TableFormat::json));
  });
}

}  // extern "C"
