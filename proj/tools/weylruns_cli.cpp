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

// weylruns command-line tool. Talks to the library only through weylruns.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "weylruns/weylruns.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

int exit_for(wr_status s) {
  switch (s) {
    case WR_OK: return kExitOk;
    case WR_ERR_DOMAIN: return kExitUsage;
    case WR_ERR_INTEGRITY: return kExitIntegrity;
    default: return kExitIntegrity;
  }
}

int report_error(wr_status s) {
  std::cerr << "weylruns: " << wr_last_error() << '\n';
  return exit_for(s);
}

struct Owned {
  char* s = nullptr;
  ~Owned() { wr_string_free(s); }
};

struct Context {
  wr_context* ctx = nullptr;
  ~Context() { wr_context_free(ctx); }
};

struct Common {
  unsigned threads = 0;
  int cap_a = 0;
  int cap_bd = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "worker threads (default: WEYLRUNS_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
  app->add_option("--cap-a", c.cap_a, "largest n enumerated for S_n")->check(CLI::PositiveNumber);
  app->add_option("--cap-bd", c.cap_bd, "largest n enumerated for B_n and D_n")->check(CLI::PositiveNumber);
}

wr_status open_context(const Common& c, Context& out) {
  wr_status s = wr_context_new(c.threads, &out.ctx);
  if (s != WR_OK) return s;
  if (c.cap_a || c.cap_bd) s = wr_context_set_caps(out.ctx, c.cap_a, c.cap_bd);
  return s;
}

struct DistArgs {
  Common common;
  std::string group;
  int n = 0;
  std::string sign = "none";
  bool biv = false;
  std::string end;
  std::string first_end;
  std::string first;
  std::string parity = "all";
  std::string format = "json";
};

int run_dist(const DistArgs& a) {
  static const std::map<std::string, int> groups = {
      {"A", WR_GROUP_A}, {"B", WR_GROUP_B}, {"D", WR_GROUP_D}, {"B-D", WR_GROUP_BMD}};
  static const std::map<std::string, int> signs = {
      {"none", WR_SIGN_NONE}, {"invA", WR_SIGN_INV_A}, {"invB", WR_SIGN_INV_B}, {"invD", WR_SIGN_INV_D}};
  static const std::map<std::string, int> parities = {
      {"all", WR_PARITY_ALL}, {"plus", WR_PARITY_PLUS}, {"minus", WR_PARITY_MINUS}};
  static const std::map<std::string, int> dirs = {{"", WR_UNSET}, {"a", WR_ASCENT}, {"d", WR_DESCENT}};
  static const std::map<std::string, int> firsts = {
      {"", WR_UNSET}, {"pos", WR_FIRST_POSITIVE}, {"neg", WR_FIRST_NEGATIVE}};
  static const std::map<std::string, int> formats = {
      {"json", WR_FORMAT_JSON}, {"csv", WR_FORMAT_CSV}, {"latex", WR_FORMAT_LATEX}};

  wr_dist_request req;
  wr_dist_request_init(&req);
  req.group = groups.at(a.group);
  req.n = a.n;
  req.sign = signs.at(a.sign);
  req.end_last = dirs.at(a.end);
  req.end_first = dirs.at(a.first_end);
  req.first_sign = firsts.at(a.first);
  req.parity = parities.at(a.parity);
  req.bivariate = a.biv ? 1 : 0;

  Context c;
  if (wr_status s = open_context(a.common, c); s != WR_OK) return report_error(s);
  wr_poly* p = nullptr;
  if (wr_status s = wr_dist(c.ctx, &req, &p); s != WR_OK) return report_error(s);
  Owned text;
  wr_status s = wr_poly_render(p, formats.at(a.format), &text.s);
  wr_poly_free(p);
  if (s != WR_OK) return report_error(s);
  std::cout << text.s << '\n';
  return kExitOk;
}

struct VerifyArgs {
  Common common;
  std::string theorem;
  int n_min = 1;
  int n_max = 7;
  std::string format = "text";
  bool list = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.list) {
    for (int i = 0; i < wr_theorem_count(); ++i) std::cout << wr_theorem_id(i) << '\n';
    return kExitOk;
  }
  if (a.theorem.empty()) {
    std::cerr << "weylruns: --theorem is required\n";
    return kExitUsage;
  }
  if (a.theorem != "all" && !wr_is_theorem_id(a.theorem.c_str())) {
    std::cerr << "weylruns: unknown theorem id '" << a.theorem << "' (see verify --list)\n";
    return kExitUsage;
  }
  Context c;
  if (wr_status s = open_context(a.common, c); s != WR_OK) return report_error(s);
  wr_report* r = nullptr;
  if (wr_status s = wr_verify(c.ctx, a.theorem.c_str(), a.n_min, a.n_max, &r); s != WR_OK) return report_error(s);
  Owned text;
  wr_status s = wr_report_render(r, a.format == "json" ? WR_FORMAT_JSON : WR_FORMAT_TEXT, &text.s);
  const bool passed = wr_report_passed(r);
  wr_report_free(r);
  if (s != WR_OK) return report_error(s);
  std::cout << text.s;
  return passed ? kExitOk : kExitFail;
}

struct TableArgs {
  Common common;
  std::string family;
  int n_min = 1;
  int n_max = 0;
  std::string out;
  std::string format = "csv";
};

int run_table(const TableArgs& a) {
  Context c;
  if (wr_status s = open_context(a.common, c); s != WR_OK) return report_error(s);
  Owned text;
  wr_status s = wr_table(c.ctx, a.family.c_str(), a.n_min, a.n_max, a.format == "csv" ? WR_FORMAT_CSV : WR_FORMAT_JSON,
                         &text.s);
  if (s != WR_OK) return report_error(s);
  if (a.out == "-") {
    std::cout << text.s;
    return kExitOk;
  }
  std::ofstream f(a.out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text.s) || !f.flush()) {
    std::cerr << "weylruns: cannot write " << a.out << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed alternating-run statistics on S_n, B_n and D_n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wr_version()));

  DistArgs dist;
  auto* d = app.add_subcommand("dist", "print a run distribution");
  d->add_option("--group", dist.group, "A, B, D or B-D")->required()->check(CLI::IsMember({"A", "B", "D", "B-D"}));
  d->add_option("--n", dist.n, "word length")->required();
  d->add_option("--signed", dist.sign, "sign statistic")->check(CLI::IsMember({"none", "invA", "invB", "invD"}));
  d->add_flag("--biv", dist.biv, "bivariate in p (peaks) and q (valleys)");
  d->add_option("--end", dist.end, "direction of the last step")->check(CLI::IsMember({"a", "d"}));
  d->add_option("--first-end", dist.first_end, "direction of the first step (type A)")
      ->check(CLI::IsMember({"a", "d"}));
  d->add_option("--first", dist.first, "sign of the first letter (types B/D)")->check(CLI::IsMember({"pos", "neg"}));
  d->add_option("--parity", dist.parity, "length parity")->check(CLI::IsMember({"all", "plus", "minus"}));
  d->add_option("--format", dist.format, "output format")->check(CLI::IsMember({"json", "csv", "latex"}));
  add_common(d, dist.common);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check identities against exhaustive enumeration");
  v->add_option("--theorem", ver.theorem, "identity id or all");
  v->add_option("--n-min", ver.n_min, "smallest n");
  v->add_option("--n-max", ver.n_max, "largest n");
  v->add_option("--format", ver.format, "report format")->check(CLI::IsMember({"text", "json"}));
  v->add_flag("--list", ver.list, "print the identity ids");
  add_common(v, ver.common);

  TableArgs tab;
  auto* t = app.add_subcommand("table", "write a coefficient or count table");
  t->add_option("--family", tab.family, "table family")
      ->required()
      ->check(CLI::IsMember({"R", "Rpm", "RB", "RBpm", "RD", "RBmD", "RDpm", "RBmDpm", "E", "EB", "ED", "EBmD", "S",
                             "SD", "SBmD"}));
  t->add_option("--n-min", tab.n_min, "first row")->check(CLI::PositiveNumber);
  t->add_option("--n-max", tab.n_max, "last row; below --n-min gives a header-only table")->required();
  t->add_option("--out", tab.out, "output path, - for stdout")->required();
  t->add_option("--format", tab.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  add_common(t, tab.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (*d) return run_dist(dist);
  if (*v) return run_verify(ver);
  return run_table(tab);
}
