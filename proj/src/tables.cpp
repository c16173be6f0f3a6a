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

#include "weylruns/tables.hpp"

#include <sstream>

#include <json.hpp>

#include "weylruns/errors.hpp"

namespace weylruns {

namespace {

struct FamilyInfo {
  TableFamily family;
  const char* name;
  Group group;
  enum Kind { poly, poly_pm, alt, snake } kind;
  SnakeFamily snakes = SnakeFamily::B;
};

const std::vector<FamilyInfo>& infos() {
  static const std::vector<FamilyInfo> v = {
      {TableFamily::R, "R", Group::A, FamilyInfo::poly},
      {TableFamily::Rpm, "Rpm", Group::A, FamilyInfo::poly_pm},
      {TableFamily::RB, "RB", Group::B, FamilyInfo::poly},
      {TableFamily::RBpm, "RBpm", Group::B, FamilyInfo::poly_pm},
      {TableFamily::RD, "RD", Group::D, FamilyInfo::poly},
      {TableFamily::RBmD, "RBmD", Group::BminusD, FamilyInfo::poly},
      {TableFamily::RDpm, "RDpm", Group::D, FamilyInfo::poly_pm},
      {TableFamily::RBmDpm, "RBmDpm", Group::BminusD, FamilyInfo::poly_pm},
      {TableFamily::E, "E", Group::A, FamilyInfo::alt},
      {TableFamily::EB, "EB", Group::B, FamilyInfo::alt},
      {TableFamily::ED, "ED", Group::D, FamilyInfo::alt},
      {TableFamily::EBmD, "EBmD", Group::BminusD, FamilyInfo::alt},
      {TableFamily::S, "S", Group::B, FamilyInfo::snake, SnakeFamily::B},
      {TableFamily::SD, "SD", Group::D, FamilyInfo::snake, SnakeFamily::D},
      {TableFamily::SBmD, "SBmD", Group::BminusD, FamilyInfo::snake, SnakeFamily::BminusD},
  };
  return v;
}

const FamilyInfo& info(TableFamily f) {
  for (const auto& i : infos())
    if (i.family == f) return i;
  throw DomainError("unknown table family");
}

struct Row {
  int n;
  std::vector<std::pair<std::string, UniPoly>> polys;  // label, polynomial
  BigInt count;
};

Row compute(Engine& e, const FamilyInfo& fi, int n) {
  Row r{n, {}, BigInt(0)};
  switch (fi.kind) {
    case FamilyInfo::poly: {
      SignedDistributionRequest req;
      req.group = fi.group;
      req.n = n;
      r.polys.emplace_back("all", dist_runs_t(e, req));
      break;
    }
    case FamilyInfo::poly_pm: {
      auto [plus, minus] = dist_runs_parity_split(e, fi.group, n);
      r.polys.emplace_back("plus", std::move(plus));
      r.polys.emplace_back("minus", std::move(minus));
      break;
    }
    case FamilyInfo::alt:
      r.count = count_alternating(e, fi.group, n, Parity::all);
      break;
    case FamilyInfo::snake:
      r.count = count_snakes(e, fi.snakes, n);
      break;
  }
  return r;
}

std::string render_csv(const FamilyInfo& fi, const std::vector<Row>& rows) {
  std::ostringstream os;
  const bool counts = fi.kind == FamilyInfo::alt || fi.kind == FamilyInfo::snake;
  const bool pm = fi.kind == FamilyInfo::poly_pm;
  os << (counts ? "n,count\n" : pm ? "n,parity,k,coef\n" : "n,k,coef\n");
  for (const Row& r : rows) {
    if (counts) {
      os << r.n << ',' << r.count.str() << '\n';
      continue;
    }
    for (const auto& [label, f] : r.polys) {
      for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k) == 0) continue;
        os << r.n << ',';
        if (pm) os << label << ',';
        os << k << ',' << f.coeff(k).str() << '\n';
      }
    }
  }
  return os.str();
}

std::string render_json_rows(const FamilyInfo& fi, const std::vector<Row>& rows) {
  nlohmann::ordered_json j;
  j["family"] = fi.name;
  j["rows"] = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    if (r.polys.empty()) {
      row["count"] = r.count.str();
    } else {
      for (const auto& [label, f] : r.polys) row[label] = nlohmann::ordered_json::parse(to_json(f));
    }
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace

const std::vector<TableFamily>& all_table_families() {
  static const std::vector<TableFamily> v = [] {
    std::vector<TableFamily> out;
    for (const auto& i : infos()) out.push_back(i.family);
    return out;
  }();
  return v;
}

std::string table_family_name(TableFamily f) { return info(f).name; }

std::optional<TableFamily> parse_table_family(const std::string& name) {
  for (const auto& i : infos())
    if (name == i.name) return i.family;
  return std::nullopt;
}

std::string render_table(Engine& e, TableFamily f, int n_min, int n_max, TableFormat fmt) {
  const FamilyInfo& fi = info(f);
  if (n_min < 1) throw DomainError("table rows start at n = 1");
  if (n_max >= n_min) e.check(fi.group, n_max);
  std::vector<Row> rows;
  for (int n = n_min; n <= n_max; ++n) rows.push_back(compute(e, fi, n));
  return fmt == TableFormat::csv ? render_csv(fi, rows) : render_json_rows(fi, rows);
}

}  // namespace weylruns
