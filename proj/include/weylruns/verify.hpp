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

#ifndef WEYLRUNS_VERIFY_HPP
#define WEYLRUNS_VERIFY_HPP

#include <string>
#include <vector>

#include "weylruns/enumerate.hpp"

namespace weylruns {

enum class Status {
  pass,
  fail,
  skip,             // n outside the statement's range or the checked range
  oracle_supplied,  // the formula has no value here; the oracle value is used
  info,             // reported, not asserted
  mismatch_documented,  // printed formula disagrees with the oracle; see detail
};

std::string status_name(Status s);

struct CheckLine {
  int n = 0;
  Status status = Status::pass;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  std::string title;
  std::vector<CheckLine> lines;
  bool passed() const;
};

struct Report {
  int n_min = 0;
  int n_max = 0;
  std::vector<TheoremReport> theorems;
  bool passed() const;
};

// Stable registry ids in report order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);
std::string theorem_title(const std::string& id);

// Runs one id, or every id for "all". DomainError for an unknown id, an empty
// or nonpositive range, or (single id only) n beyond the group's cap; with
// "all", lines beyond a cap are reported as skip.
Report verify(Engine& e, const std::string& id, int n_min, int n_max);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace weylruns

#endif  // WEYLRUNS_VERIFY_HPP
