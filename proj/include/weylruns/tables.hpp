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

#ifndef WEYLRUNS_TABLES_HPP
#define WEYLRUNS_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylruns/enumerate.hpp"

namespace weylruns {

// Run polynomial families (R*) and count families (E*, S*).
enum class TableFamily { R, Rpm, RB, RBpm, RD, RBmD, RDpm, RBmDpm, E, EB, ED, EBmD, S, SD, SBmD };

enum class TableFormat { csv, json };

const std::vector<TableFamily>& all_table_families();
std::string table_family_name(TableFamily f);
std::optional<TableFamily> parse_table_family(const std::string& name);

// Rows n_min..n_max; an empty range yields the header alone (CSV) or an
// empty row list (JSON). Throws DomainError past the enumeration cap.
std::string render_table(Engine& e, TableFamily f, int n_min, int n_max, TableFormat fmt);

}  // namespace weylruns

#endif  // WEYLRUNS_TABLES_HPP
