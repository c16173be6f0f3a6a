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

// Helpers shared by the test programs: frozen-value lookup and conversions
// between library polynomials and the oracle's coefficient maps.

#ifndef WEYLRUNS_TESTS_SUPPORT_HPP
#define WEYLRUNS_TESTS_SUPPORT_HPP

#include <stdexcept>
#include <string>

#include "frozen.hpp"
#include "oracle/oracle.hpp"
#include "weylruns/perm.hpp"
#include "weylruns/poly.hpp"

namespace support {

inline std::string frozen_value(std::string_view key) {
  for (const auto& [k, v] : frozen::kValues)
    if (k == key) return std::string(v);
  throw std::out_of_range("no frozen value for " + std::string(key));
}

inline std::string key(const std::string& stem, int n) { return stem + ".n" + std::to_string(n); }

inline oracle::Uni to_map(const weylruns::UniPoly& f) {
  oracle::Uni m;
  for (int e = 0; e <= f.degree(); ++e)
    if (f.coeff(e) != 0) m[e] = static_cast<std::int64_t>(f.coeff(e));
  return m;
}

inline oracle::Biv to_map(const weylruns::BiPoly& f) {
  oracle::Biv m;
  for (const auto& [k, c] : f.terms()) m[k] = static_cast<std::int64_t>(c);
  return m;
}

// Same text form as the frozen table.
inline std::string canon(const weylruns::UniPoly& f) { return oracle::str(to_map(f)); }
inline std::string canon(const weylruns::BiPoly& f) { return oracle::str(to_map(f)); }

inline oracle::G to_oracle(weylruns::Group g) {
  switch (g) {
    case weylruns::Group::A: return oracle::G::A;
    case weylruns::Group::B: return oracle::G::B;
    case weylruns::Group::D: return oracle::G::D;
    case weylruns::Group::BminusD: return oracle::G::BmD;
  }
  return oracle::G::A;
}

inline const char* prefix(weylruns::Group g) {
  switch (g) {
    case weylruns::Group::A: return "A";
    case weylruns::Group::B: return "B";
    case weylruns::Group::D: return "D";
    case weylruns::Group::BminusD: return "BmD";
  }
  return "?";
}

}  // namespace support

#endif  // WEYLRUNS_TESTS_SUPPORT_HPP
