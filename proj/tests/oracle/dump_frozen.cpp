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

// Regenerates tests/frozen.hpp from the brute-force oracle:
//   dump_frozen > tests/frozen.hpp

#include <iostream>
#include <map>
#include <string>

#include "oracle.hpp"

using namespace oracle;

namespace {

std::map<std::string, std::string> out;

void put(const std::string& key, const std::string& value) { out[key] = value; }

std::string gname(G g) {
  switch (g) {
    case G::A: return "A";
    case G::B: return "B";
    case G::D: return "D";
    case G::BmD: return "BmD";
  }
  return "?";
}

void dump_a(int n) {
  const std::string s = ".n" + std::to_string(n);
  put("A.R.all" + s, str(runs_poly(G::A, n)));
  put("A.R.plus" + s, str(runs_poly(G::A, n, Filter{1})));
  put("A.R.minus" + s, str(runs_poly(G::A, n, Filter{2})));
  put("A.sgnuni" + s, str(runs_poly(G::A, n, {}, true)));
  put("A.sgn" + s, str(pq_poly(G::A, n)));
  if (n >= 2) {
    const char* names[] = {"aa", "ad", "da", "dd"};
    for (int i = 0; i < 4; ++i) {
      Filter f;
      f.first_end = i / 2 + 1;
      f.last_end = i % 2 + 1;
      put(std::string("A.class.") + names[i] + s, str(pq_poly(G::A, n, f)));
    }
  }
  put("A.E.all" + s, std::to_string(alternating(G::A, n)));
  put("A.E.plus" + s, std::to_string(alternating(G::A, n, 1)));
  put("A.E.minus" + s, std::to_string(alternating(G::A, n, 2)));
}

void dump_bd(G g, int n) {
  const std::string s = ".n" + std::to_string(n);
  const std::string p = gname(g);
  put(p + ".R.all" + s, str(runs_poly(g, n)));
  put(p + ".R.plus" + s, str(runs_poly(g, n, Filter{1})));
  put(p + ".R.minus" + s, str(runs_poly(g, n, Filter{2})));
  put(p + ".Rgt.all" + s, str(runs_poly(g, n, Filter{0, 1})));
  put(p + ".sgnuni" + s, str(runs_poly(g, n, {}, true)));
  put(p + ".sgnuni.gt" + s, str(runs_poly(g, n, Filter{0, 1}, true)));
  put(p + ".sgn" + s, str(pq_poly(g, n)));
  put(p + ".sgn.a" + s, str(pq_poly(g, n, Filter{0, 0, 0, 1})));
  put(p + ".sgn.d" + s, str(pq_poly(g, n, Filter{0, 0, 0, 2})));
  put(p + ".E.all" + s, std::to_string(alternating(g, n)));
  put(p + ".E.plus" + s, std::to_string(alternating(g, n, 1)));
  put(p + ".E.minus" + s, std::to_string(alternating(g, n, 2)));
  put(p + ".S.all" + s, std::to_string(snakes(g, n)));
  put(p + ".S.plus" + s, std::to_string(snakes(g, n, 1)));
  put(p + ".S.minus" + s, std::to_string(snakes(g, n, 2)));
}

}  // namespace

int main(int argc, char** argv) {
  int max_a = argc > 1 ? std::stoi(argv[1]) : 10;
  int max_b = argc > 2 ? std::stoi(argv[2]) : 8;
  for (int n = 1; n <= max_a; ++n) dump_a(n);
  for (G g : {G::B, G::D, G::BmD})
    for (int n = 1; n <= max_b; ++n) dump_bd(g, n);

  std::cout <<
      "// Copyright 2026 The weylruns Authors\n"
      "//\n"
      "// Licensed under the Apache License, Version 2.0 (the \"License\");\n"
      "// you may not use this file except in compliance with the License.\n"
      "// You may obtain a copy of the License at\n"
      "//\n"
      "//     http://www.apache.org/licenses/LICENSE-2.0\n"
      "//\n"
      "// Unless required by applicable law or agreed to in writing, software\n"
      "// distributed under the License is distributed on an \"AS IS\" BASIS,\n"
      "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
      "// See the License for the specific language governing permissions and\n"
      "// limitations under the License.\n"
      "\n"
               "// Generated by tests/oracle/dump_frozen.cpp from the brute-force oracle.\n"
               "// Uni values list exp:coef; Biv values list peaks,valleys:coef.\n\n"
               "#ifndef WEYLRUNS_TESTS_FROZEN_HPP\n#define WEYLRUNS_TESTS_FROZEN_HPP\n\n"
               "#include <string_view>\n#include <utility>\n\n"
               "namespace frozen {\n\n"
               "inline constexpr int kMaxA = "
            << max_a << ";\ninline constexpr int kMaxBD = " << max_b
            << ";\n\ninline constexpr std::pair<std::string_view, std::string_view> kValues[] = {\n";
  for (const auto& [k, v] : out) std::cout << "    {\"" << k << "\", \"" << v << "\"},\n";
  std::cout << "};\n\n}  // namespace frozen\n\n#endif  // WEYLRUNS_TESTS_FROZEN_HPP\n";
}
