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

#include <sstream>
#include <string>

#include <json.hpp>

#include "weylruns/errors.hpp"
#include "weylruns/poly.hpp"

namespace weylruns {

namespace {

using json = nlohmann::ordered_json;

std::string dec(const BigInt& c) { return c.str(); }

std::string mono(const std::string& var, int e, bool braces) {
  if (e == 0) return "";
  if (e == 1) return var;
  return braces ? var + "^{" + std::to_string(e) + "}" : var + "^" + std::to_string(e);
}

void append_term(std::string& out, const BigInt& c, const std::string& m) {
  BigInt a = c < 0 ? BigInt(-c) : c;
  std::string body = m.empty() ? dec(a) : (a == 1 ? m : dec(a) + m);
  if (out.empty()) {
    out = (c < 0 ? "-" : "") + body;
  } else {
    out += c < 0 ? " - " : " + ";
    out += body;
  }
}

std::string render_uni(const UniPoly& f, bool braces) {
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) append_term(out, c[e], mono("t", static_cast<int>(e), braces));
  return out.empty() ? "0" : out;
}

std::string render_bi(const BiPoly& f, bool braces) {
  std::string out;
  for (const auto& [k, c] : f.terms())
    append_term(out, c, mono("p", k.first, braces) + mono("q", k.second, braces));
  return out.empty() ? "0" : out;
}

BigInt parse_coef(const json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_number_integer()) s = std::to_string(v.get<long long>());
  else throw DomainError("coefficient must be a decimal string");
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw DomainError("empty coefficient");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw DomainError("bad coefficient: " + s);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

}  // namespace

std::string to_json(const UniPoly& f) {
  json j;
  j["vars"] = json::array({"t"});
  j["terms"] = json::array();
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) j["terms"].push_back({{"exp", json::array({e})}, {"coef", dec(c[e])}});
  return j.dump();
}

std::string to_json(const BiPoly& f) {
  json j;
  j["vars"] = json::array({"p", "q"});
  j["terms"] = json::array();
  for (const auto& [k, c] : f.terms())
    j["terms"].push_back({{"exp", json::array({k.first, k.second})}, {"coef", dec(c)}});
  return j.dump();
}

std::string to_csv(const UniPoly& f) {
  std::ostringstream os;
  os << "exp,coef\n";
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) os << e << ',' << dec(c[e]) << '\n';
  return os.str();
}

std::string to_csv(const BiPoly& f) {
  std::ostringstream os;
  os << "exp_p,exp_q,coef\n";
  for (const auto& [k, c] : f.terms()) os << k.first << ',' << k.second << ',' << dec(c) << '\n';
  return os.str();
}

std::string to_latex(const UniPoly& f) { return render_uni(f, true); }
std::string to_latex(const BiPoly& f) { return render_bi(f, true); }
std::string to_string(const UniPoly& f) { return render_uni(f, false); }
std::string to_string(const BiPoly& f) { return render_bi(f, false); }

namespace {

// Dense storage; keeps a hostile exponent from allocating gigabytes.
constexpr int kMaxParsedExponent = 1 << 16;

AnyPoly parse_impl(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms") || !j["terms"].is_array())
    throw DomainError("polynomial JSON needs \"vars\" and \"terms\"");
  auto vars = j["vars"].get<std::vector<std::string>>();
  if (vars == std::vector<std::string>{"t"}) {
    UniPoly f;
    for (const auto& t : j["terms"]) {
      auto e = t.at("exp").get<std::vector<int>>();
      if (e.size() != 1) throw DomainError("univariate term needs one exponent");
      if (e[0] > kMaxParsedExponent) throw DomainError("exponent too large");
      f.add_term(parse_coef(t.at("coef")), e[0]);
    }
    return f;
  }
  if (vars == std::vector<std::string>{"p", "q"}) {
    BiPoly f;
    for (const auto& t : j["terms"]) {
      auto e = t.at("exp").get<std::vector<int>>();
      if (e.size() != 2) throw DomainError("bivariate term needs two exponents");
      f.add_term(parse_coef(t.at("coef")), e[0], e[1]);
    }
    return f;
  }
  throw DomainError("vars must be [\"t\"] or [\"p\",\"q\"]");
}

}  // namespace

AnyPoly poly_from_json(const std::string& text) {
  try {
    return parse_impl(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid polynomial JSON: ") + e.what());
  }
}

}  // namespace weylruns
