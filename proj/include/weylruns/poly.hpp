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

#ifndef WEYLRUNS_POLY_HPP
#define WEYLRUNS_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylruns {

using BigInt = boost::multiprecision::cpp_int;

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Dense polynomial in t. Coefficient i multiplies t^i; no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long long> ascending);
  explicit UniPoly(std::vector<BigInt> ascending);

  static UniPoly constant(const BigInt& c);
  static UniPoly monomial(const BigInt& c, int e);
  static UniPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int e) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  void add_term(const BigInt& c, int e);

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Sparse polynomial in p, q keyed by (deg_p, deg_q); no stored zeros.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(const BigInt& c);
  static BiPoly term(const BigInt& c, int i, int j);
  static BiPoly p() { return term(1, 1, 0); }
  static BiPoly q() { return term(1, 0, 1); }

  bool is_zero() const { return t_.empty(); }
  BigInt coeff(int i, int j) const;
  const std::map<Key, BigInt>& terms() const { return t_; }

  void add_term(const BigInt& c, int i, int j);
  // f(p, q) -> f(q, p)
  BiPoly swapped() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::map<Key, BigInt> t_;
};

UniPoly pow(const UniPoly& f, int e);
BiPoly pow(const BiPoly& f, int e);

// p = q = t.
UniPoly substitute_diag(const BiPoly& f);

BigInt eval_int(const UniPoly& f, const BigInt& x);

// Largest m with (1+t)^m | f. Throws DomainError for f = 0.
int one_plus_t_multiplicity(const UniPoly& f);

// Sum over odd s of s^k f_s equals the sum over even s >= 2 of s^k f_s.
bool moment_check(const UniPoly& f, int k);

// Canonical text forms. JSON: {"vars":[...],"terms":[{"exp":[..],"coef":"..."}]}
std::string to_json(const UniPoly& f);
std::string to_json(const BiPoly& f);
std::string to_csv(const UniPoly& f);
std::string to_csv(const BiPoly& f);
std::string to_latex(const UniPoly& f);
std::string to_latex(const BiPoly& f);

using AnyPoly = std::variant<UniPoly, BiPoly>;
// Throws DomainError on malformed input.
AnyPoly poly_from_json(const std::string& text);

std::string to_string(const UniPoly& f);
std::string to_string(const BiPoly& f);
std::ostream& operator<<(std::ostream& os, const UniPoly& f);
std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace weylruns

#endif  // WEYLRUNS_POLY_HPP
