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

#include "weylruns/poly.hpp"

#include <algorithm>
#include <ostream>

#include "weylruns/errors.hpp"

namespace weylruns {

UniPoly::UniPoly(std::initializer_list<long long> ascending) {
  c_.reserve(ascending.size());
  for (long long x : ascending) c_.emplace_back(x);
  normalize();
}

UniPoly::UniPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }

UniPoly UniPoly::constant(const BigInt& c) { return monomial(c, 0); }

UniPoly UniPoly::monomial(const BigInt& c, int e) {
  UniPoly r;
  r.add_term(c, e);
  return r;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt UniPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
  return c_[e];
}

void UniPoly::add_term(const BigInt& c, int e) {
  if (e < 0) throw DomainError("negative exponent");
  if (c == 0) return;
  if (static_cast<int>(c_.size()) <= e) c_.resize(e + 1);
  c_[e] += c;
  normalize();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

BiPoly BiPoly::constant(const BigInt& c) { return term(c, 0, 0); }

BiPoly BiPoly::term(const BigInt& c, int i, int j) {
  BiPoly r;
  r.add_term(c, i, j);
  return r;
}

BigInt BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(const BigInt& c, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("negative exponent");
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(c, k.first, k.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(-c, k.first, k.second);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly r;
  for (const auto& [a, ca] : t_)
    for (const auto& [b, cb] : o.t_) r.add_term(ca * cb, a.first + b.first, a.second + b.second);
  *this = std::move(r);
  return *this;
}

BiPoly operator-(BiPoly a) {
  for (auto& kv : a.t_) kv.second = -kv.second;
  return a;
}

UniPoly pow(const UniPoly& f, int e) {
  if (e < 0) throw DomainError("negative power");
  UniPoly r{1};
  for (int i = 0; i < e; ++i) r *= f;
  return r;
}

BiPoly pow(const BiPoly& f, int e) {
  if (e < 0) throw DomainError("negative power");
  BiPoly r = BiPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= f;
  return r;
}

UniPoly substitute_diag(const BiPoly& f) {
  UniPoly r;
  for (const auto& [k, c] : f.terms()) r.add_term(c, k.first + k.second);
  return r;
}

BigInt eval_int(const UniPoly& f, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int one_plus_t_multiplicity(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("(1+t)-multiplicity of the zero polynomial is undefined");
  std::vector<BigInt> c = f.coeffs();
  int m = 0;
  while (c.size() > 1) {
    // Synthetic division by (t + 1), from the top coefficient down.
    std::size_t d = c.size() - 1;
    std::vector<BigInt> q(d);
    q[d - 1] = c[d];
    for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
    BigInt rem = c[0] - q[0];
    if (rem != 0) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

bool moment_check(const UniPoly& f, int k) {
  if (k < 0) throw DomainError("moment order must be nonnegative");
  BigInt odd = 0;
  BigInt even = 0;
  const auto& c = f.coeffs();
  for (std::size_t s = 1; s < c.size(); ++s) {
    BigInt term = boost::multiprecision::pow(BigInt(s), static_cast<unsigned>(k)) * c[s];
    (s % 2 == 1 ? odd : even) += term;
  }
  return odd == even;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << to_string(f); }

}  // namespace weylruns
