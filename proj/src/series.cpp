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

#include "weylruns/series.hpp"

#include "weylruns/errors.hpp"

namespace weylruns {

Series::Series(int order) {
  if (order < 1) throw DomainError("series order must be positive");
  c_.assign(order, Rational(0));
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::x(int order) {
  Series s(order);
  if (order > 1) s.c_[1] = 1;
  return s;
}

Series Series::sin(int order) {
  Series s(order);
  BigInt fact = 1;
  for (int i = 1; i < order; ++i) {
    fact *= i;
    if (i % 2 == 1) s.c_[i] = Rational((i / 2) % 2 == 0 ? 1 : -1, fact);
  }
  return s;
}

Series Series::cos(int order) {
  Series s(order);
  BigInt fact = 1;
  s.c_[0] = 1;
  for (int i = 1; i < order; ++i) {
    fact *= i;
    if (i % 2 == 0) s.c_[i] = Rational((i / 2) % 2 == 0 ? 1 : -1, fact);
  }
  return s;
}

void Series::require_same_order(const Series& o) const {
  if (o.order() != order()) throw DomainError("series orders differ");
}

Series& Series::operator+=(const Series& o) {
  require_same_order(o);
  for (int i = 0; i < order(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(o);
  for (int i = 0; i < order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  require_same_order(o);
  std::vector<Rational> r(order(), Rational(0));
  for (int i = 0; i < order(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j < order(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

Series& Series::operator/=(const Series& o) {
  require_same_order(o);
  if (o.c_[0] == 0) throw DomainError("series division by a zero constant term");
  std::vector<Rational> r(order(), Rational(0));
  for (int i = 0; i < order(); ++i) {
    Rational acc = c_[i];
    for (int j = 1; j <= i; ++j) acc -= o.c_[j] * r[i - j];
    r[i] = acc / o.c_[0];
  }
  c_ = std::move(r);
  return *this;
}

Series& Series::operator*=(const Rational& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

Series scale_arg(const Series& f, const Rational& c) {
  Series r(f.order());
  Rational pw = 1;
  for (int i = 0; i < f.order(); ++i) {
    r[i] = f[i] * pw;
    pw *= c;
  }
  return r;
}

BigInt egf_coeff(const Series& f, int n) {
  if (n < 0 || n >= f.order()) throw DomainError("coefficient index beyond series order");
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Rational v = f[n] * Rational(fact);
  if (denominator(v) != 1)
    throw IntegrityError("non-integer EGF coefficient at n=" + std::to_string(n) + ": " + v.str());
  return numerator(v);
}

namespace {

// sec 2x + tan 2x
Series sec_tan_2x(int order) {
  Series c = scale_arg(Series::cos(order), 2);
  Series s = scale_arg(Series::sin(order), 2);
  return (Series::constant(1, order) + s) / c;
}

Series sec_tan_x(int order) {
  Series c = Series::cos(order);
  return (Series::constant(1, order) + Series::sin(order)) / c;
}

}  // namespace

Series egf_alt(AltFamily family, int order) {
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  Series one = Series::constant(1, order);
  Series x = Series::x(order);
  switch (family) {
    case AltFamily::A:
      return sec_tan_x(order);
    case AltFamily::Aplus:
      return (sec_tan_x(order) + Series::cos(order) + x) * half;
    case AltFamily::Aminus:
      return (sec_tan_x(order) - Series::cos(order) - x) * half;
    case AltFamily::B:
      return sec_tan_2x(order);
    case AltFamily::Bplus:
    case AltFamily::D:
      return (sec_tan_2x(order) + one) * half;
    case AltFamily::Bminus:
    case AltFamily::BminusD:
      return (sec_tan_2x(order) - one) * half;
    case AltFamily::Dplus:
      return (sec_tan_2x(order) + x * Rational(2) + one * Rational(3)) * quarter;
    case AltFamily::Dminus:
      return (sec_tan_2x(order) - x * Rational(2) - one) * quarter;
    case AltFamily::BminusDplus:
      return (sec_tan_2x(order) - one + x) * half;
    case AltFamily::BminusDminus:
      return (sec_tan_2x(order) - one - x) * half;
  }
  throw DomainError("unknown alternating family");
}

Series egf_alt_bminusd_refit(bool plus, int order) {
  Series x2 = Series::x(order) * Rational(2);
  Series base = sec_tan_2x(order) - Series::constant(1, order);
  return (plus ? base + x2 : base - x2) * Rational(1, 4);
}

Series egf_snakes(SnakeFamily family, int order) {
  Series c = Series::cos(order);
  Series s = Series::sin(order);
  Series denom = c - s;
  switch (family) {
    case SnakeFamily::B:
      return Series::constant(1, order) / denom;
    case SnakeFamily::Bplus:
    case SnakeFamily::D:
      return (c * c) / denom;
    case SnakeFamily::Bminus:
    case SnakeFamily::BminusD:
      return (s * s) / denom;
    case SnakeFamily::Dplus:
      return (c * c * Rational(2) - s * s) / (denom * Rational(2));
    case SnakeFamily::Dminus:
    case SnakeFamily::BminusDplus:
    case SnakeFamily::BminusDminus:
      return (s * s) / (denom * Rational(2));
  }
  throw DomainError("unknown snake family");
}

std::string family_name(AltFamily f) {
  switch (f) {
    case AltFamily::A: return "A";
    case AltFamily::Aplus: return "A+";
    case AltFamily::Aminus: return "A-";
    case AltFamily::B: return "B";
    case AltFamily::Bplus: return "B+";
    case AltFamily::Bminus: return "B-";
    case AltFamily::D: return "D";
    case AltFamily::BminusD: return "B-D";
    case AltFamily::Dplus: return "D+";
    case AltFamily::Dminus: return "D-";
    case AltFamily::BminusDplus: return "B-D+";
    case AltFamily::BminusDminus: return "B-D-";
  }
  return "?";
}

std::string family_name(SnakeFamily f) {
  switch (f) {
    case SnakeFamily::B: return "B";
    case SnakeFamily::Bplus: return "B+";
    case SnakeFamily::Bminus: return "B-";
    case SnakeFamily::D: return "D";
    case SnakeFamily::BminusD: return "B-D";
    case SnakeFamily::Dplus: return "D+";
    case SnakeFamily::Dminus: return "D-";
    case SnakeFamily::BminusDplus: return "B-D+";
    case SnakeFamily::BminusDminus: return "B-D-";
  }
  return "?";
}

}  // namespace weylruns
