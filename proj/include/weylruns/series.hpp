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

#ifndef WEYLRUNS_SERIES_HPP
#define WEYLRUNS_SERIES_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylruns/poly.hpp"

namespace weylruns {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultSeriesOrder = 16;

// Truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1}.
class Series {
 public:
  explicit Series(int order = kDefaultSeriesOrder);

  static Series constant(const Rational& c, int order = kDefaultSeriesOrder);
  static Series x(int order = kDefaultSeriesOrder);
  static Series sin(int order = kDefaultSeriesOrder);
  static Series cos(int order = kDefaultSeriesOrder);

  int order() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  // Throws DomainError when o has a zero constant term.
  Series& operator/=(const Series& o);
  Series& operator*=(const Rational& k);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator/(Series a, const Series& b) { return a /= b; }
  friend Series operator*(Series a, const Rational& k) { return a *= k; }
  friend bool operator==(const Series&, const Series&) = default;

 private:
  void require_same_order(const Series& o) const;
  std::vector<Rational> c_;
};

// x -> c x
Series scale_arg(const Series& f, const Rational& c);

// n! [x^n] f; IntegrityError if that is not an integer.
BigInt egf_coeff(const Series& f, int n);

enum class AltFamily {
  A, Aplus, Aminus,
  B, Bplus, Bminus,
  D, BminusD,
  Dplus, Dminus,
  BminusDplus, BminusDminus,
};

enum class SnakeFamily {
  B, Bplus, Bminus,
  D, BminusD,
  Dplus, Dminus,
  BminusDplus, BminusDminus,
};

// The closed forms exactly as printed, including the B-D +/- alternating
// family, whose printed form does not match the counts.
Series egf_alt(AltFamily family, int order = kDefaultSeriesOrder);
Series egf_snakes(SnakeFamily family, int order = kDefaultSeriesOrder);

// (sec 2x + tan 2x - 1 +/- 2x)/4: the B-D +/- alternating EGF refit to the
// brute-force counts. Reported next to the printed form, never substituted.
Series egf_alt_bminusd_refit(bool plus, int order = kDefaultSeriesOrder);

std::string family_name(AltFamily f);
std::string family_name(SnakeFamily f);

}  // namespace weylruns

#endif  // WEYLRUNS_SERIES_HPP
