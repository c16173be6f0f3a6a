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

#include "weylruns/closed_forms.hpp"

#include <string>

#include "weylruns/errors.hpp"

namespace weylruns {

namespace {

BiPoly one_minus_pq() { return BiPoly::constant(1) - BiPoly::p() * BiPoly::q(); }
BiPoly one_plus_pq() { return BiPoly::constant(1) + BiPoly::p() * BiPoly::q(); }
BiPoly one_minus(const BiPoly& x) { return BiPoly::constant(1) - x; }
UniPoly one_minus_t() { return UniPoly{1, -1}; }
UniPoly one_minus_t2() { return UniPoly{1, 0, -1}; }

void require_positive(int n) {
  if (n < 1) throw DomainError("n must be positive, got " + std::to_string(n));
}

bool zero_mod4_branch(int n) { return n % 4 == 0 || n % 4 == 1; }

BigInt binom(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInt r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

BiPoly thm_sgn_altrun_biv(int n) {
  require_positive(n);
  if (n == 1) return BiPoly::constant(1);
  if (!zero_mod4_branch(n)) return BiPoly{};
  int k = n / 4;
  return BiPoly::constant(2) * one_minus(BiPoly::p()) * one_minus(BiPoly::q()) * pow(one_minus_pq(), 2 * (k - 1));
}

bool thm_class_in_range(int n) { return zero_mod4_branch(n) ? n >= 4 : n >= 2; }

BiPoly thm_class_biv(int n, EndClass cls) {
  if (!thm_class_in_range(n) || !cls.has_first)
    throw DomainError("class formula undefined at n = " + std::to_string(n));
  int k = n / 4;
  if (!zero_mod4_branch(n)) {
    BiPoly aa = pow(one_minus_pq(), 2 * k);
    if (cls == kAA) return aa;
    if (cls == kDD) return -aa;
    return BiPoly{};
  }
  BiPoly base = pow(one_minus_pq(), 2 * (k - 1));
  if (cls == kAA || cls == kDD) return one_plus_pq() * base;
  if (cls == kAD) return BiPoly::term(-2, 1, 0) * base;
  return BiPoly::term(-2, 0, 1) * base;
}

BiPoly recurrence_class_biv(int n, EndClass cls) {
  if (n < 2 || !cls.has_first) throw DomainError("recurrence starts at n = 2");
  const BiPoly p = BiPoly::p();
  const BiPoly q = BiPoly::q();
  BiPoly aa = BiPoly::constant(1);
  BiPoly dd = BiPoly::constant(-1);
  BiPoly ad;
  BiPoly da;
  for (int m = 3; m <= n; ++m) {
    BiPoly ad_m;
    BiPoly aa_m;
    if (m % 2 == 1) {
      ad_m = -(p * q * ad) - p * aa - p * dd;
      aa_m = q * ad - p * da + aa;
    } else {
      ad_m = -(p * aa) + p * dd;
      aa_m = one_plus_pq() * aa + q * ad + p * da;
    }
    // Complement swaps the end classes and p, q; it changes the sign by (-1)^C(m,2).
    int eps = sign_pow(m * (m - 1) / 2);
    aa = aa_m;
    ad = ad_m;
    da = BiPoly::constant(eps) * ad_m.swapped();
    dd = BiPoly::constant(eps) * aa_m.swapped();
  }
  if (cls == kAA) return aa;
  if (cls == kAD) return ad;
  if (cls == kDA) return da;
  return dd;
}

UniPoly cor_sgn_altrun_uni(int n) {
  require_positive(n);
  if (n == 1) return UniPoly::t();
  if (!zero_mod4_branch(n)) return UniPoly{};
  int k = n / 4;
  return UniPoly{0, 2} * pow(one_minus_t(), 2 * k) * pow(UniPoly{1, 1}, 2 * k - 2);
}

BigInt g_coeff(int n, int l) {
  if (n < 2 || l < 1 || l > n - 1)
    throw DomainError("G_{n,l} needs n >= 2 and 1 <= l <= n-1");
  if (!zero_mod4_branch(n)) return 0;
  int k = n / 4;
  if (l % 2 == 0) {
    int j = (l - 2) / 2;
    return BigInt(-4 * sign_pow(j)) * binom(2 * k - 2, j);
  }
  int j1 = (l - 1) / 2;
  int j3 = (l - 3) / 2;
  BigInt r = BigInt(2 * sign_pow(j1)) * binom(2 * k - 2, j1);
  if (l >= 3) r += BigInt(2 * sign_pow(j3)) * binom(2 * k - 2, j3);
  return r;
}

BigInt r_pm_coeff(const BigInt& f, int n, int l, bool plus) {
  BigInt s = plus ? f + g_coeff(n, l) : f - g_coeff(n, l);
  if (s % 2 != 0) throw IntegrityError("F +/- G is odd at n = " + std::to_string(n));
  return s / 2;
}

EndTriple thm_b_formulas(int n) {
  require_positive(n);
  int k = n / 2;
  EndTriple r;
  if (n % 2 == 0) {
    BiPoly base = pow(one_minus_pq(), k - 1);
    r.end_a = one_minus(BiPoly::q()) * base;
    r.end_d = one_minus(BiPoly::p()) * base;
  } else {
    r.end_a = pow(one_minus_pq(), k);
    r.end_d = -r.end_a;
  }
  r.total = r.end_a + r.end_d;
  return r;
}

UniPoly cor_b_uni(int n) {
  require_positive(n);
  if (n % 2 == 1) return UniPoly{};
  return UniPoly{0, 2} * one_minus_t() * pow(one_minus_t2(), n / 2 - 1);
}

EndTriple thm_d_formulas(int n) {
  require_positive(n);
  EndTriple r = thm_b_formulas(n);
  if (n % 2 == 1) r.end_d = BiPoly{};
  r.total = r.end_a + r.end_d;
  return r;
}

UniPoly cor_d_uni(int n) {
  require_positive(n);
  if (n % 2 == 1) return UniPoly::t() * pow(one_minus_t2(), n / 2);
  return UniPoly{0, 2} * one_minus_t() * pow(one_minus_t2(), n / 2 - 1);
}

GaoSun gao_sun_differences(int n) {
  require_positive(n);
  GaoSun r;
  int k = n / 2;
  if (n % 2 == 0) {
    r.first_positive_diff = UniPoly::t() * one_minus_t() * pow(one_minus_t2(), k - 1);
    r.total_diff = UniPoly{0, 2} * one_minus_t() * pow(one_minus_t2(), k - 1);
  } else {
    r.first_positive_diff = UniPoly::t() * pow(one_minus_t2(), k);
  }
  return r;
}

std::string div_family_name(DivFamily f) {
  switch (f) {
    case DivFamily::R: return "R";
    case DivFamily::Rpm: return "Rpm";
    case DivFamily::RB: return "RB";
    case DivFamily::RBgt: return "RBgt";
    case DivFamily::RBpm: return "RBpm";
    case DivFamily::RD: return "RD";
    case DivFamily::RBmD: return "RBmD";
    case DivFamily::RDpm: return "RDpm";
    case DivFamily::RBmDpm: return "RBmDpm";
  }
  return "?";
}

bool divisibility_in_range(DivFamily f, int n) {
  return (f == DivFamily::R || f == DivFamily::Rpm) ? n >= 4 : n >= 1;
}

int divisibility_claim(DivFamily f, int n) {
  if (!divisibility_in_range(f, n))
    throw DomainError(div_family_name(f) + " carries no divisibility claim at n = " + std::to_string(n));
  switch (f) {
    case DivFamily::R: return (n - 2) / 2;
    case DivFamily::Rpm: return zero_mod4_branch(n) ? (n - 2) / 2 - 1 : (n - 2) / 2;
    default: return (n - 1) / 2;
  }
}

std::string moment_family_name(MomentFamily f) {
  switch (f) {
    case MomentFamily::R: return "R";
    case MomentFamily::Rpm: return "Rpm";
    case MomentFamily::RB: return "RB";
    case MomentFamily::RBgt: return "RBgt";
    case MomentFamily::RBpm: return "RBpm";
    case MomentFamily::RD: return "RD";
    case MomentFamily::RDgt: return "RDgt";
    case MomentFamily::RBmDgt: return "RBmDgt";
    case MomentFamily::RDpm: return "RDpm";
  }
  return "?";
}

bool moment_in_range(MomentFamily f, int n, int k) {
  if (k < 1) return false;
  switch (f) {
    case MomentFamily::R: return n >= 2 * k + 4;
    case MomentFamily::Rpm: return zero_mod4_branch(n) ? n >= 2 * k + 6 : n >= 2 * k + 4;
    default: return n >= 2 * k + 3;
  }
}

int alt_difference_a(int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n <= 1) return 1;
  switch (n % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}

int snake_difference(int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  return zero_mod4_branch(n) ? 1 : -1;
}

}  // namespace weylruns
