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

#ifndef WEYLRUNS_CLOSED_FORMS_HPP
#define WEYLRUNS_CLOSED_FORMS_HPP

#include <string>

#include "weylruns/perm.hpp"
#include "weylruns/poly.hpp"

namespace weylruns {

// Signed bivariate peak/valley sum over S_n. n = 1 returns the oracle value 1.
BiPoly thm_sgn_altrun_biv(int n);

// Class formula. Defined for n >= 2 when n = 2, 3 (mod 4) and n >= 4 otherwise.
BiPoly thm_class_biv(int n, EndClass cls);
bool thm_class_in_range(int n);

// Class polynomial from the odd/even recurrences, base n = 2, no enumeration.
// Requires n >= 2.
BiPoly recurrence_class_biv(int n, EndClass cls);

// Univariate signed run polynomial. n = 1 returns the oracle value t.
UniPoly cor_sgn_altrun_uni(int n);

// G_{n,l}; defined for n >= 2 and 1 <= l <= n-1.
BigInt g_coeff(int n, int l);
// (F +/- G)/2 with F = R_{n,l}; IntegrityError if the sum is odd.
BigInt r_pm_coeff(const BigInt& f, int n, int l, bool plus);

struct EndTriple {
  BiPoly end_a;
  BiPoly end_d;
  BiPoly total;
};

EndTriple thm_b_formulas(int n);  // n >= 1
UniPoly cor_b_uni(int n);
EndTriple thm_d_formulas(int n);  // n >= 1
UniPoly cor_d_uni(int n);

struct GaoSun {
  UniPoly first_positive_diff;  // R^{D,>} - R^{B-D,>}
  UniPoly total_diff;           // R^D - R^{B-D}
};
GaoSun gao_sun_differences(int n);  // n >= 1

// Guaranteed minimum (1+t)-multiplicity.
enum class DivFamily { R, Rpm, RB, RBgt, RBpm, RD, RBmD, RDpm, RBmDpm };
inline constexpr DivFamily kAllDivFamilies[] = {
    DivFamily::R,  DivFamily::Rpm,  DivFamily::RB,   DivFamily::RBgt,  DivFamily::RBpm,
    DivFamily::RD, DivFamily::RBmD, DivFamily::RDpm, DivFamily::RBmDpm};
std::string div_family_name(DivFamily f);
bool divisibility_in_range(DivFamily f, int n);
// DomainError outside the theorem's range (n >= 4 for type A, n >= 1 otherwise).
int divisibility_claim(DivFamily f, int n);

// Families carrying an odd/even moment identity.
enum class MomentFamily { R, Rpm, RB, RBgt, RBpm, RD, RDgt, RBmDgt, RDpm };
inline constexpr MomentFamily kAllMomentFamilies[] = {
    MomentFamily::R,  MomentFamily::Rpm,  MomentFamily::RB,     MomentFamily::RBgt, MomentFamily::RBpm,
    MomentFamily::RD, MomentFamily::RDgt, MomentFamily::RBmDgt, MomentFamily::RDpm};
std::string moment_family_name(MomentFamily f);
// Whether (n, k) lies in the identity's stated range.
bool moment_in_range(MomentFamily f, int n, int k);

// E_n^+ - E_n^- over S_n (n >= 0, E_0^+ = 1).
int alt_difference_a(int n);
// S_n^{B,+} - S_n^{B,-} and S_n^{D,+} - S_n^{D,-} (n >= 0).
int snake_difference(int n);

}  // namespace weylruns

#endif  // WEYLRUNS_CLOSED_FORMS_HPP
