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

#include "weylruns/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kernels.hpp"
#include "weylruns/closed_forms.hpp"
#include "weylruns/errors.hpp"
#include "weylruns/involutions.hpp"
#include "weylruns/series.hpp"

namespace weylruns {

namespace {

CheckLine line(int n, Status s, std::string detail = {}) { return CheckLine{n, s, std::move(detail)}; }

CheckLine skip(int n, const std::string& why) { return line(n, Status::skip, why); }

// Accumulates named sub-checks into one line.
class Checker {
 public:
  explicit Checker(int n) : n_(n) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class P>
  void equal(const P& oracle, const P& formula, const std::string& what) {
    if (!(oracle == formula))
      failures_.push_back(what + ": oracle " + to_string(oracle) + ", formula " + to_string(formula));
  }
  void note(const std::string& s) { notes_.push_back(s); }
  CheckLine done(Status ok_status = Status::pass) const {
    std::string d;
    const auto& parts = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) d += (i ? "; " : "") + parts[i];
    return line(n_, failures_.empty() ? ok_status : Status::fail, d);
  }

 private:
  int n_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

UniPoly runs(Engine& e, Group g, int n, Parity parity = Parity::all,
             std::optional<FirstSign> first = std::nullopt, SignStat sign = SignStat::none) {
  SignedDistributionRequest req;
  req.group = g;
  req.n = n;
  req.parity = parity;
  req.first_letter_sign = first;
  req.sign = sign;
  return dist_runs_t(e, req);
}

BiPoly signed_pq(Engine& e, Group g, int n, std::optional<Dir> last = std::nullopt) {
  SignedDistributionRequest req;
  req.group = g;
  req.n = n;
  req.sign = g == Group::A ? SignStat::inv_a : (g == Group::B ? SignStat::inv_b : SignStat::inv_d);
  if (last) req.end = EndRestriction{std::nullopt, *last};
  return dist_runs_pq(e, req);
}

int order_for(int n) { return std::max(kDefaultSeriesOrder, n + 1); }

std::string mult_note(const std::string& name, int mult, int claim) {
  return name + " mult " + std::to_string(mult) + " >= " + std::to_string(claim);
}

void check_div(Checker& c, const std::string& name, const UniPoly& f, int claim) {
  if (f.is_zero()) {
    c.note(name + " = 0");
    return;
  }
  int m = one_plus_t_multiplicity(f);
  c.expect(m >= claim, name + " mult " + std::to_string(m) + " < claim " + std::to_string(claim));
  c.note(mult_note(name, m, claim));
}

// Every k the statement covers at this n; returns false if there is none.
bool check_moments(Checker& c, MomentFamily fam, const std::string& name, const UniPoly& f, int n) {
  bool any = false;
  for (int k = 1; moment_in_range(fam, n, k) || 2 * k + 3 <= n; ++k) {
    if (!moment_in_range(fam, n, k)) continue;
    any = true;
    c.expect(moment_check(f, k), name + " k=" + std::to_string(k));
  }
  return any;
}

int max_moment_k(MomentFamily fam, int n) {
  int k = 0;
  while (moment_in_range(fam, n, k + 1)) ++k;
  return k;
}

// Reference tables for R_4, R_5, R_8. The source lists the linear term of
// R_5 as "2"; it is read as 2t.
struct Golden {
  UniPoly r, plus, minus;
  int mult_r, mult_pm;
  std::optional<UniPoly> cof_r, cof_plus, cof_minus;
};

const std::map<int, Golden>& golden() {
  static const std::map<int, Golden> g = {
      {4, {UniPoly{0, 2, 12, 10}, UniPoly{0, 2, 4, 6}, UniPoly{0, 0, 8, 4}, 1, 0, {}, {}, {}}},
      {5, {UniPoly{0, 2, 28, 58, 32}, UniPoly{0, 2, 12, 30, 16}, UniPoly{0, 0, 16, 28, 16}, 1, 0, {}, {}, {}}},
      {8,
       {UniPoly{0, 2, 252, 2766, 9576, 14622, 10332, 2770}, UniPoly{0, 2, 124, 1382, 4792, 7310, 5164, 1386},
        UniPoly{0, 0, 128, 1384, 4784, 7312, 5168, 1384}, 3, 2, UniPoly{0, 2, 246, 2022, 2770},
        UniPoly{0, 2, 120, 1140, 2392, 1386}, UniPoly{0, 0, 128, 1128, 2400, 1384}}},
  };
  return g;
}

UniPoly one_plus_t_pow(int m) { return pow(UniPoly{1, 1}, m); }

std::vector<int> to_vec(std::span<const int> w) { return {w.begin(), w.end()}; }

struct Entry {
  std::string id;
  std::string title;
  Group group;  // selects the enumeration cap
  std::function<CheckLine(Engine&, int)> run;
};

// ---- type A ----

CheckLine golden_tables(Engine& e, int n) {
  auto it = golden().find(n);
  if (it == golden().end()) return skip(n, "no printed table at this n");
  const Golden& g = it->second;
  Checker c(n);
  UniPoly r = runs(e, Group::A, n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::A, n);
  c.equal(r, g.r, "R");
  c.equal(plus, g.plus, "R+");
  c.equal(minus, g.minus, "R-");
  int mr = one_plus_t_multiplicity(r);
  int mp = one_plus_t_multiplicity(plus);
  int mm = one_plus_t_multiplicity(minus);
  c.expect(mr == g.mult_r, "R multiplicity " + std::to_string(mr));
  c.expect(mp == g.mult_pm && mm == g.mult_pm, "R+/- multiplicity " + std::to_string(mp) + "/" + std::to_string(mm));
  if (g.cof_r) {
    c.equal(r, one_plus_t_pow(g.mult_r) * *g.cof_r, "R factorization");
    c.equal(plus, one_plus_t_pow(g.mult_pm) * *g.cof_plus, "R+ factorization");
    c.equal(minus, one_plus_t_pow(g.mult_pm) * *g.cof_minus, "R- factorization");
  }
  c.note("multiplicities R " + std::to_string(mr) + ", R+ " + std::to_string(mp) + ", R- " + std::to_string(mm));
  return c.done();
}

CheckLine thm_sgn_altrun(Engine& e, int n) {
  Checker c(n);
  c.equal(signed_pq(e, Group::A, n), thm_sgn_altrun_biv(n), "SgnAltrun(p,q)");
  return c.done(n == 1 ? Status::oracle_supplied : Status::pass);
}

CheckLine thm_class(Engine& e, int n) {
  if (!thm_class_in_range(n)) return skip(n, "classes need n >= 2");
  Checker c(n);
  BiPoly sum;
  for (EndClass cls : {kAA, kAD, kDA, kDD}) {
    BiPoly f = thm_class_biv(n, cls);
    c.equal(class_poly_a(e, n, cls, true), f, "class");
    sum += f;
  }
  if (n >= 2) c.equal(sum, thm_sgn_altrun_biv(n), "class sum");
  return c.done();
}

CheckLine lem_class_symmetry(Engine& e, int n) {
  if (n < 2) return skip(n, "classes need n >= 2");
  Checker c(n);
  BiPoly aa = class_poly_a(e, n, kAA, true);
  BiPoly ad = class_poly_a(e, n, kAD, true);
  BiPoly da = class_poly_a(e, n, kDA, true);
  BiPoly dd = class_poly_a(e, n, kDD, true);
  if (n % 4 == 0 || n % 4 == 1) {
    c.equal(ad, da.swapped(), "ad(p,q) = da(q,p)");
    c.equal(aa, dd, "aa = dd");
  } else {
    c.expect(ad.is_zero() && da.is_zero(), "ad = da = 0");
    c.equal(aa, -dd, "aa = -dd");
  }
  return c.done();
}

CheckLine thm_recurrence(Engine& e, int n) {
  if (n < 2) return skip(n, "classes need n >= 2");
  Checker c(n);
  for (EndClass cls : {kAA, kAD, kDA, kDD}) c.equal(class_poly_a(e, n, cls, true), recurrence_class_biv(n, cls), "class");
  return c.done(n == 2 ? Status::oracle_supplied : Status::pass);
}

CheckLine lem_odd_cross(Engine& e, int n) {
  if (n < 3 || n % 2 == 0) return skip(n, "stated for odd n >= 3");
  Checker c(n);
  c.equal(BiPoly::q() * class_poly_a(e, n - 1, kAD, true), BiPoly::p() * class_poly_a(e, n - 1, kDA, true),
          "q ad_{n-1} = p da_{n-1}");
  c.equal(class_poly_a(e, n, kAA, true), class_poly_a(e, n - 1, kAA, true), "aa_n = aa_{n-1}");
  return c.done();
}

CheckLine cor_sgn_uni(Engine& e, int n) {
  Checker c(n);
  UniPoly f = cor_sgn_altrun_uni(n);
  c.equal(runs(e, Group::A, n, Parity::all, std::nullopt, SignStat::inv_a), f, "SgnAltrun(t)");
  c.equal(UniPoly::t() * substitute_diag(thm_sgn_altrun_biv(n)), f, "t * diag");
  return c.done(n == 1 ? Status::oracle_supplied : Status::pass);
}

CheckLine rem_explicit_rpm(Engine& e, int n) {
  if (n < 2) return skip(n, "needs n >= 2");
  Checker c(n);
  UniPoly r = runs(e, Group::A, n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::A, n);
  for (int l = 1; l <= n - 1; ++l) {
    c.expect(r_pm_coeff(r.coeff(l), n, l, true) == plus.coeff(l), "R+ coefficient " + std::to_string(l));
    c.expect(r_pm_coeff(r.coeff(l), n, l, false) == minus.coeff(l), "R- coefficient " + std::to_string(l));
  }
  return c.done();
}

CheckLine wilf(Engine& e, int n) {
  if (!divisibility_in_range(DivFamily::R, n)) return skip(n, "stated for n >= 4");
  Checker c(n);
  check_div(c, "R", runs(e, Group::A, n), divisibility_claim(DivFamily::R, n));
  return c.done();
}

CheckLine thm_rpm_div(Engine& e, int n) {
  if (!divisibility_in_range(DivFamily::Rpm, n)) return skip(n, "stated for n >= 4");
  Checker c(n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::A, n);
  int claim = divisibility_claim(DivFamily::Rpm, n);
  check_div(c, "R+", plus, claim);
  check_div(c, "R-", minus, claim);
  return c.done();
}

CheckLine wilf_tightness(Engine& e, int n) {
  if (n < 4 || !(n % 4 == 0 || n % 4 == 1)) return skip(n, "tightness concerns n = 0, 1 (mod 4), n >= 4");
  auto [plus, minus] = dist_runs_parity_split(e, Group::A, n);
  int m = divisibility_claim(DivFamily::R, n);
  int mp = one_plus_t_multiplicity(plus);
  int mm = one_plus_t_multiplicity(minus);
  std::string d = "R+ mult " + std::to_string(mp) + ", R- mult " + std::to_string(mm) + ", m-1 = " + std::to_string(m - 1);
  bool tight = mp == m - 1 && mm == m - 1;
  if (n == 4 || n == 5 || n == 8) return line(n, tight ? Status::pass : Status::fail, d);
  return line(n, Status::info, d + (tight ? " (tight)" : " (not tight)"));
}

CheckLine lem_moment(Engine& e, int n) {
  Checker c(n);
  if (!check_moments(c, MomentFamily::R, "R", runs(e, Group::A, n), n)) return skip(n, "no k with n >= 2k+4");
  c.note("k <= " + std::to_string(max_moment_k(MomentFamily::R, n)));
  return c.done();
}

CheckLine thm_moment_pm(Engine& e, int n) {
  if (max_moment_k(MomentFamily::Rpm, n) == 0) return skip(n, "outside the stated range");
  Checker c(n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::A, n);
  check_moments(c, MomentFamily::Rpm, "R+", plus, n);
  check_moments(c, MomentFamily::Rpm, "R-", minus, n);
  c.note("k <= " + std::to_string(max_moment_k(MomentFamily::Rpm, n)));
  return c.done();
}

CheckLine lem_alt_diff(Engine& e, int n) {
  Checker c(n);
  BigInt d = count_alternating(e, Group::A, n, Parity::plus) - count_alternating(e, Group::A, n, Parity::minus);
  c.expect(d == alt_difference_a(n), "E+ - E- = " + d.str());
  c.note("E+ - E- = " + d.str());
  return c.done(n < 2 ? Status::oracle_supplied : Status::pass);
}

CheckLine thm_alt_egf(Engine& e, int n) {
  Checker c(n);
  int ord = order_for(n);
  c.expect(egf_coeff(egf_alt(AltFamily::A, ord), n) == count_alternating(e, Group::A, n, Parity::all), "E");
  c.expect(egf_coeff(egf_alt(AltFamily::Aplus, ord), n) == count_alternating(e, Group::A, n, Parity::plus), "E+");
  c.expect(egf_coeff(egf_alt(AltFamily::Aminus, ord), n) == count_alternating(e, Group::A, n, Parity::minus), "E-");
  c.note("E = " + count_alternating(e, Group::A, n, Parity::all).str());
  return c.done();
}

CheckLine lem_compl_rev(Engine&, int n) {
  if (n > 8) return skip(n, "exhaustive check runs for n <= 8");
  Checker c(n);
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  const bool rev_flips = n % 4 == 2 || n % 4 == 3;
  std::uint64_t bad_p1 = 0, bad_p2 = 0, bad_r1 = 0, bad_r2 = 0;
  iter_group(Group::A, n, [&](std::span<const int> w) {
    Permutation pi(to_vec(w));
    Permutation cp = complement(pi);
    Permutation rv = reverse(pi);
    auto s = peaks_valleys_a(pi);
    auto sc = peaks_valleys_a(cp);
    if (s.peaks != sc.valleys || s.valleys != sc.peaks) ++bad_p1;
    if (inv_a(pi) + inv_a(cp) != pairs) ++bad_p2;
    auto sr = peaks_valleys_a(rv);
    if (sr.peaks.size() != s.peaks.size() || sr.valleys.size() != s.valleys.size()) ++bad_r1;
    if (((inv_a(pi) + inv_a(rv)) % 2 == 1) != rev_flips) ++bad_r2;
  });
  c.expect(bad_p1 == 0, "Compl peak/valley swap fails " + std::to_string(bad_p1) + " times");
  c.expect(bad_p2 == 0, "Compl inversion sum fails " + std::to_string(bad_p2) + " times");
  c.expect(bad_r1 == 0, "Rev pk/val fails " + std::to_string(bad_r1) + " times");
  c.expect(bad_r2 == 0, "Rev parity fails " + std::to_string(bad_r2) + " times");
  return c.done();
}

CheckLine lem_insertion(Engine&, int n) {
  if (n < 2) return skip(n, "needs n >= 2");
  if (n > 8) return skip(n, "exhaustive check runs for n <= 8");
  std::uint64_t cases = 0, bad = 0;
  iter_group(Group::A, n - 1, [&](std::span<const int> w) {
    auto base = to_vec(w);
    for (int k : peaks_valleys_a(Permutation(base)).peaks) {
      auto psi1 = base;
      psi1.insert(psi1.begin() + (k - 1), n);
      auto psi2 = base;
      psi2.insert(psi2.begin() + k, n);
      Permutation a(psi1), b(psi2);
      auto sa = stats_a(a);
      auto sb = stats_a(b);
      ++cases;
      if (sa.pk != sb.pk || sa.val != sb.val || (sa.inv + sb.inv) % 2 == 0) ++bad;
    }
  });
  return line(n, bad == 0 ? Status::pass : Status::fail,
              std::to_string(cases) + " insertions, " + std::to_string(bad) + " failures");
}

CheckLine rem_insertion_ends(Engine&, int n) {
  if (n < 3) return skip(n, "needs n >= 3");
  if (n > 7) return skip(n, "exhaustive check runs for n <= 7");
  std::uint64_t bad = 0;
  iter_group(Group::A, n - 1, [&](std::span<const int> w) {
    auto base = to_vec(w);
    EndClass from = classify_ends_a(Permutation(base));
    for (int gap = 0; gap <= n - 1; ++gap) {
      auto x = base;
      x.insert(x.begin() + gap, n);
      EndClass to = classify_ends_a(Permutation(x));
      if (to.first != from.first && to.last != from.last) ++bad;
    }
  });
  return line(n, bad == 0 ? Status::pass : Status::fail, std::to_string(bad) + " insertions flip both ends");
}

// ---- types B and D ----

CheckLine cor_inv_b_d(Engine&, int n) {
  if (n > 6) return skip(n, "exhaustive check runs for n <= 6");
  std::uint64_t bad_sum = 0, bad_flip = 0;
  iter_group(Group::B, n, [&](std::span<const int> w) {
    SignedPermutation s(to_vec(w));
    if (inv_b(s) != inv_d(s) + s.negatives()) ++bad_sum;
    bool flips = (inv_b(s) + inv_b(flip_sgn(s))) % 2 == 1;
    if (flips != (n % 2 == 1)) ++bad_flip;
  });
  Checker c(n);
  c.expect(bad_sum == 0, "inv_B = inv_D + negs fails " + std::to_string(bad_sum) + " times");
  c.expect(bad_flip == 0, "FlipSgn parity rule fails " + std::to_string(bad_flip) + " times");
  return c.done();
}

CheckLine lem_flipsgn(Engine& e, int n) {
  Checker c(n);
  BiPoly a = signed_pq(e, Group::B, n, Dir::ascent);
  BiPoly d = signed_pq(e, Group::B, n, Dir::descent);
  c.equal(a, n % 2 == 1 ? -d.swapped() : d.swapped(), "end a vs FlipSgn image of end d");
  return c.done();
}

CheckLine subsets(Engine& e, Group g, int n) {
  if (n < 3) return skip(n, "the partition starts at n = 3");
  Checker c(n);
  SubsetTable t = subset_table(e, g, n);
  const int kmax = g == Group::B ? 8 : 9;
  const char* tag = g == Group::B ? "B" : "D";
  for (int side = 0; side < 2; ++side) {
    Dir end = side == 0 ? Dir::ascent : Dir::descent;
    const std::string sname = side == 0 ? "a" : "d";
    BiPoly sum = t.by_end[side][0];
    c.expect(t.by_end[side][0].is_zero(), "words outside the partition");
    for (int k = 1; k <= kmax; ++k) {
      sum += t.by_end[side][k];
      if (k != 8) c.expect(t.by_end[side][k].is_zero(), tag + std::to_string(k) + "," + sname + " = " + to_string(t.by_end[side][k]));
    }
    c.equal(sum, signed_pq(e, g, n, end), std::string("partition sum ") + sname);
  }
  c.note("subset 8: a " + to_string(t.by_end[0][8]) + ", d " + to_string(t.by_end[1][8]));
  return c.done();
}

CheckLine t_cancel(Engine& e, Group g, int n) {
  Checker c(n);
  for (Dir end : {Dir::ascent, Dir::descent}) {
    const std::string sname = end == Dir::ascent ? "a" : "d";
    auto T = build_T(n, end);
    c.expect(T.size() == (std::size_t{1} << (n / 2)), "|T| = " + std::to_string(T.size()));
    if (n >= 3 && end == Dir::ascent) {
      for (const auto& s : T) {
        int k = g == Group::B ? b_subset_index(s.word(), end) : d_subset_index(s.word(), end);
        c.expect(k == 8 || (g == Group::D && !s.in_d()), "T word outside subset 8");
      }
    }
    c.expect(subset8_minus_t(e, g, n, end).is_zero(), "subset 8 minus T, end " + sname);
  }
  return c.done();
}

CheckLine thm_main(Engine& e, Group g, int n) {
  Checker c(n);
  EndTriple f = g == Group::B ? thm_b_formulas(n) : thm_d_formulas(n);
  c.equal(signed_pq(e, g, n, Dir::ascent), f.end_a, "end a");
  c.equal(signed_pq(e, g, n, Dir::descent), f.end_d, "end d");
  c.equal(signed_pq(e, g, n), f.total, "total");
  return c.done();
}

CheckLine cor_uni(Engine& e, Group g, int n) {
  Checker c(n);
  UniPoly f = g == Group::B ? cor_b_uni(n) : cor_d_uni(n);
  c.equal(runs(e, g, n, Parity::all, std::nullopt, g == Group::B ? SignStat::inv_b : SignStat::inv_d), f, "signed t");
  EndTriple t = g == Group::B ? thm_b_formulas(n) : thm_d_formulas(n);
  c.equal(UniPoly::t() * substitute_diag(t.total), f, "t * diag");
  return c.done();
}

CheckLine lem_bgt_signed(Engine& e, int n) {
  if (n % 2 == 0) return skip(n, "stated for odd n");
  Checker c(n);
  c.equal(runs(e, Group::B, n, Parity::all, FirstSign::positive, SignStat::inv_b),
          UniPoly::t() * pow(UniPoly{1, 0, -1}, n / 2), "signed R^{B,>}");
  return c.done();
}

CheckLine zhao_div(Engine& e, int n) {
  Checker c(n);
  int m = divisibility_claim(DivFamily::RB, n);
  check_div(c, "RB>", runs(e, Group::B, n, Parity::all, FirstSign::positive), divisibility_claim(DivFamily::RBgt, n));
  check_div(c, "RB", runs(e, Group::B, n), m);
  return c.done();
}

CheckLine thm_b_pm_div(Engine& e, int n) {
  Checker c(n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::B, n);
  int m = divisibility_claim(DivFamily::RBpm, n);
  check_div(c, "RB+", plus, m);
  check_div(c, "RB-", minus, m);
  return c.done();
}

CheckLine thm_b_moments(Engine& e, int n) {
  if (max_moment_k(MomentFamily::RB, n) == 0) return skip(n, "no k with n >= 2k+3");
  Checker c(n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::B, n);
  check_moments(c, MomentFamily::RBgt, "RB>", runs(e, Group::B, n, Parity::all, FirstSign::positive), n);
  check_moments(c, MomentFamily::RB, "RB", runs(e, Group::B, n), n);
  check_moments(c, MomentFamily::RBpm, "RB+", plus, n);
  check_moments(c, MomentFamily::RBpm, "RB-", minus, n);
  c.note("k <= " + std::to_string(max_moment_k(MomentFamily::RB, n)));
  return c.done();
}

CheckLine gao_sun(Engine& e, int n) {
  Checker c(n);
  GaoSun f = gao_sun_differences(n);
  c.equal(runs(e, Group::D, n, Parity::all, FirstSign::positive) -
              runs(e, Group::BminusD, n, Parity::all, FirstSign::positive),
          f.first_positive_diff, "R^{D,>} - R^{B-D,>}");
  c.equal(runs(e, Group::D, n) - runs(e, Group::BminusD, n), f.total_diff, "R^D - R^{B-D}");
  return c.done();
}

CheckLine b_equals_d(Engine& e, int n) {
  Checker c(n);
  auto [plus, minus] = dist_runs_parity_split(e, Group::B, n);
  c.equal(plus, runs(e, Group::D, n), "R^{B,+} = R^D");
  c.equal(minus, runs(e, Group::BminusD, n), "R^{B,-} = R^{B-D}");
  return c.done();
}

CheckLine thm_d_div(Engine& e, int n) {
  Checker c(n);
  int m = divisibility_claim(DivFamily::RD, n);
  check_div(c, "RD", runs(e, Group::D, n), m);
  check_div(c, "RBmD", runs(e, Group::BminusD, n), m);
  auto [dp, dm] = dist_runs_parity_split(e, Group::D, n);
  auto [bp, bm] = dist_runs_parity_split(e, Group::BminusD, n);
  check_div(c, "RD+", dp, m);
  check_div(c, "RD-", dm, m);
  check_div(c, "RBmD+", bp, m);
  check_div(c, "RBmD-", bm, m);
  return c.done();
}

CheckLine thm_d_moments(Engine& e, int n) {
  if (max_moment_k(MomentFamily::RD, n) == 0) return skip(n, "no k with n >= 2k+3");
  Checker c(n);
  auto [dp, dm] = dist_runs_parity_split(e, Group::D, n);
  check_moments(c, MomentFamily::RDgt, "RD>", runs(e, Group::D, n, Parity::all, FirstSign::positive), n);
  check_moments(c, MomentFamily::RBmDgt, "RBmD>", runs(e, Group::BminusD, n, Parity::all, FirstSign::positive), n);
  check_moments(c, MomentFamily::RD, "RD", runs(e, Group::D, n), n);
  check_moments(c, MomentFamily::RDpm, "RD+", dp, n);
  check_moments(c, MomentFamily::RDpm, "RD-", dm, n);
  c.note("k <= " + std::to_string(max_moment_k(MomentFamily::RD, n)));
  return c.done();
}

// ---- alternating permutations and snakes ----

CheckLine lem_alt_b_halves(Engine& e, int n) {
  Checker c(n);
  BigInt all = count_alternating(e, Group::B, n, Parity::all);
  c.expect(all % 2 == 0, "E^B odd");
  BigInt half = all / 2;
  c.expect(count_alternating(e, Group::B, n, Parity::plus) == half, "E^{B,+}");
  c.expect(count_alternating(e, Group::B, n, Parity::minus) == half, "E^{B,-}");
  c.expect(count_alternating(e, Group::D, n, Parity::all) == half, "E^D");
  c.expect(count_alternating(e, Group::BminusD, n, Parity::all) == half, "E^{B-D}");
  c.note("E^B = " + all.str());
  return c.done();
}

void egf_equal(Checker& c, AltFamily f, int n, const BigInt& oracle) {
  BigInt v = egf_coeff(egf_alt(f, order_for(n)), n);
  c.expect(v == oracle, family_name(f) + ": EGF " + v.str() + ", oracle " + oracle.str());
}

void egf_equal(Checker& c, SnakeFamily f, int n, const BigInt& oracle) {
  BigInt v = egf_coeff(egf_snakes(f, order_for(n)), n);
  c.expect(v == oracle, family_name(f) + ": EGF " + v.str() + ", oracle " + oracle.str());
}

CheckLine thm_alt_b_egf(Engine& e, int n) {
  Checker c(n);
  egf_equal(c, AltFamily::B, n, count_alternating(e, Group::B, n, Parity::all));
  egf_equal(c, AltFamily::Bplus, n, count_alternating(e, Group::B, n, Parity::plus));
  egf_equal(c, AltFamily::Bminus, n, count_alternating(e, Group::B, n, Parity::minus));
  egf_equal(c, AltFamily::D, n, count_alternating(e, Group::D, n, Parity::all));
  egf_equal(c, AltFamily::BminusD, n, count_alternating(e, Group::BminusD, n, Parity::all));
  return c.done();
}

CheckLine lem_alt_d_halves(Engine& e, int n) {
  if (n < 2) return skip(n, "stated for n >= 2");
  Checker c(n);
  for (Group g : {Group::D, Group::BminusD}) {
    BigInt all = count_alternating(e, g, n, Parity::all);
    BigInt p = count_alternating(e, g, n, Parity::plus);
    BigInt m = count_alternating(e, g, n, Parity::minus);
    std::string name = g == Group::D ? "D" : "B-D";
    c.expect(p == m && p + m == all, name + ": plus " + p.str() + ", minus " + m.str());
  }
  return c.done();
}

CheckLine thm_alt_d_egf(Engine& e, int n) {
  Checker c(n);
  egf_equal(c, AltFamily::Dplus, n, count_alternating(e, Group::D, n, Parity::plus));
  egf_equal(c, AltFamily::Dminus, n, count_alternating(e, Group::D, n, Parity::minus));
  return c.done();
}

CheckLine thm_alt_bmd_egf(Engine& e, int n) {
  Checker c(n);
  bool mismatch = false;
  std::string shown;
  for (bool plus : {true, false}) {
    BigInt oracle = count_alternating(e, Group::BminusD, n, plus ? Parity::plus : Parity::minus);
    std::string printed;
    try {
      BigInt v = egf_coeff(egf_alt(plus ? AltFamily::BminusDplus : AltFamily::BminusDminus, order_for(n)), n);
      printed = v.str();
      if (v != oracle) mismatch = true;
    } catch (const IntegrityError&) {
      printed = "non-integer";
      mismatch = true;
    }
    BigInt refit = egf_coeff(egf_alt_bminusd_refit(plus, order_for(n)), n);
    c.expect(refit == oracle, std::string(plus ? "+" : "-") + " refit " + refit.str() + " vs oracle " + oracle.str());
    shown += std::string(shown.empty() ? "" : "; ") + (plus ? "+" : "-") + ": oracle " + oracle.str() +
             ", printed " + printed + ", refit " + refit.str();
  }
  if (n >= 2)
    c.expect(count_alternating(e, Group::BminusD, n, Parity::plus) ==
                 count_alternating(e, Group::BminusD, n, Parity::minus),
             "E^{B-D,+} = E^{B-D,-}");
  c.note(shown);
  return c.done(mismatch ? Status::mismatch_documented : Status::pass);
}

CheckLine thm_springer(Engine& e, int n) {
  Checker c(n);
  egf_equal(c, SnakeFamily::B, n, count_snakes(e, SnakeFamily::B, n));
  c.note("S^B = " + count_snakes(e, SnakeFamily::B, n).str());
  return c.done();
}

CheckLine lem_snake_b_diff(Engine& e, int n) {
  Checker c(n);
  BigInt d = count_snakes(e, SnakeFamily::Bplus, n) - count_snakes(e, SnakeFamily::Bminus, n);
  c.expect(d == snake_difference(n), "S^{B,+} - S^{B,-} = " + d.str());
  return c.done();
}

CheckLine thm_gao_sun_snakes(Engine& e, int n) {
  Checker c(n);
  BigInt d = count_snakes(e, SnakeFamily::D, n) - count_snakes(e, SnakeFamily::BminusD, n);
  c.expect(d == snake_difference(n), "S^D - S^{B-D} = " + d.str());
  return c.done();
}

CheckLine thm_snakes_b_egf(Engine& e, int n) {
  Checker c(n);
  for (SnakeFamily f : {SnakeFamily::Bplus, SnakeFamily::Bminus, SnakeFamily::D, SnakeFamily::BminusD})
    egf_equal(c, f, n, count_snakes(e, f, n));
  c.expect(count_snakes(e, SnakeFamily::Bplus, n) == count_snakes(e, SnakeFamily::D, n), "S^{B,+} = S^D");
  c.expect(count_snakes(e, SnakeFamily::Bminus, n) == count_snakes(e, SnakeFamily::BminusD, n), "S^{B,-} = S^{B-D}");
  return c.done();
}

CheckLine lem_snake_l_subsets(Engine& e, int n) {
  if (n < 3) return skip(n, "stated for n >= 3");
  Checker c(n);
  auto t = snake_subset_table(e, n);
  BigInt total = 0;
  std::string counts;
  for (int k = 1; k <= 4; ++k) {
    total += t[k][0] + t[k][1];
    counts += (k > 1 ? ", " : "") + std::string("L") + std::to_string(k) + " " + t[k][0].str() + "/" + t[k][1].str();
    if (k <= 3) c.expect(t[k][0] == t[k][1], "L" + std::to_string(k) + " unbalanced");
  }
  c.expect(total == count_snakes(e, SnakeFamily::D, n), "L subsets do not re-sum to S^D");
  BigInt d = count_snakes(e, SnakeFamily::Dplus, n) - count_snakes(e, SnakeFamily::Dminus, n);
  c.expect(t[4][0] - t[4][1] == d, "L4 difference");
  c.note(counts);
  return c.done();
}

CheckLine thm_snake_d_diff(Engine& e, int n) {
  Checker c(n);
  auto diff = [&](SnakeFamily p, SnakeFamily m, int k) -> BigInt {
    if (k == 0) return p == SnakeFamily::Dplus ? 1 : 0;  // S_0^{D,+} = 1, others 0
    return count_snakes(e, p, k) - count_snakes(e, m, k);
  };
  BigInt dd = diff(SnakeFamily::Dplus, SnakeFamily::Dminus, n);
  BigInt bd = diff(SnakeFamily::BminusDplus, SnakeFamily::BminusDminus, n);
  c.expect(dd == snake_difference(n), "S^{D,+} - S^{D,-} = " + dd.str());
  c.expect(bd == 0, "S^{B-D,+} - S^{B-D,-} = " + bd.str());
  if (n >= 3) {
    c.expect(dd == -diff(SnakeFamily::Dplus, SnakeFamily::Dminus, n - 2), "D jump-by-2");
    c.expect(bd == -diff(SnakeFamily::BminusDplus, SnakeFamily::BminusDminus, n - 2), "B-D jump-by-2");
  }
  return c.done();
}

CheckLine thm_snakes_d_egf(Engine& e, int n) {
  Checker c(n);
  for (SnakeFamily f : {SnakeFamily::Dplus, SnakeFamily::Dminus, SnakeFamily::BminusDplus, SnakeFamily::BminusDminus})
    egf_equal(c, f, n, count_snakes(e, f, n));
  return c.done();
}

CheckLine inv_maps(Engine&, int n) {
  if (n > 6) return skip(n, "exhaustive check runs for n <= 6");
  Checker c(n);
  int ran = 0;
  for (MapId id : kAllMaps) {
    if (n < map_min_n(id)) continue;
    ++ran;
    MapCheck m = check_map(id, n);
    c.expect(m.passed(), std::string(map_name(id)) + ": involution " + std::to_string(m.not_involution) + ", stats " +
                             std::to_string(m.stat_changed) + ", parity " + std::to_string(m.parity_kept) +
                             ", codomain " + std::to_string(m.outside_codomain));
  }
  c.note(std::to_string(ran) + " maps");
  return c.done();
}

template <Group G, CheckLine (*F)(Engine&, Group, int)>
CheckLine bind_group(Engine& e, int n) {
  return F(e, G, n);
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"golden-tables", "reference R_4, R_5, R_8 and their parity splits", Group::A, golden_tables},
      {"thm-sgn-altrun", "signed bivariate peak/valley sum over S_n", Group::A, thm_sgn_altrun},
      {"thm-class", "class formulas for the signed sum", Group::A, thm_class},
      {"lem-class-symmetry", "Rev/Compl relations between the classes", Group::A, lem_class_symmetry},
      {"thm-recurrence", "odd/even class recurrences", Group::A, thm_recurrence},
      {"lem-odd-cross", "odd n cross relation q ad = p da", Group::A, lem_odd_cross},
      {"cor-sgn-altrun-uni", "univariate signed run polynomial", Group::A, cor_sgn_uni},
      {"rem-explicit-rpm", "explicit R^+/- coefficients via G_{n,l}", Group::A, rem_explicit_rpm},
      {"wilf", "(1+t)-divisibility of R_n", Group::A, wilf},
      {"thm-rpm-div", "(1+t)-divisibility of R_n^+/-", Group::A, thm_rpm_div},
      {"wilf-tightness", "R_n^+/- multiplicity is exactly m-1", Group::A, wilf_tightness},
      {"lem-moment", "odd/even moment identity for R_n", Group::A, lem_moment},
      {"thm-moment-pm", "odd/even moment identity for R_n^+/-", Group::A, thm_moment_pm},
      {"lem-alt-diff", "E_n^+ - E_n^- table", Group::A, lem_alt_diff},
      {"thm-alt-egf", "alternating EGFs over S_n", Group::A, thm_alt_egf},
      {"lem-compl-rev", "Compl and Rev properties", Group::A, lem_compl_rev},
      {"lem-insertion", "inserting n around a peak", Group::A, lem_insertion},
      {"rem-insertion-ends", "inserting n never flips both end classes", Group::A, rem_insertion_ends},
      {"cor-inv-b-d", "inv_B = inv_D + negatives; FlipSgn parity", Group::B, cor_inv_b_d},
      {"lem-flipsgn", "FlipSgn relation between the two end classes", Group::B, lem_flipsgn},
      {"lem-b-subsets", "type B subsets 1..7 cancel", Group::B, bind_group<Group::B, subsets>},
      {"lem-b8-minus-t", "type B subset 8 minus T cancels", Group::B, bind_group<Group::B, t_cancel>},
      {"thm-b-main", "signed peak/valley sums over B_n", Group::B, bind_group<Group::B, thm_main>},
      {"cor-b-uni", "univariate signed run polynomial over B_n", Group::B, bind_group<Group::B, cor_uni>},
      {"lem-bgt-signed", "signed runs over B_n with positive first letter", Group::B, lem_bgt_signed},
      {"zhao-div", "(1+t)-divisibility of R^{B,>} and R^B", Group::B, zhao_div},
      {"thm-b-pm-div", "(1+t)-divisibility of R^{B,+/-}", Group::B, thm_b_pm_div},
      {"thm-b-moments", "moment identities for R^{B,>}, R^B, R^{B,+/-}", Group::B, thm_b_moments},
      {"lem-d-subsets", "type D subsets 1..7 and 9 cancel", Group::D, bind_group<Group::D, subsets>},
      {"lem-d8-minus-t", "type D subset 8 minus T cancels", Group::D, bind_group<Group::D, t_cancel>},
      {"thm-d-main", "signed peak/valley sums over D_n", Group::D, bind_group<Group::D, thm_main>},
      {"cor-d-uni", "univariate signed run polynomial over D_n", Group::D, bind_group<Group::D, cor_uni>},
      {"thm-gao-sun-diff", "R^{D,>} - R^{B-D,>} and R^D - R^{B-D}", Group::D, gao_sun},
      {"b-equals-d", "R^{B,+} = R^D and R^{B,-} = R^{B-D}", Group::D, b_equals_d},
      {"thm-d-div", "(1+t)-divisibility of the type D families", Group::D, thm_d_div},
      {"thm-d-moments", "moment identities for the type D families", Group::D, thm_d_moments},
      {"lem-alt-b-halves", "E^{B,+} = E^{B,-} = E^D = E^{B-D} = E^B/2", Group::B, lem_alt_b_halves},
      {"thm-alt-b-egf", "alternating EGFs over B_n, D_n, B_n - D_n", Group::B, thm_alt_b_egf},
      {"lem-alt-d-halves", "E^{D,+/-} and E^{B-D,+/-} halves", Group::D, lem_alt_d_halves},
      {"thm-alt-d-egf", "alternating EGFs over D_n^+/-", Group::D, thm_alt_d_egf},
      {"thm-alt-bmd-egf", "alternating EGFs over (B_n - D_n)^+/-", Group::D, thm_alt_bmd_egf},
      {"thm-springer", "snake EGF over B_n", Group::B, thm_springer},
      {"lem-snake-b-diff", "S^{B,+} - S^{B,-} table", Group::B, lem_snake_b_diff},
      {"thm-gao-sun-snakes", "S^D - S^{B-D} table", Group::D, thm_gao_sun_snakes},
      {"thm-snakes-b-egf", "snake EGFs over B_n^+/-, D_n, B_n - D_n", Group::B, thm_snakes_b_egf},
      {"lem-snake-l-subsets", "L^1..L^3 balance in Snake^D", Group::D, lem_snake_l_subsets},
      {"thm-snake-d-diff", "S^{D,+/-} and S^{B-D,+/-} differences", Group::D, thm_snake_d_diff},
      {"thm-snakes-d-egf", "snake EGFs over D_n^+/- and (B_n - D_n)^+/-", Group::D, thm_snakes_d_egf},
      {"inv-maps", "sign-reversing maps", Group::B, inv_maps},
  };
  return r;
}

const Entry* find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

int cap_for(const Engine& e, Group g) { return g == Group::A ? e.cap_a() : e.cap_bd(); }

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    case Status::oracle_supplied: return "oracle-supplied";
    case Status::info: return "info";
    case Status::mismatch_documented: return "formula-mismatch-documented";
  }
  return "?";
}

bool TheoremReport::passed() const {
  return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == Status::fail; });
}

bool Report::passed() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremReport& t) { return t.passed(); });
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) { return find_entry(id) != nullptr; }

std::string theorem_title(const std::string& id) {
  const Entry* e = find_entry(id);
  if (!e) throw DomainError("unknown theorem id: " + id);
  return e->title;
}

Report verify(Engine& e, const std::string& id, int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min)
    throw DomainError("need 1 <= n-min <= n-max, got " + std::to_string(n_min) + ".." + std::to_string(n_max));
  std::vector<const Entry*> todo;
  const bool all = id == "all";
  if (all) {
    for (const auto& en : registry()) todo.push_back(&en);
  } else {
    const Entry* en = find_entry(id);
    if (!en) throw DomainError("unknown theorem id: " + id);
    if (n_max > cap_for(e, en->group))
      throw DomainError(id + " enumerates up to n = " + std::to_string(cap_for(e, en->group)));
    todo.push_back(en);
  }
  Report rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (const Entry* en : todo) {
    TheoremReport tr;
    tr.id = en->id;
    tr.title = en->title;
    for (int n = n_min; n <= n_max; ++n) {
      if (n > cap_for(e, en->group)) {
        tr.lines.push_back(skip(n, "beyond the enumeration cap"));
        continue;
      }
      tr.lines.push_back(en->run(e, n));
    }
    rep.theorems.push_back(std::move(tr));
  }
  return rep;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  std::size_t fails = 0;
  for (const auto& t : r.theorems) {
    for (const auto& l : t.lines) {
      os << t.id << " n=" << l.n << ' ' << status_name(l.status);
      if (!l.detail.empty()) os << "  " << l.detail;
      os << '\n';
      fails += l.status == Status::fail;
    }
  }
  os << (r.passed() ? "PASS" : "FAIL") << ": " << r.theorems.size() << " theorem(s), " << fails << " failing line(s)\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["passed"] = r.passed();
  j["theorems"] = nlohmann::ordered_json::array();
  for (const auto& t : r.theorems) {
    nlohmann::ordered_json tj;
    tj["id"] = t.id;
    tj["title"] = t.title;
    tj["passed"] = t.passed();
    tj["lines"] = nlohmann::ordered_json::array();
    for (const auto& l : t.lines)
      tj["lines"].push_back({{"n", l.n}, {"status", status_name(l.status)}, {"detail", l.detail}});
    j["theorems"].push_back(std::move(tj));
  }
  return j.dump(2) + "\n";
}

}  // namespace weylruns
