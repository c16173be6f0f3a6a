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

#include "weylruns/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "census.hpp"
#include "kernels.hpp"
#include "weylruns/errors.hpp"

namespace weylruns {

namespace {

using detail::Census;

// Signed (pk, val) grid, row-major pk * dim + val.
struct Grid {
  int dim = 0;
  std::vector<std::int64_t> cells;
  explicit Grid(int d = 0) : dim(d), cells(static_cast<std::size_t>(d) * d, 0) {}
  void add(int pk, int val, std::int64_t v) { cells[static_cast<std::size_t>(pk) * dim + val] += v; }
  Grid& operator+=(const Grid& o) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += o.cells[i];
    return *this;
  }
};

UniPoly grid_to_t(const Grid& g) {
  UniPoly r;
  for (int pk = 0; pk < g.dim; ++pk)
    for (int val = 0; val < g.dim; ++val)
      if (auto c = g.cells[static_cast<std::size_t>(pk) * g.dim + val]) r.add_term(BigInt(c), pk + val + 1);
  return r;
}

BiPoly grid_to_pq(const Grid& g) {
  BiPoly r;
  for (int pk = 0; pk < g.dim; ++pk)
    for (int val = 0; val < g.dim; ++val)
      if (auto c = g.cells[static_cast<std::size_t>(pk) * g.dim + val]) r.add_term(BigInt(c), pk, val);
  return r;
}

void validate(const SignedDistributionRequest& req) {
  const bool a = req.group == Group::A;
  switch (req.sign) {
    case SignStat::none: break;
    case SignStat::inv_a:
      if (!a) throw DomainError("inv_a signs only type A distributions");
      break;
    case SignStat::inv_b:
      if (req.group != Group::B) throw DomainError("inv_b signs only type B distributions");
      break;
    case SignStat::inv_d:
      if (a) throw DomainError("inv_d does not apply to type A");
      break;
  }
  if (req.end) {
    if (a && req.n < 2) throw DomainError("type A end classes need n >= 2");
    if (!a && req.end->first) throw DomainError("type B/D end classes have no first pair");
  }
  if (a && req.first_letter_sign) throw DomainError("first-letter sign applies to types B/D only");
}

Grid filtered_grid(Engine& e, const SignedDistributionRequest& req) {
  validate(req);
  const Census& c = e.census(req.group, req.n);
  const bool a = req.group == Group::A;
  Grid g(c.dim);
  for (int pk = 0; pk < c.dim; ++pk)
    for (int val = 0; val < c.dim; ++val)
      for (unsigned f = 0; f < Census::kFlags; ++f) {
        std::uint64_t cnt = c.cells[c.index(pk, val, f)];
        if (cnt == 0) continue;
        const bool negodd = f & Census::kNegOdd;
        if (req.group == Group::D && negodd) continue;
        if (req.group == Group::BminusD && !negodd) continue;
        const bool par_own = f & Census::kPar;          // inv_a or inv_b parity
        const bool par_d = par_own != negodd;             // inv_d parity
        if (req.end) {
          if (req.end->first) {
            bool desc = f & Census::kFirst;
            if (desc != (*req.end->first == Dir::descent)) continue;
          }
          if (req.end->last) {
            bool desc = f & Census::kLast;
            if (desc != (*req.end->last == Dir::descent)) continue;
          }
        }
        if (req.first_letter_sign) {
          bool neg = f & Census::kFirst;
          if (neg != (*req.first_letter_sign == FirstSign::negative)) continue;
        }
        if (req.parity != Parity::all) {
          bool odd = (a || req.group == Group::B) ? par_own : par_d;
          if (odd != (req.parity == Parity::minus)) continue;
        }
        bool negative = false;
        if (req.sign == SignStat::inv_a || req.sign == SignStat::inv_b) negative = par_own;
        else if (req.sign == SignStat::inv_d) negative = par_d;
        auto v = static_cast<std::int64_t>(cnt);
        g.add(pk, val, negative ? -v : v);
      }
  return g;
}

int abs_pos(const int* w, int n, int value) {
  for (int i = 0; i < n; ++i)
    if (std::abs(w[i]) == value) return i;
  return -1;
}

bool positive(int x) { return x > 0; }

// Shared position/sign part of the B and D subset tests.
int subset_core(const int* w, int n, bool same_end) {
  int pn = abs_pos(w, n, n);
  int pm = abs_pos(w, n, n - 1);
  int gap = std::abs(pn - pm);
  if (gap > 1) return same_end ? 1 : 2;
  bool last_in = std::abs(w[n - 1]) >= n - 1;
  if (!last_in) return same_end ? 3 : 4;
  if (positive(w[n - 2]) != positive(w[n - 1])) return same_end ? 5 : 6;
  return same_end ? 8 : 7;
}

Dir end_of_reduced(const int* w, int n, int* negs_out) {
  int buf[kMaxWordB];
  int m = 0;
  int negs = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(w[i]) < n - 1) {
      buf[m++] = w[i];
      negs += w[i] < 0;
    }
  if (negs_out) *negs_out = negs;
  return detail::last_dir_b(buf, m);
}

int b_index_raw(const int* w, int n, Dir end) {
  if (n < 3 || detail::last_dir_b(w, n) != end) return 0;
  return subset_core(w, n, end_of_reduced(w, n, nullptr) == end);
}

int d_index_raw(const int* w, int n, Dir end) {
  if (n < 3 || detail::negatives(w, n) % 2 != 0 || detail::last_dir_b(w, n) != end) return 0;
  int negs = 0;
  Dir e2 = end_of_reduced(w, n, &negs);
  if (negs % 2 != 0) return 9;
  return subset_core(w, n, e2 == end);
}

bool snake_raw(const int* w, int n) { return w[0] > 0 && detail::alternating(w, n); }

int snake_index_raw(const int* w, int n) {
  if (n < 3 || detail::negatives(w, n) % 2 != 0 || !snake_raw(w, n)) return 0;
  int gap = std::abs(abs_pos(w, n, n) - abs_pos(w, n, n - 1));
  if (gap > 1) return 1;
  if (std::abs(w[n - 1]) < n - 1) return 2;
  return positive(w[n - 2]) != positive(w[n - 1]) ? 3 : 4;
}

// Parallel signed sum over the members of g for which pick(w) holds.
template <class Pick>
Grid scan_grid(Engine& e, Group g, int n, bool weight_inv_b, Pick pick) {
  e.check(g, n);
  auto parts = detail::run_slices<Grid>(
      ambient_size(g, n), e.workers(), [&] { return Grid(n + 1); },
      [&](std::uint64_t lo, std::uint64_t hi, Grid& out) {
        detail::for_each_rank(g, n, lo, hi, [&](const int* w) {
          if (!pick(w)) return;
          long len = weight_inv_b ? detail::inv_b(w, n) : detail::inv_d(w, n);
          detail::PkVal pv = detail::pkval_b(w, n);
          out.add(pv.pk, pv.val, (len & 1) ? -1 : 1);
        });
      });
  Grid total(n + 1);
  for (const auto& p : parts) total += p;
  return total;
}

void require_subset_args(int n, int k, int kmax) {
  if (n < 3) throw DomainError("subset partitions need n >= 3");
  if (k < 1 || k > kmax) throw DomainError("subset number must lie in 1.." + std::to_string(kmax));
}

}  // namespace

UniPoly dist_runs_t(Engine& e, const SignedDistributionRequest& req) {
  return grid_to_t(filtered_grid(e, req));
}

BiPoly dist_runs_pq(Engine& e, const SignedDistributionRequest& req) {
  return grid_to_pq(filtered_grid(e, req));
}

std::pair<UniPoly, UniPoly> dist_runs_parity_split(Engine& e, Group g, int n) {
  SignedDistributionRequest req;
  req.group = g;
  req.n = n;
  req.parity = Parity::plus;
  UniPoly plus = dist_runs_t(e, req);
  req.parity = Parity::minus;
  return {plus, dist_runs_t(e, req)};
}

BiPoly class_poly_a(Engine& e, int n, EndClass cls, bool signed_sum) {
  if (n < 2) throw DomainError("type A end classes need n >= 2");
  if (!cls.has_first) throw DomainError("type A classes carry both ends");
  SignedDistributionRequest req;
  req.group = Group::A;
  req.n = n;
  req.sign = signed_sum ? SignStat::inv_a : SignStat::none;
  req.end = EndRestriction{cls.first, cls.last};
  return dist_runs_pq(e, req);
}

int b_subset_index(std::span<const int> w, Dir end) {
  return b_index_raw(w.data(), static_cast<int>(w.size()), end);
}

int d_subset_index(std::span<const int> w, Dir end) {
  return d_index_raw(w.data(), static_cast<int>(w.size()), end);
}

std::vector<int> delete_top_two(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out;
  for (int x : w)
    if (std::abs(x) < n - 1) out.push_back(x);
  return out;
}

BiPoly subset_contribution_b(Engine& e, int n, int k, Dir end) {
  require_subset_args(n, k, 8);
  return grid_to_pq(scan_grid(e, Group::B, n, true, [&](const int* w) { return b_index_raw(w, n, end) == k; }));
}

BiPoly subset_contribution_d(Engine& e, int n, int k, Dir end) {
  require_subset_args(n, k, 9);
  return grid_to_pq(scan_grid(e, Group::D, n, false, [&](const int* w) { return d_index_raw(w, n, end) == k; }));
}

SubsetTable subset_table(Engine& e, Group g, int n) {
  if (g != Group::B && g != Group::D) throw DomainError("subset partitions exist for types B and D only");
  if (n < 3) throw DomainError("subset partitions need n >= 3");
  e.check(g, n);
  const bool b = g == Group::B;
  using Cells = std::vector<Grid>;  // (end * 10 + k)
  auto parts = detail::run_slices<Cells>(
      ambient_size(g, n), e.workers(), [&] { return Cells(20, Grid(n + 1)); },
      [&](std::uint64_t lo, std::uint64_t hi, Cells& out) {
        detail::for_each_rank(g, n, lo, hi, [&](const int* w) {
          Dir end = detail::last_dir_b(w, n);
          int k = b ? b_index_raw(w, n, end) : d_index_raw(w, n, end);
          long len = b ? detail::inv_b(w, n) : detail::inv_d(w, n);
          detail::PkVal pv = detail::pkval_b(w, n);
          out[(end == Dir::ascent ? 0 : 10) + k].add(pv.pk, pv.val, (len & 1) ? -1 : 1);
        });
      });
  SubsetTable t;
  for (int i = 0; i < 20; ++i) {
    Grid sum(n + 1);
    for (const auto& p : parts) sum += p[i];
    t.by_end[i / 10][i % 10] = grid_to_pq(sum);
  }
  return t;
}

std::vector<SignedPermutation> build_T(int n, Dir end) {
  if (n < 1 || n > kMaxWordB) throw DomainError("T-sets need 1 <= n <= " + std::to_string(kMaxWordB));
  const bool asc = end == Dir::ascent;
  std::vector<std::vector<int>> cur;
  int m;
  if (n % 2 == 1) {
    cur = {{asc ? 1 : -1}};
    m = 1;
  } else {
    cur = asc ? std::vector<std::vector<int>>{{1, 2}, {-2, -1}}
              : std::vector<std::vector<int>>{{2, 1}, {-1, -2}};
    m = 2;
  }
  while (m < n) {
    m += 2;
    std::vector<std::vector<int>> next;
    next.reserve(cur.size() * 2);
    for (const auto& base : cur) {
      auto t1 = base;
      auto t2 = base;
      if (asc) {
        t1.insert(t1.end(), {m - 1, m});
        t2.insert(t2.end(), {-m, -(m - 1)});
      } else {
        t1.insert(t1.end(), {m, m - 1});
        t2.insert(t2.end(), {-(m - 1), -m});
      }
      next.push_back(std::move(t1));
      next.push_back(std::move(t2));
    }
    cur = std::move(next);
  }
  std::vector<SignedPermutation> out;
  out.reserve(cur.size());
  for (auto& w : cur) out.emplace_back(std::move(w));
  return out;
}

BiPoly t_contribution(int n, Dir end, Group g) {
  if (g != Group::B && g != Group::D) throw DomainError("T contributions exist for types B and D only");
  BiPoly r;
  for (const auto& s : build_T(n, end)) {
    const int* w = s.word().data();
    if (g == Group::D && !s.in_d()) continue;
    long len = g == Group::B ? detail::inv_b(w, n) : detail::inv_d(w, n);
    detail::PkVal pv = detail::pkval_b(w, n);
    r.add_term(BigInt((len & 1) ? -1 : 1), pv.pk, pv.val);
  }
  return r;
}

BiPoly subset8_minus_t(Engine& e, Group g, int n, Dir end) {
  if (g != Group::B && g != Group::D) throw DomainError("subset 8 exists for types B and D only");
  BiPoly s8;
  if (n <= 2) {
    // The partition starts at n = 3; below that subset 8 is the whole end class.
    SignedDistributionRequest req;
    req.group = g;
    req.n = n;
    req.sign = g == Group::B ? SignStat::inv_b : SignStat::inv_d;
    req.end = EndRestriction{std::nullopt, end};
    s8 = dist_runs_pq(e, req);
  } else {
    s8 = g == Group::B ? subset_contribution_b(e, n, 8, end) : subset_contribution_d(e, n, 8, end);
  }
  return s8 - t_contribution(n, end, g);
}

BigInt count_alternating(Engine& e, Group g, int n, Parity parity) {
  const Census& c = e.census(g, n);
  const bool a = g == Group::A;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    unsigned f = static_cast<unsigned>(i % Census::kFlags);
    if (!(f & Census::kAlt) || c.cells[i] == 0) continue;
    const bool negodd = f & Census::kNegOdd;
    if (g == Group::D && negodd) continue;
    if (g == Group::BminusD && !negodd) continue;
    if (parity != Parity::all) {
      bool par_own = f & Census::kPar;
      bool odd = (a || g == Group::B) ? par_own : (par_own != negodd);
      if (odd != (parity == Parity::minus)) continue;
    }
    total += c.cells[i];
  }
  return BigInt(total);
}

BigInt count_snakes(Engine& e, SnakeFamily family, int n) {
  const Census& c = e.census(Group::B, n);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    unsigned f = static_cast<unsigned>(i % Census::kFlags);
    if (!(f & Census::kAlt) || (f & Census::kFirst) || c.cells[i] == 0) continue;
    const bool negodd = f & Census::kNegOdd;
    const bool odd_b = f & Census::kPar;
    const bool odd_d = odd_b != negodd;
    bool keep = false;
    switch (family) {
      case SnakeFamily::B: keep = true; break;
      case SnakeFamily::Bplus: keep = !odd_b; break;
      case SnakeFamily::Bminus: keep = odd_b; break;
      case SnakeFamily::D: keep = !negodd; break;
      case SnakeFamily::BminusD: keep = negodd; break;
      case SnakeFamily::Dplus: keep = !negodd && !odd_d; break;
      case SnakeFamily::Dminus: keep = !negodd && odd_d; break;
      case SnakeFamily::BminusDplus: keep = negodd && !odd_d; break;
      case SnakeFamily::BminusDminus: keep = negodd && odd_d; break;
    }
    if (keep) total += c.cells[i];
  }
  return BigInt(total);
}

BigInt snake_subset_count(Engine& e, int n, int k, Parity parity) {
  if (n < 3) throw DomainError("snake subsets need n >= 3");
  if (k < 1 || k > 4) throw DomainError("snake subset number must lie in 1..4");
  e.check(Group::D, n);
  using Pair = std::pair<std::int64_t, std::int64_t>;  // (even inv_d, odd inv_d)
  auto parts = detail::run_slices<Pair>(
      ambient_size(Group::D, n), e.workers(), [] { return Pair{0, 0}; },
      [&](std::uint64_t lo, std::uint64_t hi, Pair& out) {
        detail::for_each_rank(Group::D, n, lo, hi, [&](const int* w) {
          if (snake_index_raw(w, n) != k) return;
          if (detail::inv_d(w, n) & 1) ++out.second;
          else ++out.first;
        });
      });
  Pair t{0, 0};
  for (const auto& p : parts) {
    t.first += p.first;
    t.second += p.second;
  }
  switch (parity) {
    case Parity::plus: return BigInt(t.first);
    case Parity::minus: return BigInt(t.second);
    case Parity::all: break;
  }
  return BigInt(t.first + t.second);
}

std::array<std::array<BigInt, 2>, 5> snake_subset_table(Engine& e, int n) {
  if (n < 3) throw DomainError("snake subsets need n >= 3");
  e.check(Group::D, n);
  using Counts = std::array<std::int64_t, 10>;
  auto parts = detail::run_slices<Counts>(
      ambient_size(Group::D, n), e.workers(), [] { return Counts{}; },
      [&](std::uint64_t lo, std::uint64_t hi, Counts& out) {
        detail::for_each_rank(Group::D, n, lo, hi, [&](const int* w) {
          int k = snake_index_raw(w, n);
          if (k == 0) return;
          ++out[k * 2 + (detail::inv_d(w, n) & 1)];
        });
      });
  std::array<std::array<BigInt, 2>, 5> r{};
  for (const auto& p : parts)
    for (int i = 0; i < 10; ++i) r[i / 2][i % 2] += p[i];
  return r;
}

int snake_subset_index(std::span<const int> w) {
  return snake_index_raw(w.data(), static_cast<int>(w.size()));
}

}  // namespace weylruns
