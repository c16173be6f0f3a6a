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

#include "weylruns/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "kernels.hpp"
#include "weylruns/errors.hpp"

namespace weylruns {

namespace {

void require_bijection(const std::vector<int>& w, bool allow_signs) {
  if (w.empty()) throw DomainError("empty word");
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    int a = allow_signs ? std::abs(x) : x;
    if (a < 1 || a > static_cast<int>(w.size()) || seen[a])
      throw DomainError("word is not a (signed) permutation of 1.." + std::to_string(w.size()));
    seen[a] = 1;
  }
}

PeakValleySets sets_from(const std::vector<int>& w, bool type_b) {
  PeakValleySets r;
  int n = static_cast<int>(w.size());
  int start = type_b ? 1 : 2;
  for (int i = start; i <= n - 1; ++i) {
    int left = (i == 1) ? 0 : w[i - 2];  // i == 1 only for type B
    int mid = w[i - 1];
    int right = w[i];
    if (left < mid && mid > right) r.peaks.push_back(i);
    else if (left > mid && mid < right) r.valleys.push_back(i);
  }
  return r;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  require_bijection(word_, false);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
  require_bijection(word_, true);
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

int SignedPermutation::negatives() const {
  return detail::negatives(word_.data(), n());
}

PeakValleySets peaks_valleys_a(const Permutation& pi) { return sets_from(pi.word(), false); }

int altruns_a(const Permutation& pi) {
  auto pv = detail::pkval_a(pi.word().data(), pi.n());
  return pv.pk + pv.val + 1;
}

long inv_a(const Permutation& pi) { return detail::inv_a(pi.word().data(), pi.n()); }

StatVector stats_a(const Permutation& pi) {
  auto pv = detail::pkval_a(pi.word().data(), pi.n());
  return {pv.pk, pv.val, pv.pk + pv.val + 1, inv_a(pi)};
}

PeakValleySets peaks_valleys_b(const SignedPermutation& s) { return sets_from(s.word(), true); }

int altruns_b(const SignedPermutation& s) {
  auto pv = detail::pkval_b(s.word().data(), s.n());
  return pv.pk + pv.val + 1;
}

long inv_b(const SignedPermutation& s) { return detail::inv_b(s.word().data(), s.n()); }
long inv_d(const SignedPermutation& s) { return detail::inv_d(s.word().data(), s.n()); }

StatVector stats_b(const SignedPermutation& s) {
  auto pv = detail::pkval_b(s.word().data(), s.n());
  return {pv.pk, pv.val, pv.pk + pv.val + 1, inv_b(s)};
}

EndClass classify_ends_a(const Permutation& pi) {
  const auto& w = pi.word();
  int n = pi.n();
  if (n < 2) throw DomainError("type A end classes need n >= 2");
  EndClass c;
  c.first = w[0] < w[1] ? Dir::ascent : Dir::descent;
  c.last = w[n - 2] < w[n - 1] ? Dir::ascent : Dir::descent;
  return c;
}

EndClass classify_ends_b(const SignedPermutation& s) {
  EndClass c;
  c.has_first = false;
  c.last = detail::last_dir_b(s.word().data(), s.n());
  return c;
}

Permutation complement(const Permutation& pi) {
  std::vector<int> w = pi.word();
  for (int& x : w) x = pi.n() + 1 - x;
  return Permutation(std::move(w));
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> w(pi.word().rbegin(), pi.word().rend());
  return Permutation(std::move(w));
}

SignedPermutation reverse(const SignedPermutation& s) {
  std::vector<int> w(s.word().rbegin(), s.word().rend());
  return SignedPermutation(std::move(w));
}

SignedPermutation flip_sgn(const SignedPermutation& s) {
  std::vector<int> w = s.word();
  for (int& x : w) x = -x;
  return SignedPermutation(std::move(w));
}

bool is_alternating(std::span<const int> w) {
  return detail::alternating(w.data(), static_cast<int>(w.size()));
}

bool is_snake_b(const SignedPermutation& s) {
  return s.word()[0] > 0 && detail::alternating(s.word().data(), s.n());
}

std::uint64_t ambient_size(Group g, int n) {
  detail::check_n(g, n);
  std::uint64_t f = detail::factorial(n);
  return g == Group::A ? f : (f << n);
}

std::uint64_t group_size(Group g, int n) {
  std::uint64_t a = ambient_size(g, n);
  return (g == Group::D || g == Group::BminusD) ? a / 2 : a;
}

void unrank_permutation(std::uint64_t rank, int n, int* out) {
  int pool[kMaxWordA + 1];
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  int left = n;
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = detail::factorial(n - 1 - i);
    auto idx = static_cast<int>(rank / f);
    rank %= f;
    out[i] = pool[idx];
    for (int j = idx; j + 1 < left; ++j) pool[j] = pool[j + 1];
    --left;
  }
}

void unrank_signed(std::uint64_t rank, int n, int* out) {
  unrank_permutation(rank >> n, n, out);
  std::uint64_t mask = rank & ((std::uint64_t{1} << n) - 1);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1U) out[i] = -out[i];
}

void iter_group_range(Group g, int n, std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::span<const int>)>& f) {
  std::uint64_t total = ambient_size(g, n);
  hi = std::min(hi, total);
  detail::for_each_rank(g, n, lo, hi, [&](const int* w) {
    f(std::span<const int>(w, static_cast<std::size_t>(n)));
  });
}

void iter_group(Group g, int n, const std::function<void(std::span<const int>)>& f) {
  iter_group_range(g, n, 0, ambient_size(g, n), f);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 unsigned parts) {
  if (parts == 0) parts = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t base = total / parts;
  std::uint64_t extra = total % parts;
  std::uint64_t lo = 0;
  for (unsigned i = 0; i < parts; ++i) {
    std::uint64_t len = base + (i < extra ? 1 : 0);
    out.emplace_back(lo, lo + len);
    lo += len;
  }
  return out;
}

}  // namespace weylruns
