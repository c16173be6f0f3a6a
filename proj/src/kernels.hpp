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

// Raw-word kernels shared by the public API and the enumerators.

#ifndef WEYLRUNS_SRC_KERNELS_HPP
#define WEYLRUNS_SRC_KERNELS_HPP

#include <algorithm>
#include <cstdint>

#include "weylruns/errors.hpp"
#include "weylruns/perm.hpp"

namespace weylruns::detail {

struct PkVal {
  int pk = 0;
  int val = 0;
};

inline PkVal pkval_a(const int* w, int n) {
  PkVal r;
  for (int i = 1; i + 1 < n; ++i) {
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) ++r.pk;
    else if (w[i - 1] > w[i] && w[i] < w[i + 1]) ++r.val;
  }
  return r;
}

// Type B: sentinel w_0 = 0, indices 1..n-1.
inline PkVal pkval_b(const int* w, int n) {
  PkVal r;
  for (int i = 0; i + 1 < n; ++i) {
    int left = i == 0 ? 0 : w[i - 1];
    if (left < w[i] && w[i] > w[i + 1]) ++r.pk;
    else if (left > w[i] && w[i] < w[i + 1]) ++r.val;
  }
  return r;
}

inline long inv_a(const int* w, int n) {
  long c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += w[i] > w[j];
  return c;
}

// Second term of inv_B / inv_D: pairs i<j with -w_i > w_j.
inline long neg_pairs(const int* w, int n) {
  long c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += -w[i] > w[j];
  return c;
}

inline int negatives(const int* w, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i) c += w[i] < 0;
  return c;
}

inline long inv_d(const int* w, int n) { return inv_a(w, n) + neg_pairs(w, n); }
inline long inv_b(const int* w, int n) { return inv_d(w, n) + negatives(w, n); }

inline bool alternating(const int* w, int n) {
  for (int i = 0; i + 1 < n; ++i) {
    bool down = (i % 2 == 0);
    if (down ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
  }
  return true;
}

inline Dir last_dir_b(const int* w, int n) {
  int left = n == 1 ? 0 : w[n - 2];
  return left < w[n - 1] ? Dir::ascent : Dir::descent;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline void check_n(Group g, int n) {
  int cap = g == Group::A ? kMaxWordA : kMaxWordB;
  if (n < 1 || n > cap)
    throw DomainError("n must lie in 1.." + std::to_string(cap) + ", got " + std::to_string(n));
}

inline bool keep_signed(Group g, int negs) {
  switch (g) {
    case Group::D: return negs % 2 == 0;
    case Group::BminusD: return negs % 2 == 1;
    default: return true;
  }
}

// Visits ambient ranks [lo, hi) of group g, calling f(w) for members only.
template <class F>
void for_each_rank(Group g, int n, std::uint64_t lo, std::uint64_t hi, F&& f) {
  if (lo >= hi) return;
  int base[kMaxWordA + 1];
  if (g == Group::A) {
    unrank_permutation(lo, n, base);
    for (std::uint64_t r = lo; r < hi; ++r) {
      f(static_cast<const int*>(base));
      std::next_permutation(base, base + n);
    }
    return;
  }
  const std::uint64_t masks = std::uint64_t{1} << n;
  std::uint64_t prank = lo >> n;
  std::uint64_t mask = lo & (masks - 1);
  unrank_permutation(prank, n, base);
  int w[kMaxWordB + 1];
  for (std::uint64_t r = lo; r < hi; ++r) {
    int negs = 0;
    for (int i = 0; i < n; ++i) {
      bool neg = (mask >> i) & 1U;
      w[i] = neg ? -base[i] : base[i];
      negs += neg;
    }
    if (keep_signed(g, negs)) f(static_cast<const int*>(w));
    if (++mask == masks) {
      mask = 0;
      std::next_permutation(base, base + n);
    }
  }
}

}  // namespace weylruns::detail

#endif  // WEYLRUNS_SRC_KERNELS_HPP
