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

#include "weylruns/involutions.hpp"

#include <cstdlib>
#include <string>

#include "kernels.hpp"
#include "weylruns/enumerate.hpp"
#include "weylruns/errors.hpp"

namespace weylruns {

namespace {

using Word = std::vector<int>;

enum class Len { inv_b, inv_d, none };

int pos_of(const Word& w, int value) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) == value) return static_cast<int>(i);
  return -1;
}

// g / f rule on the letters of absolute value a and b.
Word exchange(Word w, int a, int b) {
  int i = pos_of(w, a);
  int j = pos_of(w, b);
  int x = w[i];
  int y = w[j];
  if ((x > 0) == (y > 0)) {
    w[i] = y;
    w[j] = x;
  } else {
    w[i] = -y;
    w[j] = -x;
  }
  return w;
}

// x, y -> -y, -x on the letters of absolute value a and b.
Word bar_swap(Word w, int a, int b) {
  int i = pos_of(w, a);
  int j = pos_of(w, b);
  int x = w[i];
  w[i] = -w[j];
  w[j] = -x;
  return w;
}

bool id_class(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) != static_cast<int>(i) + 1) return false;
  return true;
}

int first_unfixed(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) != static_cast<int>(i) + 1) return static_cast<int>(i) + 1;
  return 0;
}

Word negate_value(Word w, int value) {
  int i = pos_of(w, value);
  w[i] = -w[i];
  return w;
}

int n_of(const Word& w) { return static_cast<int>(w.size()); }
Dir end_of(const Word& w) { return detail::last_dir_b(w.data(), n_of(w)); }
bool alt(const Word& w) { return detail::alternating(w.data(), n_of(w)); }
bool snake(const Word& w) { return w[0] > 0 && alt(w); }
bool even_negs(const Word& w) { return detail::negatives(w.data(), n_of(w)) % 2 == 0; }
int b_idx(const Word& w) { return b_subset_index(w, end_of(w)); }
int d_idx(const Word& w) { return d_subset_index(w, end_of(w)); }

bool in_range(int k, int lo, int hi) { return k >= lo && k <= hi; }

bool domain(MapId id, const Word& w) {
  switch (id) {
    case MapId::g_b: return in_range(b_idx(w), 1, 2);
    case MapId::f_b: return in_range(b_idx(w), 3, 4);
    case MapId::h1_b: return in_range(b_idx(w), 5, 7);
    case MapId::g_d: return in_range(d_idx(w), 1, 2);
    case MapId::f_d: return in_range(d_idx(w), 3, 4);
    case MapId::h1_d: return in_range(d_idx(w), 5, 7);
    case MapId::h3_d: return d_idx(w) == 9;
    case MapId::alt_flip: return alt(w);
    case MapId::alt_d_to_bd: return alt(w) && even_negs(w);
    case MapId::alt_h: return n_of(w) >= 2 && alt(w);
    case MapId::bgt_flip: return w[0] > 0 && !id_class(w);
    case MapId::snake_flip: return snake(w) && !id_class(w);
    case MapId::snake_g: return snake_subset_index(w) == 1;
    case MapId::snake_f: return in_range(snake_subset_index(w), 2, 3);
  }
  return false;
}

Word transform(MapId id, const Word& w) {
  const int n = n_of(w);
  switch (id) {
    case MapId::g_b:
    case MapId::f_b:
    case MapId::g_d:
    case MapId::f_d:
    case MapId::snake_g:
      return exchange(w, n, n - 1);
    case MapId::h1_b:
    case MapId::h1_d:
    case MapId::snake_f:
      return bar_swap(w, n, n - 1);
    case MapId::h3_d: {
      Word r = w;
      int i = pos_of(w, n);
      int j = pos_of(w, n - 1);
      r[i] = w[i] > 0 ? n - 1 : -(n - 1);
      r[j] = w[j] > 0 ? n : -n;
      return r;
    }
    case MapId::alt_flip:
    case MapId::alt_d_to_bd:
      return negate_value(w, 1);
    case MapId::alt_h:
      return bar_swap(w, 1, 2);
    case MapId::bgt_flip:
    case MapId::snake_flip:
      return negate_value(w, first_unfixed(w));
  }
  return w;
}

bool codomain(MapId id, const Word& w, const Word& img) {
  switch (id) {
    case MapId::g_b:
    case MapId::f_b:
    case MapId::h1_b:
      return end_of(img) == end_of(w) && b_idx(img) == b_idx(w);
    case MapId::g_d:
    case MapId::f_d:
    case MapId::h1_d:
    case MapId::h3_d:
      return end_of(img) == end_of(w) && d_idx(img) == d_idx(w);
    case MapId::alt_flip: return alt(img);
    case MapId::alt_d_to_bd: return alt(img) && !even_negs(img);
    case MapId::alt_h: return alt(img) && even_negs(img) == even_negs(w);
    case MapId::bgt_flip: return img[0] > 0 && !id_class(img);
    case MapId::snake_flip: return snake(img) && !id_class(img);
    case MapId::snake_g:
    case MapId::snake_f:
      return snake_subset_index(img) == snake_subset_index(w);
  }
  return false;
}

bool stats_equal(MapId id, const Word& w, const Word& img) {
  const int n = n_of(w);
  detail::PkVal a = detail::pkval_b(w.data(), n);
  detail::PkVal b = detail::pkval_b(img.data(), n);
  switch (id) {
    case MapId::alt_flip:
    case MapId::alt_d_to_bd:
    case MapId::alt_h:
      return alt(img) == alt(w);
    case MapId::snake_flip:
    case MapId::snake_g:
    case MapId::snake_f:
      return snake(img) == snake(w);
    case MapId::bgt_flip:
      return a.pk + a.val == b.pk + b.val;
    default:
      return a.pk == b.pk && a.val == b.val;
  }
}

Len length_of(MapId id) {
  switch (id) {
    case MapId::g_b:
    case MapId::f_b:
    case MapId::h1_b:
    case MapId::alt_flip:
    case MapId::bgt_flip:
    case MapId::snake_flip:
      return Len::inv_b;
    case MapId::alt_d_to_bd:
      return Len::none;
    default:
      return Len::inv_d;
  }
}

}  // namespace

std::string_view map_name(MapId id) {
  switch (id) {
    case MapId::g_b: return "g_b";
    case MapId::f_b: return "f_b";
    case MapId::h1_b: return "h1_b";
    case MapId::g_d: return "g_d";
    case MapId::f_d: return "f_d";
    case MapId::h1_d: return "h1_d";
    case MapId::h3_d: return "h3_d";
    case MapId::alt_flip: return "alt_flip";
    case MapId::alt_d_to_bd: return "alt_d_to_bd";
    case MapId::alt_h: return "alt_h";
    case MapId::bgt_flip: return "bgt_flip";
    case MapId::snake_flip: return "snake_flip";
    case MapId::snake_g: return "snake_g";
    case MapId::snake_f: return "snake_f";
  }
  return "?";
}

int map_min_n(MapId id) {
  switch (id) {
    case MapId::alt_flip:
    case MapId::alt_d_to_bd:
    case MapId::bgt_flip:
    case MapId::snake_flip:
      return 1;
    case MapId::alt_h: return 2;
    default: return 3;
  }
}

std::optional<std::vector<int>> apply_map(MapId id, std::span<const int> w) {
  Word word(w.begin(), w.end());
  if (n_of(word) < map_min_n(id) || !domain(id, word)) return std::nullopt;
  return transform(id, word);
}

MapCheck check_map(MapId id, int n) {
  if (n < map_min_n(id) || n > kMaxWordB)
    throw DomainError(std::string(map_name(id)) + " needs " + std::to_string(map_min_n(id)) +
                      " <= n <= " + std::to_string(kMaxWordB));
  MapCheck r;
  const Len len = length_of(id);
  iter_group(Group::B, n, [&](std::span<const int> s) {
    Word w(s.begin(), s.end());
    if (!domain(id, w)) return;
    ++r.domain_size;
    Word img = transform(id, w);
    if (transform(id, img) != w) ++r.not_involution;
    if (!stats_equal(id, w, img)) ++r.stat_changed;
    if (!codomain(id, w, img)) ++r.outside_codomain;
    if (len != Len::none) {
      long a = len == Len::inv_b ? detail::inv_b(w.data(), n) : detail::inv_d(w.data(), n);
      long b = len == Len::inv_b ? detail::inv_b(img.data(), n) : detail::inv_d(img.data(), n);
      if ((a & 1) == (b & 1)) ++r.parity_kept;
    }
  });
  return r;
}

}  // namespace weylruns
