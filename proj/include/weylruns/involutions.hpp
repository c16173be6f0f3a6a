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

#ifndef WEYLRUNS_INVOLUTIONS_HPP
#define WEYLRUNS_INVOLUTIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "weylruns/perm.hpp"

namespace weylruns {

// The sign-reversing maps used in the cancellation arguments.
enum class MapId {
  g_b,        // subsets 1, 2 of B_{n,-,e}: exchange the letters of |n|, |n-1|
  f_b,        // subsets 3, 4: the same on an adjacent pair
  h1_b,       // subsets 5, 6, 7: last two letters x, y -> -y, -x
  g_d,        // g on D subsets 1, 2 (inv_D)
  f_d,        // f on D subsets 3, 4
  h1_d,       // h1 on D subsets 5, 6, 7
  h3_d,       // D subset 9: swap |n| and |n-1|, signs stay in place
  alt_flip,   // Alt^B: negate the letter of absolute value 1
  alt_d_to_bd,  // the same map, Alt^D -> Alt^{B-D}
  alt_h,      // Alt^D and Alt^{B-D}, n >= 2: letters of |1|, |2| x, y -> -y, -x
  bgt_flip,   // B^> outside the identity class: negate the smallest non-fixed value
  snake_flip,   // the same map on snakes
  snake_g,    // L^1
  snake_f,    // L^2 and L^3
};

inline constexpr MapId kAllMaps[] = {
    MapId::g_b,        MapId::f_b,        MapId::h1_b,      MapId::g_d,      MapId::f_d,
    MapId::h1_d,       MapId::h3_d,       MapId::alt_flip,  MapId::alt_d_to_bd, MapId::alt_h,
    MapId::bgt_flip,   MapId::snake_flip, MapId::snake_g,   MapId::snake_f,
};

std::string_view map_name(MapId id);

// Smallest n at which the map's domain is defined.
int map_min_n(MapId id);

// Image of w, or nullopt when w lies outside the map's domain.
std::optional<std::vector<int>> apply_map(MapId id, std::span<const int> w);

struct MapCheck {
  std::uint64_t domain_size = 0;
  std::uint64_t not_involution = 0;    // map(map(w)) != w
  std::uint64_t stat_changed = 0;      // pk_B/val_B, altruns_B or alternation differs
  std::uint64_t parity_kept = 0;       // the length parity did not flip
  std::uint64_t outside_codomain = 0;  // image not in the stated target set
  bool passed() const {
    return not_involution == 0 && stat_changed == 0 && parity_kept == 0 && outside_codomain == 0;
  }
};

// Exhaustive check over B_n. DomainError if n is below map_min_n or above kMaxWordB.
MapCheck check_map(MapId id, int n);

}  // namespace weylruns

#endif  // WEYLRUNS_INVOLUTIONS_HPP
