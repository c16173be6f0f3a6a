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

#ifndef WEYLRUNS_ENUMERATE_HPP
#define WEYLRUNS_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "weylruns/perm.hpp"
#include "weylruns/poly.hpp"
#include "weylruns/series.hpp"

namespace weylruns {

namespace detail {
struct Census;
}

// Worker count from WEYLRUNS_THREADS, else the hardware concurrency.
unsigned default_workers();

inline constexpr int kDefaultCapA = 11;
inline constexpr int kDefaultCapBD = 9;

// Owns the worker count, the enumeration caps and a cache of censuses.
// Thread-safe; results do not depend on the worker count.
class Engine {
 public:
  explicit Engine(unsigned workers = 0);
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  unsigned workers() const;
  void set_workers(unsigned workers);

  int cap_a() const;
  int cap_bd() const;
  // Caps may not exceed kMaxWordA / kMaxWordB.
  void set_caps(int cap_a, int cap_bd);
  // DomainError unless 1 <= n <= cap for the group.
  void check(Group g, int n) const;

  const detail::Census& census(Group g, int n);
  void clear_cache();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class SignStat { none, inv_a, inv_b, inv_d };
enum class Parity { all, plus, minus };
enum class FirstSign { positive, negative };

struct EndRestriction {
  std::optional<Dir> first;  // type A only
  std::optional<Dir> last;
};

struct SignedDistributionRequest {
  Group group = Group::A;
  int n = 1;
  SignStat sign = SignStat::none;
  std::optional<EndRestriction> end;
  std::optional<FirstSign> first_letter_sign;  // types B/D only
  // Restricts to even (plus) or odd (minus) length, using inv_a for A,
  // inv_b for B and inv_d for D and B-D.
  Parity parity = Parity::all;
};

UniPoly dist_runs_t(Engine& e, const SignedDistributionRequest& req);
BiPoly dist_runs_pq(Engine& e, const SignedDistributionRequest& req);

// (plus, minus) split by the group's own length.
std::pair<UniPoly, UniPoly> dist_runs_parity_split(Engine& e, Group g, int n);

// Class-restricted bivariate sum over S_n, n >= 2.
BiPoly class_poly_a(Engine& e, int n, EndClass cls, bool signed_sum);

// Subset number 1..8 of B_{n,-,end} (0 if the word is not in that end
// class). The descent side uses the FlipSgn images of the ascent subsets.
int b_subset_index(std::span<const int> w, Dir end);
// Subset number 1..9 of D_{n,-,end}; 0 outside D_{n,-,end}.
int d_subset_index(std::span<const int> w, Dir end);

// pi'' : delete the letters of absolute value n and n-1.
std::vector<int> delete_top_two(std::span<const int> w);

BiPoly subset_contribution_b(Engine& e, int n, int k, Dir end);
BiPoly subset_contribution_d(Engine& e, int n, int k, Dir end);

// All subset contributions from one pass over the group: by_end[e][k] with
// e = 0 for ascent, 1 for descent and k = 1..8 (B) or 1..9 (D). Needs n >= 3.
struct SubsetTable {
  std::array<std::array<BiPoly, 10>, 2> by_end;
};
SubsetTable subset_table(Engine& e, Group g, int n);

std::vector<SignedPermutation> build_T(int n, Dir end);
// Signed sum over T_{n,end} (B, weight inv_b) or T_{n,end} ∩ D_n (D, weight inv_d).
BiPoly t_contribution(int n, Dir end, Group g = Group::B);
// Signed sum over subset 8 minus T.
BiPoly subset8_minus_t(Engine& e, Group g, int n, Dir end);

BigInt count_alternating(Engine& e, Group g, int n, Parity parity);
BigInt count_snakes(Engine& e, SnakeFamily family, int n);
// |L^k ∩ D_n^parity| for the snake partition L^1..L^4 of Snake^D_n.
BigInt snake_subset_count(Engine& e, int n, int k, Parity parity);
// counts[k][0] = |L^k ∩ D_n^+|, counts[k][1] = |L^k ∩ D_n^-|, k = 1..4.
std::array<std::array<BigInt, 2>, 5> snake_subset_table(Engine& e, int n);
// 1..4, or 0 if w is not a snake in D_n.
int snake_subset_index(std::span<const int> w);

}  // namespace weylruns

#endif  // WEYLRUNS_ENUMERATE_HPP
