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

#ifndef WEYLRUNS_PERM_HPP
#define WEYLRUNS_PERM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace weylruns {

// Hard limits of the word buffers used by the iterators.
inline constexpr int kMaxWordA = 12;
inline constexpr int kMaxWordB = 10;

enum class Group { A, B, D, BminusD };

enum class Dir : std::uint8_t { ascent, descent };

class Permutation {
 public:
  // Throws DomainError unless `word` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  // 1-based, as in the one-line notation.
  int operator()(int i) const { return word_[i - 1]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

class SignedPermutation {
 public:
  // Throws DomainError unless |word| is a bijection of {1..n}, n >= 1.
  explicit SignedPermutation(std::vector<int> word);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int operator()(int i) const { return word_[i - 1]; }

  int negatives() const;
  bool in_d() const { return negatives() % 2 == 0; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> word_;
};

// Type A carries both ends. Type B carries the last pair only and leaves
// `first` unset.
struct EndClass {
  bool has_first = true;
  Dir first = Dir::ascent;
  Dir last = Dir::ascent;

  friend bool operator==(const EndClass&, const EndClass&) = default;
};

inline constexpr EndClass kAA{true, Dir::ascent, Dir::ascent};
inline constexpr EndClass kAD{true, Dir::ascent, Dir::descent};
inline constexpr EndClass kDA{true, Dir::descent, Dir::ascent};
inline constexpr EndClass kDD{true, Dir::descent, Dir::descent};

struct StatVector {
  int pk = 0;
  int val = 0;
  int altruns = 1;
  long inv = 0;
};

struct PeakValleySets {
  std::vector<int> peaks;    // 1-based indices
  std::vector<int> valleys;
};

PeakValleySets peaks_valleys_a(const Permutation& pi);
int altruns_a(const Permutation& pi);
long inv_a(const Permutation& pi);
StatVector stats_a(const Permutation& pi);

PeakValleySets peaks_valleys_b(const SignedPermutation& s);
int altruns_b(const SignedPermutation& s);
long inv_b(const SignedPermutation& s);
long inv_d(const SignedPermutation& s);
StatVector stats_b(const SignedPermutation& s);  // inv = inv_b

EndClass classify_ends_a(const Permutation& pi);        // n >= 2
EndClass classify_ends_b(const SignedPermutation& s);   // n >= 1

Permutation complement(const Permutation& pi);
Permutation reverse(const Permutation& pi);
SignedPermutation reverse(const SignedPermutation& s);
SignedPermutation flip_sgn(const SignedPermutation& s);

// Down-up test pi_1 > pi_2 < pi_3 > ... on any integer word.
bool is_alternating(std::span<const int> w);
bool is_snake_b(const SignedPermutation& s);

// Number of elements visited when iterating the group's ambient set
// (S_n for A, B_n for B, D and B-D).
std::uint64_t ambient_size(Group g, int n);
// Number of elements actually yielded.
std::uint64_t group_size(Group g, int n);

// Lexicographic order on S_n; B_n ranks are perm_rank * 2^n + mask where
// bit i of mask negates the letter in position i+1. Ranks index the ambient set.
void unrank_permutation(std::uint64_t rank, int n, int* out);
void unrank_signed(std::uint64_t rank, int n, int* out);

// Visits the members of the group whose ambient rank lies in [lo, hi).
// The callback receives a transient view of the word.
void iter_group_range(Group g, int n, std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::span<const int>)>& f);
void iter_group(Group g, int n, const std::function<void(std::span<const int>)>& f);

// Splits [0, total) into `parts` contiguous ranges of near-equal length.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 unsigned parts);

}  // namespace weylruns

#endif  // WEYLRUNS_PERM_HPP
