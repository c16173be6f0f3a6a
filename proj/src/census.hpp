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

#ifndef WEYLRUNS_SRC_CENSUS_HPP
#define WEYLRUNS_SRC_CENSUS_HPP

#include <cstdint>
#include <thread>
#include <vector>

#include "weylruns/perm.hpp"

namespace weylruns::detail {

// Histogram of (pk, val, flags) over the ambient set of a group: S_n for
// type A, B_n for B, D and B-D. One pass answers every distribution.
struct Census {
  // Flag bits. kFirst is "first pair descends" in type A and "first letter
  // negative" in type B. kLast is "last pair descends" (type B uses the
  // sentinel 0 when n = 1). kPar is the parity of inv_a / inv_b.
  static constexpr unsigned kPar = 1;
  static constexpr unsigned kNegOdd = 2;
  static constexpr unsigned kFirst = 4;
  static constexpr unsigned kLast = 8;
  static constexpr unsigned kAlt = 16;
  static constexpr unsigned kFlags = 32;

  bool type_b = false;
  int n = 0;
  int dim = 0;
  std::vector<std::uint64_t> cells;

  Census() = default;
  Census(bool b, int n_) : type_b(b), n(n_), dim(n_ + 1), cells(static_cast<std::size_t>(dim) * dim * kFlags, 0) {}

  std::size_t index(int pk, int val, unsigned flags) const {
    return (static_cast<std::size_t>(pk) * dim + val) * kFlags + flags;
  }

  Census& operator+=(const Census& o) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += o.cells[i];
    return *this;
  }
};

Census build_census(bool type_b, int n, unsigned workers);

// Runs work(lo, hi, partial) over `workers` contiguous slices of [0, total)
// and returns the partials in slice order.
template <class Partial, class Make, class Work>
std::vector<Partial> run_slices(std::uint64_t total, unsigned workers, Make make, Work work) {
  auto slices = split_range(total, workers == 0 ? 1 : workers);
  std::vector<Partial> parts;
  parts.reserve(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i) parts.push_back(make());
  if (slices.size() == 1) {
    work(slices[0].first, slices[0].second, parts[0]);
    return parts;
  }
  std::vector<std::thread> pool;
  pool.reserve(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i)
    pool.emplace_back([&, i] { work(slices[i].first, slices[i].second, parts[i]); });
  for (auto& t : pool) t.join();
  return parts;
}

}  // namespace weylruns::detail

#endif  // WEYLRUNS_SRC_CENSUS_HPP
