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

#include "census.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "kernels.hpp"
#include "weylruns/enumerate.hpp"
#include "weylruns/errors.hpp"

namespace weylruns {

namespace detail {

Census build_census(bool type_b, int n, unsigned workers) {
  Group g = type_b ? Group::B : Group::A;
  auto parts = run_slices<Census>(
      ambient_size(g, n), workers, [&] { return Census(type_b, n); },
      [&](std::uint64_t lo, std::uint64_t hi, Census& c) {
        if (!type_b) {
          for_each_rank(Group::A, n, lo, hi, [&](const int* w) {
            PkVal pv = pkval_a(w, n);
            unsigned f = static_cast<unsigned>(inv_a(w, n) & 1);
            if (n >= 2) {
              if (w[0] > w[1]) f |= Census::kFirst;
              if (w[n - 2] > w[n - 1]) f |= Census::kLast;
            }
            if (alternating(w, n)) f |= Census::kAlt;
            ++c.cells[c.index(pv.pk, pv.val, f)];
          });
        } else {
          for_each_rank(Group::B, n, lo, hi, [&](const int* w) {
            PkVal pv = pkval_b(w, n);
            int negs = negatives(w, n);
            long len = inv_a(w, n) + neg_pairs(w, n) + negs;
            unsigned f = static_cast<unsigned>(len & 1);
            if (negs & 1) f |= Census::kNegOdd;
            if (w[0] < 0) f |= Census::kFirst;
            if (last_dir_b(w, n) == Dir::descent) f |= Census::kLast;
            if (alternating(w, n)) f |= Census::kAlt;
            ++c.cells[c.index(pv.pk, pv.val, f)];
          });
        }
      });
  Census total(type_b, n);
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace detail

unsigned default_workers() {
  if (const char* env = std::getenv("WEYLRUNS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Engine::Impl {
  mutable std::mutex mu;
  unsigned workers = 1;
  int cap_a = kDefaultCapA;
  int cap_bd = kDefaultCapBD;
  std::map<std::pair<bool, int>, std::unique_ptr<detail::Census>> cache;
};

Engine::Engine(unsigned workers) : impl_(std::make_unique<Impl>()) {
  impl_->workers = workers == 0 ? default_workers() : workers;
}

Engine::~Engine() = default;

unsigned Engine::workers() const {
  std::lock_guard lock(impl_->mu);
  return impl_->workers;
}

void Engine::set_workers(unsigned workers) {
  std::lock_guard lock(impl_->mu);
  impl_->workers = workers == 0 ? default_workers() : workers;
}

int Engine::cap_a() const {
  std::lock_guard lock(impl_->mu);
  return impl_->cap_a;
}

int Engine::cap_bd() const {
  std::lock_guard lock(impl_->mu);
  return impl_->cap_bd;
}

void Engine::set_caps(int cap_a, int cap_bd) {
  if (cap_a < 1 || cap_a > kMaxWordA || cap_bd < 1 || cap_bd > kMaxWordB)
    throw DomainError("caps must lie within 1.." + std::to_string(kMaxWordA) + " (A) and 1.." +
                      std::to_string(kMaxWordB) + " (B/D)");
  std::lock_guard lock(impl_->mu);
  impl_->cap_a = cap_a;
  impl_->cap_bd = cap_bd;
}

void Engine::check(Group g, int n) const {
  int cap = g == Group::A ? cap_a() : cap_bd();
  if (n < 1 || n > cap)
    throw DomainError("n = " + std::to_string(n) + " outside the enumeration range 1.." +
                      std::to_string(cap));
}

const detail::Census& Engine::census(Group g, int n) {
  check(g, n);
  bool b = g != Group::A;
  std::lock_guard lock(impl_->mu);
  auto& slot = impl_->cache[{b, n}];
  if (!slot) slot = std::make_unique<detail::Census>(detail::build_census(b, n, impl_->workers));
  return *slot;
}

void Engine::clear_cache() {
  std::lock_guard lock(impl_->mu);
  impl_->cache.clear();
}

}  // namespace weylruns
