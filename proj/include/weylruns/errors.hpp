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

#ifndef WEYLRUNS_ERRORS_HPP
#define WEYLRUNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylruns {

// Precondition violated by the caller (bad n, incompatible selectors, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A computed value broke an exactness contract, e.g. a non-integer EGF
// coefficient.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weylruns

#endif  // WEYLRUNS_ERRORS_HPP
