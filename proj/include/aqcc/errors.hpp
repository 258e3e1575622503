// Copyright 2026 The aqcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQCC_ERRORS_HPP
#define AQCC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aqcc {

/// Bad input: unsupported parameters, malformed descriptors, violated preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C2^perp is not contained in C1 (or an outer/inner pair is not nested).
class NotNested : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive search would exceed the configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Two independent computations of the same quantity disagreed.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aqcc

#endif  // AQCC_ERRORS_HPP
