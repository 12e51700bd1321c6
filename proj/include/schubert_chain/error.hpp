// Copyright 2026 The schubert-chain Authors.
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

#ifndef SCHUBERT_CHAIN_ERROR_HPP
#define SCHUBERT_CHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace schubert_chain {

// Bad input from a caller: malformed text, out-of-range arguments.
// std::invalid_argument is used directly for these.

// An internal arithmetic identity failed. Never a user error.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error("invariant violation: " + what) {}
};

// Requested size exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schubert_chain

#endif  // SCHUBERT_CHAIN_ERROR_HPP
