// Copyright 2026 The anticode Authors
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

#ifndef ANTICODE_ERROR_HPP_
#define ANTICODE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace anticode {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The operation would enumerate more objects than the configured cap allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A generator matrix does not have full row rank.
class RankDeficient : public InvalidArgument {
 public:
  RankDeficient(std::size_t expected, std::size_t actual)
      : InvalidArgument("generator matrix is rank deficient: rank " +
                        std::to_string(actual) + " < " +
                        std::to_string(expected) + " rows"),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

// Malformed code file, manifest or table.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace anticode

#endif  // ANTICODE_ERROR_HPP_
