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

#ifndef ANTICODE_CAPS_HPP_
#define ANTICODE_CAPS_HPP_

#include <cstdint>

namespace anticode {

// Enumeration limits. All sizes are log2 of an object count.
//
// The environment variables ANTICODE_ENUM_LOG2, ANTICODE_MINIMAL_LOG2,
// ANTICODE_POINTS_LOG2 and ANTICODE_SWRG_MAX_K override the defaults when read
// through Caps::from_env().
struct Caps {
  // q^k messages for weight enumeration (also dual enumeration q^(n-k)).
  unsigned enumeration_log2 = 24;
  // q^k messages for the quadratic minimality check.
  unsigned minimality_log2 = 20;
  // (q^K - 1)/(q - 1) projective points materialized by simplex/complement.
  unsigned points_log2 = 24;
  // 2^k vertices for coset graphs.
  unsigned swrg_max_k = 12;

  static Caps defaults() { return Caps{}; }
  static Caps from_env();
};

// q^k <= 2^log2_cap, computed without overflow.
bool power_within(std::uint64_t q, std::uint64_t k, unsigned log2_cap);

}  // namespace anticode

#endif  // ANTICODE_CAPS_HPP_
