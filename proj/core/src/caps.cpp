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

#include "anticode/caps.hpp"

#include <cstdlib>
#include <string>

#include "anticode/error.hpp"

namespace anticode {
namespace {

unsigned env_unsigned(const char* name, unsigned fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v > 62) {
    throw InvalidArgument(std::string(name) + ": expected an integer in [0, 62], got '" + raw + "'");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  c.enumeration_log2 = env_unsigned("ANTICODE_ENUM_LOG2", c.enumeration_log2);
  c.minimality_log2 = env_unsigned("ANTICODE_MINIMAL_LOG2", c.minimality_log2);
  c.points_log2 = env_unsigned("ANTICODE_POINTS_LOG2", c.points_log2);
  c.swrg_max_k = env_unsigned("ANTICODE_SWRG_MAX_K", c.swrg_max_k);
  return c;
}

bool power_within(std::uint64_t q, std::uint64_t k, unsigned log2_cap) {
  if (log2_cap >= 63) log2_cap = 63;
  const std::uint64_t limit = std::uint64_t{1} << log2_cap;
  if (q <= 1) return true;
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (v > limit / q) return false;
    v *= q;
  }
  return v <= limit;
}

}  // namespace anticode
