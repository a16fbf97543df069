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

#ifndef ANTICODE_BOUNDS_HPP_
#define ANTICODE_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace anticode {

using BigInt = boost::multiprecision::cpp_int;

// sum_{i<k} ceil(d / q^i)
BigInt griesmer_sum(std::uint64_t q, std::uint64_t k, std::uint64_t d);

struct GriesmerResult {
  BigInt sum;
  BigInt defect;  // n - sum; negative means no such code exists
};
GriesmerResult griesmer(std::uint64_t q, std::uint64_t k, std::uint64_t d, std::uint64_t n);

struct AntiGriesmerResult {
  BigInt sum;             // sum_{i<k} floor(delta / q^i)
  BigInt defect;          // sum - n
  bool holds = false;     // sum >= n
  bool hypothesis = false;  // n < q^(k-1), under which projective codes must satisfy holds
};
AntiGriesmerResult antigriesmer(std::uint64_t q, std::uint64_t k, std::uint64_t delta,
                                std::uint64_t n);

// sum_{i <= floor(delta/2)} C(n, i)
BigInt erdos_kleitman(std::uint64_t n, std::uint64_t delta);

// |C| * |A| <= q^n
bool code_anticode_check(const BigInt& code_size, const BigInt& anticode_size, std::uint64_t q,
                         std::uint64_t n);

// ceil((q - 1) * n / q)
BigInt plotkin_anticode_floor(std::uint64_t q, std::uint64_t n);

struct BoundsReport {
  BigInt griesmer_sum;
  BigInt griesmer_defect;
  BigInt antigriesmer_sum;
  BigInt antigriesmer_defect;
  bool antigriesmer_holds = false;
  bool antigriesmer_hypothesis = false;
  BigInt plotkin_anticode_floor;
  std::optional<BigInt> ek_bound;  // binary only
  bool prop21_holds = false;       // delta >= k
};

BoundsReport bounds_report(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t d,
                           std::uint64_t delta);

// Best-known minimum distances keyed by (q, n, k).
class BestKnownTable {
 public:
  BestKnownTable() = default;

  // Lines "q n k d_best source", whitespace separated; '#' starts a comment.
  static BestKnownTable parse(std::string_view text);
  // The table shipped with the library.
  static const BestKnownTable& bundled();

  std::optional<std::uint64_t> lookup(std::uint64_t q, std::uint64_t n, std::uint64_t k) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t>& entries()
      const noexcept {
    return entries_;
  }

 private:
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> entries_;
};

enum class OptimalityClass { kOptimal, kAlmostOptimal, kDistanceToBest, kUnknown };

struct Optimality {
  OptimalityClass cls = OptimalityClass::kUnknown;
  std::optional<std::uint64_t> d_best;
  std::optional<std::int64_t> distance_to_best;  // d_best - d whenever d_best is known
};

Optimality classify_optimality(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t d,
                               const BestKnownTable& table = BestKnownTable::bundled());

std::string to_string(OptimalityClass cls);

// Decimal text of a BigInt.
std::string to_string(const BigInt& v);

}  // namespace anticode

#endif  // ANTICODE_BOUNDS_HPP_
