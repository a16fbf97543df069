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


#ifndef ANTICODE_CODE_HPP_
#define ANTICODE_CODE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "anticode/caps.hpp"
#include "anticode/gf.hpp"
#include "anticode/matrix.hpp"

namespace anticode {

// A linear [n, k]_q code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  // Throws RankDeficient when rank(generator) < rows, InvalidArgument for an
  // empty matrix.
  explicit LinearCode(GfMatrix generator, std::string label = {});

  const FieldPtr& field() const noexcept { return generator_.field(); }
  std::uint32_t q() const noexcept { return field()->q(); }
  std::size_t n() const noexcept { return generator_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  const GfMatrix& generator() const noexcept { return generator_; }
  const std::string& label() const noexcept { return label_; }

  LinearCode relabeled(std::string label) const;
  std::vector<Element> encode(std::span<const Element> message) const;

 private:
  GfMatrix generator_;
  std::string label_;
};

LinearCode code_from_generator(FieldPtr field, const std::vector<std::vector<Element>>& rows,
                               std::string label = {});

// Exact weight enumerator: A_w for every w with A_w > 0.
struct WeightDistribution {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  std::uint64_t count(std::size_t weight) const noexcept;
  std::vector<std::size_t> nonzero_weights() const;
  std::size_t min_nonzero_weight() const;  // d
  std::size_t max_weight() const;          // delta
  std::size_t weight_count() const;        // t

  // Throws InvalidArgument when sum != q^k, A_0 != 1, a weight exceeds n, or
  // (q > 2) a nonzero count is not a multiple of q - 1.
  void validate() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

std::string to_string(const WeightDistribution& wd);

enum class Enumeration {
  kFullMessages,   // every one of the q^k messages
  kScalarClasses,  // one message per scalar class, counts scaled by q - 1
};

// Throws CapExceeded when q^k exceeds caps.enumeration_log2.
WeightDistribution weight_distribution(const LinearCode& code,
                                       Enumeration strategy = Enumeration::kScalarClasses,
                                       const Caps& caps = Caps::defaults());

std::size_t min_distance(const LinearCode& code, const Caps& caps = Caps::defaults());
std::size_t max_weight(const LinearCode& code, const Caps& caps = Caps::defaults());

std::size_t hamming_weight(std::span<const Element> word) noexcept;

// Code generated by a kernel basis of the generator. Throws InvalidArgument
// for k == n (the dual is the zero code).
LinearCode dual_code(const LinearCode& code);

struct DualDistance {
  std::optional<std::size_t> exact;  // set when the dual could be enumerated
  bool at_least_three = false;       // always set; decided by the column test
};

// Exact when q^(n-k) is within caps.enumeration_log2. Otherwise falls back to
// the column test if allowed, else throws CapExceeded.
DualDistance dual_distance(const LinearCode& code, const Caps& caps = Caps::defaults(),
                           bool allow_column_fallback = true);

// No zero column and no two proportional columns.
bool is_projective(const LinearCode& code);

struct MinimalityVerdict {
  bool minimal = true;
  // On failure: (c', c) with supp(c') inside supp(c) and c' not a multiple of c.
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> witness;
};

// Pairwise support containment over one representative per scalar class.
// Throws CapExceeded when q^k exceeds caps.minimality_log2.
MinimalityVerdict is_minimal_exact(const LinearCode& code, const Caps& caps = Caps::defaults());

// q * d > (q - 1) * delta
bool ab_criterion(std::uint32_t q, std::size_t d, std::size_t delta) noexcept;
bool ab_criterion(const WeightDistribution& wd) noexcept;

}  // namespace anticode

#endif  // ANTICODE_CODE_HPP_
