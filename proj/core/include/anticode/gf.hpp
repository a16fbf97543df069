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


#ifndef ANTICODE_GF_HPP_
#define ANTICODE_GF_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace anticode {

// Field elements are integer codes in [0, q): the base-p digits of a code are
// the coefficients of the residue polynomial, least significant digit first.
// 0 and 1 are the additive and multiplicative identities.
using Element = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

// GF(p^e) together with the monic irreducible modulus that fixes its
// representation. For e = 1 the modulus is the placeholder polynomial x.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus{0, 1};  // constant term first, monic

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// True iff the monic polynomial (coefficients constant term first) is
// irreducible over GF(p). Trial division by every monic polynomial of degree
// at most deg/2.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> coefficients);

// The canonical field: modulus is the lexicographically smallest monic
// irreducible of degree e, comparing coefficient lists from the constant term
// upward. Throws InvalidArgument for non-prime p, e == 0 or p^e > 2^16.
FieldSpec field_make(std::uint32_t p, std::uint32_t e);

std::string describe(const FieldSpec& spec);

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

// Table-driven arithmetic over one FieldSpec. Immutable after construction.
class GaloisField {
 public:
  // Validates the spec (prime p, irreducible monic modulus of degree e).
  explicit GaloisField(FieldSpec spec);

  // Shared instance of the canonical field GF(p^e).
  static FieldPtr get(std::uint32_t p, std::uint32_t e);
  // Shared instance for an arbitrary (validated) spec.
  static FieldPtr from_spec(const FieldSpec& spec);
  // Canonical field of order q; throws InvalidArgument unless q is a prime power.
  static FieldPtr of_order(std::uint32_t q);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t e() const noexcept { return spec_.e; }
  std::uint32_t q() const noexcept { return spec_.q; }
  bool is_binary() const noexcept { return spec_.q == 2; }

  bool contains(std::uint32_t code) const noexcept { return code < spec_.q; }

  Element add(Element a, Element b) const noexcept {
    if (spec_.p == 2) return static_cast<Element>(a ^ b);
    if (!add_table_.empty()) return add_table_[a * spec_.q + b];
    return add_digits(a, b);
  }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= spec_.q - 1) s -= spec_.q - 1;
    return exp_[s];
  }
  // Throws InvalidArgument on b == 0.
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t exponent) const noexcept;

  // A generator of the multiplicative group (smallest such code).
  Element primitive() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Element a) const noexcept { return log_[a]; }
  Element exp(std::uint64_t i) const noexcept { return exp_[i % (spec_.q - 1)]; }

  // Frobenius a -> a^p.
  Element frobenius(Element a) const noexcept { return pow(a, spec_.p); }
  // Absolute trace GF(p^e) -> GF(p); the result is a prime-field code < p.
  Element trace(Element a) const noexcept { return trace_[a]; }

  // Base-p digit i of a code (coefficient of x^i).
  std::uint32_t digit(Element a, std::uint32_t i) const noexcept;

 private:
  Element add_digits(Element a, Element b) const noexcept;
  Element slow_mul(Element a, Element b) const;

  FieldSpec spec_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..e
  std::vector<Element> exp_;          // exp_[i] = g^i, i < q - 1
  std::vector<std::uint32_t> log_;
  std::vector<Element> neg_;
  std::vector<Element> add_table_;  // only for odd p and q <= 256
  std::vector<Element> trace_;
};

// GF(p^e) embedded in GF(p^(e*m)) through the smallest-code root of the small
// field's modulus inside the big field.
class SubfieldEmbedding {
 public:
  // Throws InvalidArgument unless both fields share p and e_small divides e_big.
  SubfieldEmbedding(FieldPtr big, FieldPtr small);

  const FieldPtr& big() const noexcept { return big_; }
  const FieldPtr& small() const noexcept { return small_; }
  std::uint32_t degree() const noexcept { return degree_; }  // m

  Element embed(Element small_code) const noexcept { return embed_[small_code]; }
  bool in_subfield(Element big_code) const noexcept;
  // Inverse of embed(); throws InvalidArgument for elements outside the subfield.
  Element restrict(Element big_code) const;

  // Tr(x) = sum_{i<m} x^(q_small^i), returned as a small-field code.
  Element relative_trace(Element big_code) const;

  // The subfield as big-field codes, in increasing small-field code order.
  const std::vector<Element>& subfield_elements() const noexcept { return embed_; }

 private:
  FieldPtr big_;
  FieldPtr small_;
  std::uint32_t degree_ = 1;
  std::vector<Element> embed_;
  std::vector<std::int32_t> restrict_;  // -1 outside the subfield
};

// Free-function form used by the trace constructions: Tr from GF(p^(e*m)) to
// GF(p^target_degree) with canonical moduli on both sides.
Element relative_trace(const GaloisField& big, Element x, std::uint32_t target_degree);

}  // namespace anticode

#endif  // ANTICODE_GF_HPP_
