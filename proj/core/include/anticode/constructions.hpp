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

#ifndef ANTICODE_CONSTRUCTIONS_HPP_
#define ANTICODE_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "anticode/caps.hpp"
#include "anticode/code.hpp"
#include "anticode/gf.hpp"

namespace anticode {

// Scales v so that its first nonzero coordinate is 1. Throws on the zero vector.
std::vector<Element> canonical_point(const GaloisField& f, std::span<const Element> v);

// sum_i v_i q^(k-1-i): the most significant digit is the first coordinate.
std::uint64_t encode_point(std::uint32_t q, std::span<const Element> v);
std::vector<Element> decode_point(std::uint32_t q, std::size_t k, std::uint64_t code);

// Distinct canonical projective points of GF(q)^k, sorted by encode_point.
class ProjectivePointSet {
 public:
  // Canonicalizes every vector. Throws InvalidArgument on a zero vector or on
  // two proportional vectors.
  ProjectivePointSet(FieldPtr field, std::size_t k, const std::vector<std::vector<Element>>& vectors);

  // Columns of a projective code; throws InvalidArgument otherwise.
  static ProjectivePointSet from_code(const LinearCode& code);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::vector<std::uint64_t>& encodings() const noexcept { return codes_; }
  std::vector<std::vector<Element>> points() const;

  // Each point prefixed with K - k zeros.
  ProjectivePointSet embedded(std::size_t K) const;

  // All points of PG(K-1, q) not in embedded(K). No length restriction, so
  // complemented(k).complemented(k) is the identity for every set.
  ProjectivePointSet complemented(std::size_t K, const Caps& caps = Caps::defaults()) const;

  friend bool operator==(const ProjectivePointSet& a, const ProjectivePointSet& b) {
    return a.field_->spec() == b.field_->spec() && a.k_ == b.k_ && a.codes_ == b.codes_;
  }

 private:
  ProjectivePointSet(FieldPtr field, std::size_t k, std::vector<std::uint64_t> codes)
      : field_(std::move(field)), k_(k), codes_(std::move(codes)) {}

  FieldPtr field_;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> codes_;
};

// All canonical points of GF(q)^k in increasing encoding order.
std::vector<std::uint64_t> projective_points(std::uint32_t q, std::size_t k, const Caps& caps = Caps::defaults());

// Generator matrix whose columns are the given points, in order.
GfMatrix points_matrix(const FieldPtr& field, std::size_t k, const std::vector<std::uint64_t>& codes);

LinearCode simplex(std::uint32_t q, std::size_t k, const Caps& caps = Caps::defaults());
LinearCode simplex(const FieldPtr& field, std::size_t k, const Caps& caps = Caps::defaults());

// Simplex columns of dimension K minus the embedded points. Throws
// InvalidArgument when K < k or |points| >= q^(K-1), RankDeficient when the
// remaining columns do not span (too few of them).
LinearCode complement(const ProjectivePointSet& points, std::size_t K, const Caps& caps = Caps::defaults());
LinearCode complement(const LinearCode& code, std::size_t K, const Caps& caps = Caps::defaults());

// Weight distribution of the K-dimensional complement predicted from the base
// distribution alone.
WeightDistribution transform_wd(const WeightDistribution& base, std::size_t K);

// Columns (1, a, ..., a^(k-1)) for every a in GF(q) by increasing code.
// Requires 2 <= k <= q.
LinearCode rs_code(std::uint32_t q, std::size_t k);

// Complement of the q moment-curve points in dimension K = k + h. Accepts
// k > q, where the points are still distinct but span fewer than k dimensions.
LinearCode complementary_rs(std::uint32_t q, std::size_t k, std::size_t h, const Caps& caps = Caps::defaults());

// Complement of the k unit vectors in dimension K = k + h.
LinearCode complementary_mds_trivial(std::uint32_t q, std::size_t k, std::size_t h, const Caps& caps = Caps::defaults());

// Binary code whose columns are all weight-w vectors of length k in
// lexicographic order; generator rows are an independent subset of the k
// coordinate rows.
LinearCode fixed_weight_anticode(std::size_t k, std::size_t w, const Caps& caps = Caps::defaults());

// Points of the subspaces (*,*,0,0) and (0,0,*,*).
LinearCode two_subspace_code(std::uint32_t q);

// Lexicographically smallest monic irreducible X^2 + bX + c over the field;
// returns {c, b}.
std::pair<Element, Element> smallest_irreducible_quadratic(const GaloisField& f);

// Elliptic quadric x0 x1 = x2^2 - b x2 x3 + c x3^2 (the norm form).
LinearCode ovoid_code(std::uint32_t q, const Caps& caps = Caps::defaults());

// (Tr(a x + b x^3)) over nonzero x in GF(2^m); m odd >= 3.
LinearCode dual_bch_code(std::uint32_t m);

// (Tr_2m(b x) + Tr_m(a x^(2^m+1))) over nonzero x in GF(2^(2m)).
LinearCode kasami_code(std::uint32_t m);

// Outer code over GF(2^s), each symbol replaced by its binary simplex
// codeword under the polynomial basis.
LinearCode concatenate_with_simplex(const LinearCode& outer);

}  // namespace anticode

#endif  // ANTICODE_CONSTRUCTIONS_HPP_
