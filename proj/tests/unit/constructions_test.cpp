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

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "anticode/constructions.hpp"
#include "anticode/error.hpp"
#include "anticode/matrix.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace anticode;

namespace {

using Dist = std::map<std::size_t, std::uint64_t>;

// GF(2^m) by shift-and-add with a fixed primitive polynomial.
struct Gf2m {
  unsigned m;
  unsigned poly;
  unsigned mul(unsigned a, unsigned b) const {
    unsigned r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a >> m) a ^= poly;
    }
    return r;
  }
  unsigned pow(unsigned a, unsigned e) const {
    unsigned r = 1;
    while (e--) r = mul(r, a);
    return r;
  }
  // sum of a^(2^i), i < deg
  unsigned trace(unsigned a, unsigned deg) const {
    unsigned s = 0, t = a;
    for (unsigned i = 0; i < deg; ++i) {
      s ^= t;
      t = mul(t, t);
    }
    return s;
  }
};

Dist dual_bch_oracle(unsigned m, unsigned poly) {
  Gf2m f{m, poly};
  Dist out;
  const unsigned q = 1u << m;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      std::size_t w = 0;
      for (unsigned x = 1; x < q; ++x) w += f.trace(f.mul(a, x) ^ f.mul(b, f.pow(x, 3)), m);
      ++out[w];
    }
  return out;
}

Dist kasami_oracle() {
  Gf2m f{4, 0b10011};
  std::vector<unsigned> sub;  // GF(4) inside GF(16)
  for (unsigned y = 0; y < 16; ++y)
    if (f.pow(y, 4) == y) sub.push_back(y);
  REQUIRE(sub.size() == 4);
  Dist out;
  for (unsigned a : sub)
    for (unsigned b = 0; b < 16; ++b) {
      std::size_t w = 0;
      for (unsigned x = 1; x < 16; ++x) {
        const unsigned t = f.trace(f.mul(b, x), 4) ^ f.trace(f.mul(a, f.pow(x, 5)), 2);
        REQUIRE(t <= 1);
        w += t;
      }
      ++out[w];
    }
  return out;
}

Dist with_zero(Dist d) {
  d[0] += 0;
  return d;
}

WeightDistribution enumerate(const LinearCode& c) { return weight_distribution(c, Enumeration::kFullMessages); }

}  // namespace

TEST_CASE("canonical points") {
  auto f = GaloisField::get(5, 1);
  std::vector<Element> v{0, 3, 4};
  auto c = canonical_point(*f, v);
  CHECK(c == std::vector<Element>{0, 1, f->div(4, 3)});
  CHECK_THROWS_AS(canonical_point(*f, std::vector<Element>{0, 0}), InvalidArgument);
  for (std::uint64_t x = 0; x < 125; ++x) CHECK(encode_point(5, decode_point(5, 3, x)) == x);
  CHECK(encode_point(3, std::vector<Element>{1, 0, 2}) == 11);

  auto pts = projective_points(3, 3);
  CHECK(pts.size() == 13);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (auto p : pts) {
    auto v3 = decode_point(3, 3, p);
    CHECK(canonical_point(*GaloisField::get(3, 1), v3) == v3);
  }
  CHECK_THROWS_AS(ProjectivePointSet(GaloisField::get(3, 1), 2, {{1, 1}, {2, 2}}), InvalidArgument);
}

TEST_CASE("simplex codes") {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::size_t k = 2; k <= 4 && oracle::ipow(q, k) <= 4096; ++k) {
      LinearCode s = simplex(q, k);
      const std::uint64_t n = (oracle::ipow(q, k) - 1) / (q - 1);
      CHECK(s.n() == n);
      CHECK(is_projective(s));
      CHECK(oracle::wd(s) == Dist{{0, 1}, {oracle::ipow(q, k - 1), oracle::ipow(q, k) - 1}});
    }
}

TEST_CASE("complement and the distribution transform") {
  SUBCASE("reed-muller from an embedded simplex") {
    for (std::size_t k = 3; k <= 6; ++k) {
      LinearCode rm = complement(simplex(2, k - 1), k);
      CHECK(rm.n() == (std::size_t{1} << (k - 1)));
      CHECK(rm.k() == k);
      CHECK(enumerate(rm).min_nonzero_weight() == (std::size_t{1} << (k - 2)));
    }
  }
  SUBCASE("fixed-weight base lifted to K = 7") {
    LinearCode c = complement(fixed_weight_anticode(7, 4), 7);
    CHECK(c.n() == 92);
    CHECK(oracle::wd(c) == Dist{{0, 1}, {44, 56}, {48, 70}, {64, 1}});
  }
  SUBCASE("transform examples") {
    WeightDistribution base{2, 35, 6, {{0, 1}, {16, 35}, {20, 28}}};
    CHECK(transform_wd(base, 7).counts == Dist{{0, 1}, {44, 56}, {48, 70}, {64, 1}});
    CHECK(transform_wd(base, 6).counts == Dist{{0, 1}, {12, 28}, {16, 35}});
    WeightDistribution s23{2, 7, 3, {{0, 1}, {4, 7}}};
    WeightDistribution t = transform_wd(s23, 4);
    CHECK(t.counts == Dist{{0, 1}, {4, 14}, {8, 1}});
    CHECK(t.n == 8);
    CHECK_THROWS_AS(transform_wd(s23, 2), InvalidArgument);
  }
  SUBCASE("transform agrees with enumeration") {
    std::vector<LinearCode> bases = {simplex(2, 3), fixed_weight_anticode(6, 2), dual_bch_code(3), kasami_code(2),
                                     two_subspace_code(3), ovoid_code(3), ovoid_code(4), rs_code(5, 3),
                                     rs_code(4, 2), ovoid_code(2), two_subspace_code(2)};
    int checked = 0;
    for (const LinearCode& b : bases) {
      const WeightDistribution bw = enumerate(b);
      for (std::size_t K = b.k(); K <= b.k() + 2; ++K) {
        if (!power_within(b.q(), K, 16)) break;
        if (b.n() >= oracle::ipow(b.q(), K - 1)) continue;
        LinearCode c = complement(b, K);
        CHECK(c.n() + b.n() == (oracle::ipow(b.q(), K) - 1) / (b.q() - 1));
        CHECK(c.k() == K);
        const WeightDistribution cw = enumerate(c);
        CHECK(cw == transform_wd(bw, K));
        CHECK(cw.min_nonzero_weight() == oracle::ipow(b.q(), K - 1) - bw.max_weight());
        ++checked;
      }
    }
    CHECK(checked >= 15);
  }
  SUBCASE("involution") {
    for (const LinearCode& c : {dual_bch_code(3), ovoid_code(3), two_subspace_code(4), rs_code(7, 3),
                                fixed_weight_anticode(6, 3), kasami_code(2)}) {
      const ProjectivePointSet p = ProjectivePointSet::from_code(c);
      const ProjectivePointSet r = p.complemented(c.k());
      CHECK(r.size() + p.size() == (oracle::ipow(c.q(), c.k()) - 1) / (c.q() - 1));
      CHECK(r.complemented(c.k()) == p);
    }
    // through codes when both sides satisfy the length condition
    LinearCode o = code_from_generator(GaloisField::get(3, 1), {{1, 0, 0, 1, 1, 0},
                                                                {0, 1, 0, 1, 0, 1},
                                                                {0, 0, 1, 0, 1, 1}});
    LinearCode back = complement(complement(o, 3), 3);
    CHECK(ProjectivePointSet::from_code(back) == ProjectivePointSet::from_code(o));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(complement(simplex(2, 3), 3), InvalidArgument);
    CHECK_THROWS_AS(complement(simplex(2, 3), 2), InvalidArgument);
    LinearCode rep = code_from_generator(GaloisField::get(2, 1), {{1, 1}});
    CHECK_THROWS_AS(complement(rep, 2), InvalidArgument);  // not projective
  }
}

TEST_CASE("reed-solomon and its complements") {
  for (std::uint32_t q : {3, 4, 5, 7})
    for (std::size_t k = 2; k <= 3; ++k) {
      LinearCode rs = rs_code(q, k);
      CHECK(rs.n() == q);
      CHECK(oracle::wd(rs).upper_bound(0)->first == q - k + 1);  // MDS
    }
  CHECK_THROWS_AS(rs_code(3, 4), InvalidArgument);

  LinearCode c = complementary_rs(4, 3, 0);
  CHECK(c.n() == 17);
  CHECK(enumerate(c).nonzero_weights() == std::vector<std::size_t>{12, 13, 14});
  CHECK(is_minimal_exact(c).minimal);

  LinearCode b = complementary_rs(2, 5, 0);
  CHECK(b.n() == 29);
  CHECK(b.k() == 5);
  CHECK(enumerate(b).min_nonzero_weight() == 14);

  LinearCode lifted = complementary_rs(4, 3, 1);
  CHECK(lifted.n() == 81);
  CHECK(enumerate(lifted).nonzero_weights() == std::vector<std::size_t>{60, 61, 62, 64});
}

TEST_CASE("complementary trivial MDS") {
  LinearCode c = complementary_mds_trivial(4, 3, 0);
  CHECK(c.n() == 18);
  WeightDistribution w = enumerate(c);
  CHECK(w.min_nonzero_weight() == 13);
  CHECK(w.nonzero_weights() == std::vector<std::size_t>{13, 14, 15});
  CHECK(enumerate(complementary_mds_trivial(5, 3, 0)).min_nonzero_weight() == 22);
  CHECK_THROWS(complementary_mds_trivial(2, 2, 0));
}

TEST_CASE("fixed-weight anticodes") {
  CHECK(oracle::wd(fixed_weight_anticode(7, 4)) == Dist{{0, 1}, {16, 35}, {20, 28}});
  CHECK(oracle::wd(fixed_weight_anticode(8, 4)) == Dist{{0, 1}, {32, 35}, {35, 64}, {40, 28}});
  for (std::size_t s = 2; s <= 5; ++s) {
    LinearCode c = fixed_weight_anticode(2 * s, 2);
    CHECK(c.k() == 2 * s - 1);
    CHECK(enumerate(c).max_weight() == s * s);
  }
  CHECK(fixed_weight_anticode(7, 3).k() == 7);
  CHECK_THROWS_AS(fixed_weight_anticode(5, 5), InvalidArgument);
  CHECK_THROWS_AS(fixed_weight_anticode(5, 1), InvalidArgument);
}

TEST_CASE("two-subspace and ovoid codes") {
  LinearCode t = two_subspace_code(3);
  CHECK(oracle::wd(t) == Dist{{0, 1}, {3, 16}, {6, 64}});
  CHECK(enumerate(complement(t, 4)).min_nonzero_weight() == 21);
  for (std::uint32_t q : {2, 4, 5}) {
    LinearCode c = two_subspace_code(q);
    CHECK(c.n() == 2 * q + 2);
    CHECK(enumerate(c).nonzero_weights() == std::vector<std::size_t>{q, 2 * q});
  }

  for (std::uint32_t q : {2, 3, 4, 5}) {
    LinearCode o = ovoid_code(q);
    CHECK(o.n() == q * q + 1);
    CHECK(enumerate(o).nonzero_weights() == std::vector<std::size_t>{q * q - q, q * q});
    // no three points on a line
    const auto f = o.field();
    for (std::size_t a = 0; a < o.n(); ++a)
      for (std::size_t b = a + 1; b < o.n(); ++b)
        for (std::size_t c = b + 1; c < o.n(); ++c) {
          auto m = GfMatrix::from_columns(f, 4, {o.generator().column(a), o.generator().column(b),
                                                 o.generator().column(c)});
          REQUIRE(mat_rank(m) == 3);
        }
  }
  WeightDistribution c68 = enumerate(complement(ovoid_code(4), 4));
  CHECK(c68.n == 68);
  CHECK(c68.counts == Dist{{0, 1}, {48, 51}, {52, 204}});
}

TEST_CASE("trace codes") {
  CHECK(oracle::wd(dual_bch_code(3)) == dual_bch_oracle(3, 0b1011));
  CHECK(enumerate(dual_bch_code(5)).counts == with_zero(dual_bch_oracle(5, 0b100101)));
  CHECK(oracle::wd(kasami_code(2)) == kasami_oracle());
  CHECK(is_projective(dual_bch_code(3)));
  CHECK(is_projective(kasami_code(2)));
  CHECK(kasami_code(3).k() == 9);
  CHECK_THROWS_AS(dual_bch_code(4), InvalidArgument);

  WeightDistribution k48 = enumerate(complement(kasami_code(2), 6));
  CHECK(k48.n == 48);
  CHECK(k48.nonzero_weights() == std::vector<std::size_t>{22, 24, 26});
  for (std::size_t K : {7, 8}) {
    WeightDistribution w = enumerate(complement(kasami_code(2), K));
    CHECK(w.count(std::size_t{1} << (K - 1)) == (std::uint64_t{1} << (K - 6)) - 1);
  }
}

TEST_CASE("concatenation with the binary simplex code") {
  for (const LinearCode& outer : {ovoid_code(4), two_subspace_code(4), rs_code(4, 2), ovoid_code(8)}) {
    const std::size_t s = outer.field()->e();
    LinearCode c = concatenate_with_simplex(outer);
    CHECK(c.q() == 2);
    CHECK(c.n() == outer.n() * ((std::size_t{1} << s) - 1));
    CHECK(c.k() == outer.k() * s);
    WeightDistribution ow = enumerate(outer);
    WeightDistribution cw = weight_distribution(c);
    CHECK(cw.counts.size() == ow.counts.size());
    for (const auto& [w, a] : ow.counts) CHECK(cw.count(w << (s - 1)) == a);
  }
  WeightDistribution c51 = weight_distribution(concatenate_with_simplex(ovoid_code(4)));
  CHECK(c51.counts == Dist{{0, 1}, {24, 204}, {32, 51}});
  CHECK_THROWS_AS(concatenate_with_simplex(simplex(3, 2)), InvalidArgument);
}
