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

#include "anticode/constructions.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>
#include <unordered_set>

#include "anticode/error.hpp"

namespace anticode {
namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(v, base, &v)) throw CapExceeded("integer overflow in q^k");
  }
  return v;
}

std::string qk(std::uint32_t q, std::size_t k) {
  return "[" + std::to_string(q) + "," + std::to_string(k) + "]";
}

}  // namespace

std::vector<Element> canonical_point(const GaloisField& f, std::span<const Element> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
  if (lead == v.end()) throw InvalidArgument("the zero vector is not a projective point");
  const Element s = f.inv(*lead);
  std::vector<Element> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(v[i], s);
  return out;
}

std::uint64_t encode_point(std::uint32_t q, std::span<const Element> v) {
  std::uint64_t code = 0;
  for (Element x : v) code = code * q + x;
  return code;
}

std::vector<Element> decode_point(std::uint32_t q, std::size_t k, std::uint64_t code) {
  std::vector<Element> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = static_cast<Element>(code % q);
    code /= q;
  }
  return v;
}

ProjectivePointSet::ProjectivePointSet(FieldPtr field, std::size_t k,
                                       const std::vector<std::vector<Element>>& vectors)
    : field_(std::move(field)), k_(k) {
  if (k_ == 0) throw InvalidArgument("point set needs dimension >= 1");
  if (!power_within(field_->q(), k_, 63)) throw CapExceeded("points do not fit in 64-bit codes");
  codes_.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != k_) throw InvalidArgument("point has wrong dimension");
    for (Element x : v) {
      if (!field_->contains(x)) throw InvalidArgument("point coordinate outside the field");
    }
    codes_.push_back(encode_point(field_->q(), canonical_point(*field_, v)));
  }
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw InvalidArgument("points are not pairwise independent (code is not projective)");
  }
}

ProjectivePointSet ProjectivePointSet::from_code(const LinearCode& code) {
  std::vector<std::vector<Element>> cols;
  cols.reserve(code.n());
  for (std::size_t c = 0; c < code.n(); ++c) cols.push_back(code.generator().column(c));
  return ProjectivePointSet(code.field(), code.k(), cols);
}

std::vector<std::vector<Element>> ProjectivePointSet::points() const {
  std::vector<std::vector<Element>> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(decode_point(field_->q(), k_, c));
  return out;
}

ProjectivePointSet ProjectivePointSet::embedded(std::size_t K) const {
  if (K < k_) throw InvalidArgument("cannot embed into a smaller dimension");
  if (!power_within(field_->q(), K, 63)) throw CapExceeded("points do not fit in 64-bit codes");
  // Leading zeros leave the integer code unchanged.
  return ProjectivePointSet(field_, K, codes_);
}

std::vector<std::uint64_t> projective_points(std::uint32_t q, std::size_t k, const Caps& caps) {
  if (k == 0) throw InvalidArgument("dimension must be >= 1");
  // (q^k - 1)/(q - 1) < q^k / (q - 1) <= q^k; check the smaller count exactly.
  if (!power_within(q, k, 62)) throw CapExceeded("q^k does not fit the point encoding");
  const std::uint64_t count = (ipow(q, k) - 1) / (q - 1);
  if (count > (std::uint64_t{1} << caps.points_log2)) {
    throw CapExceeded(std::to_string(count) + " projective points exceed the cap 2^" +
                      std::to_string(caps.points_log2));
  }
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t tail = 0; tail < k; ++tail) {
    const std::uint64_t lead = ipow(q, tail);
    for (std::uint64_t t = 0; t < lead; ++t) out.push_back(lead + t);
  }
  return out;
}

GfMatrix points_matrix(const FieldPtr& field, std::size_t k, const std::vector<std::uint64_t>& codes) {
  const std::uint32_t q = field->q();
  const std::size_t n = codes.size();
  std::vector<Element> data(k * n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t c = codes[j];
    for (std::size_t i = k; i-- > 0;) {
      data[i * n + j] = static_cast<Element>(c % q);
      c /= q;
    }
  }
  return GfMatrix(field, k, n, std::move(data));
}

LinearCode simplex(const FieldPtr& field, std::size_t k, const Caps& caps) {
  auto pts = projective_points(field->q(), k, caps);
  return LinearCode(points_matrix(field, k, pts), "simplex" + qk(field->q(), k));
}

LinearCode simplex(std::uint32_t q, std::size_t k, const Caps& caps) {
  return simplex(GaloisField::of_order(q), k, caps);
}

ProjectivePointSet ProjectivePointSet::complemented(std::size_t K, const Caps& caps) const {
  if (K < k_) {
    throw InvalidArgument("lifted dimension K=" + std::to_string(K) + " is below k=" + std::to_string(k_));
  }
  const ProjectivePointSet lifted = embedded(K);
  const auto all = projective_points(field_->q(), K, caps);
  std::vector<std::uint64_t> keep;
  keep.reserve(all.size() - lifted.size());
  std::set_difference(all.begin(), all.end(), lifted.codes_.begin(), lifted.codes_.end(),
                      std::back_inserter(keep));
  return ProjectivePointSet(field_, K, std::move(keep));
}

LinearCode complement(const ProjectivePointSet& points, std::size_t K, const Caps& caps) {
  const std::uint32_t q = points.field()->q();
  if (K < points.k()) {
    throw InvalidArgument("lifted dimension K=" + std::to_string(K) + " is below k=" +
                          std::to_string(points.k()));
  }
  if (points.size() >= ipow(q, K - 1)) {
    throw InvalidArgument("complement needs n < q^(K-1); n=" + std::to_string(points.size()) +
                          ", q^(K-1)=" + std::to_string(ipow(q, K - 1)));
  }
  const ProjectivePointSet rest = points.complemented(K, caps);
  return LinearCode(points_matrix(points.field(), K, rest.encodings()));
}

LinearCode complement(const LinearCode& code, std::size_t K, const Caps& caps) {
  LinearCode out = complement(ProjectivePointSet::from_code(code), K, caps);
  const std::string base = code.label().empty() ? "code" : code.label();
  return out.relabeled("complement(" + base + ",K=" + std::to_string(K) + ")");
}

WeightDistribution transform_wd(const WeightDistribution& base, std::size_t K) {
  base.validate();
  if (K < base.k) throw InvalidArgument("K must be at least the base dimension");
  const std::uint64_t q = base.q;
  const std::uint64_t top = ipow(q, K - 1);
  const std::uint64_t lift = ipow(q, K - base.k);
  const std::uint64_t length = (ipow(q, K) - 1) / (q - 1);
  if (base.n >= length) throw InvalidArgument("base length must be below (q^K - 1)/(q - 1)");
  WeightDistribution out;
  out.q = base.q;
  out.n = length - base.n;
  out.k = K;
  out.counts[0] = 1;
  for (const auto& [w, a] : base.counts) {
    if (w == 0) continue;
    if (w >= top) {
      throw InvalidArgument("base weight " + std::to_string(w) + " is not below q^(K-1)");
    }
    std::uint64_t c;
    if (__builtin_mul_overflow(a, lift, &c)) throw CapExceeded("count overflow");
    out.counts[top - w] += c;
  }
  if (K > base.k) out.counts[top] += lift - 1;
  return out;
}

LinearCode rs_code(std::uint32_t q, std::size_t k) {
  if (k < 2 || k > q) {
    throw InvalidArgument("Reed-Solomon code needs 2 <= k <= q, got k=" + std::to_string(k));
  }
  auto f = GaloisField::of_order(q);
  GfMatrix g(f, k, q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Element x = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g.set(i, a, x);
      x = f->mul(x, static_cast<Element>(a));
    }
  }
  return LinearCode(std::move(g), "rs" + qk(q, k));
}

LinearCode complementary_rs(std::uint32_t q, std::size_t k, std::size_t h, const Caps& caps) {
  if (k < 2) throw InvalidArgument("complementary RS code needs k >= 2");
  auto f = GaloisField::of_order(q);
  std::vector<std::vector<Element>> pts;
  for (std::uint32_t a = 0; a < q; ++a) {
    std::vector<Element> v(k);
    Element x = 1;
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = x;
      x = f->mul(x, static_cast<Element>(a));
    }
    pts.push_back(std::move(v));
  }
  LinearCode c = complement(ProjectivePointSet(f, k, pts), k + h, caps);
  return c.relabeled("comp-rs[" + std::to_string(q) + "," + std::to_string(k) + ",h=" +
                     std::to_string(h) + "]");
}

LinearCode complementary_mds_trivial(std::uint32_t q, std::size_t k, std::size_t h, const Caps& caps) {
  if (k < 2) throw InvalidArgument("complementary MDS code needs k >= 2");
  auto f = GaloisField::of_order(q);
  std::vector<std::vector<Element>> pts(k, std::vector<Element>(k, 0));
  for (std::size_t i = 0; i < k; ++i) pts[i][i] = 1;
  LinearCode c = complement(ProjectivePointSet(f, k, pts), k + h, caps);
  return c.relabeled("comp-mds[" + std::to_string(q) + "," + std::to_string(k) + ",h=" +
                     std::to_string(h) + "]");
}

LinearCode fixed_weight_anticode(std::size_t k, std::size_t w, const Caps& caps) {
  if (w < 2 || w + 1 > k) throw InvalidArgument("fixed-weight anticode needs 2 <= w <= k-1");
  if (k > 63) throw CapExceeded("fixed-weight anticode supports k <= 63");
  std::vector<std::uint64_t> cols;
  const std::uint64_t limit = std::uint64_t{1} << caps.points_log2;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    if (static_cast<std::size_t>(std::popcount(v)) != w) continue;
    cols.push_back(v);
    if (cols.size() > limit) throw CapExceeded("too many fixed-weight columns");
  }
  auto f = GaloisField::get(2, 1);
  GfMatrix full = points_matrix(f, k, cols);
  return LinearCode(independent_rows(full),
                    "fixed-weight[k=" + std::to_string(k) + ",w=" + std::to_string(w) + "]");
}

LinearCode two_subspace_code(std::uint32_t q) {
  auto f = GaloisField::of_order(q);
  std::vector<std::vector<Element>> pts;
  auto line = [&](std::size_t offset) {
    std::vector<Element> v(4, 0);
    v[offset + 1] = 1;
    pts.push_back(v);
    for (std::uint32_t a = 0; a < q; ++a) {
      v[offset] = 1;
      v[offset + 1] = static_cast<Element>(a);
      pts.push_back(v);
    }
  };
  line(0);
  line(2);
  ProjectivePointSet set(f, 4, pts);
  return LinearCode(points_matrix(f, 4, set.encodings()), "two-subspace[" + std::to_string(q) + "]");
}

std::pair<Element, Element> smallest_irreducible_quadratic(const GaloisField& f) {
  const std::uint32_t q = f.q();
  for (std::uint32_t c = 1; c < q; ++c) {
    for (std::uint32_t b = 0; b < q; ++b) {
      bool root = false;
      for (std::uint32_t x = 0; x < q && !root; ++x) {
        const auto e = static_cast<Element>(x);
        const Element v =
            f.add(f.add(f.mul(e, e), f.mul(static_cast<Element>(b), e)), static_cast<Element>(c));
        root = v == 0;
      }
      if (!root) return {static_cast<Element>(c), static_cast<Element>(b)};
    }
  }
  throw InvalidArgument("no irreducible quadratic found");
}

LinearCode ovoid_code(std::uint32_t q, const Caps& caps) {
  auto f = GaloisField::of_order(q);
  const auto [c, b] = smallest_irreducible_quadratic(*f);
  const Element minus_b = f->neg(b);
  std::vector<std::uint64_t> keep;
  for (std::uint64_t code : projective_points(q, 4, caps)) {
    const auto x = decode_point(q, 4, code);
    const Element lhs = f->mul(x[0], x[1]);
    const Element rhs = f->add(f->add(f->mul(x[2], x[2]), f->mul(minus_b, f->mul(x[2], x[3]))),
                               f->mul(c, f->mul(x[3], x[3])));
    if (lhs == rhs) keep.push_back(code);
  }
  return LinearCode(points_matrix(f, 4, keep), "ovoid[" + std::to_string(q) + "]");
}

LinearCode dual_bch_code(std::uint32_t m) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("dual BCH construction needs odd m >= 3");
  if (m > 16) throw CapExceeded("dual BCH construction supports m <= 16");
  auto big = GaloisField::get(2, m);
  const std::uint32_t n = big->q() - 1;
  GfMatrix g(GaloisField::get(2, 1), 2 * m, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto x = static_cast<Element>(j + 1);
    const Element x3 = big->pow(x, 3);
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto beta = static_cast<Element>(1u << i);
      g.set(i, j, big->trace(big->mul(beta, x)));
      g.set(m + i, j, big->trace(big->mul(beta, x3)));
    }
  }
  return LinearCode(std::move(g), "dual-bch[m=" + std::to_string(m) + "]");
}

LinearCode kasami_code(std::uint32_t m) {
  if (m < 1) throw InvalidArgument("Kasami construction needs m >= 1");
  if (2 * m > 16) throw CapExceeded("Kasami construction supports m <= 8");
  auto big = GaloisField::get(2, 2 * m);
  auto small = GaloisField::get(2, m);
  SubfieldEmbedding emb(big, small);
  const std::uint32_t n = big->q() - 1;
  const std::uint64_t e = (std::uint64_t{1} << m) + 1;
  GfMatrix g(GaloisField::get(2, 1), 3 * m, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto x = static_cast<Element>(j + 1);
    const Element y = emb.restrict(big->pow(x, e));
    for (std::uint32_t i = 0; i < 2 * m; ++i) {
      g.set(i, j, big->trace(big->mul(static_cast<Element>(1u << i), x)));
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      g.set(2 * m + i, j, small->trace(small->mul(static_cast<Element>(1u << i), y)));
    }
  }
  const std::size_t r = mat_rank(g);
  if (r != 3 * m) {
    throw InvalidArgument("Kasami construction for m=" + std::to_string(m) + " has rank " +
                          std::to_string(r) + ", expected " + std::to_string(3 * m));
  }
  return LinearCode(std::move(g), "kasami[m=" + std::to_string(m) + "]");
}

LinearCode concatenate_with_simplex(const LinearCode& outer) {
  const GaloisField& f = *outer.field();
  if (f.p() != 2) throw InvalidArgument("concatenation needs an outer field of characteristic 2");
  const std::uint32_t s = f.e();
  const std::uint32_t inner_n = (1u << s) - 1;
  // Inner simplex columns are the nonzero vectors of GF(2)^s; column v gives
  // the bit sum_i y_i v_i for symbol digits y_i.
  std::vector<std::uint32_t> inner;
  for (std::uint32_t v = 1; v <= inner_n; ++v) inner.push_back(v);
  auto bit_of = [&](Element y, std::uint32_t v) {
    std::uint32_t acc = 0;
    for (std::uint32_t i = 0; i < s; ++i) {
      // Column vector coordinate i is bit (s-1-i) of v, most significant first.
      acc ^= ((y >> i) & 1u) & ((v >> (s - 1 - i)) & 1u);
    }
    return static_cast<Element>(acc);
  };
  const std::size_t n = outer.n() * inner_n;
  GfMatrix g(GaloisField::get(2, 1), outer.k() * s, n);
  for (std::size_t r = 0; r < outer.k(); ++r) {
    for (std::uint32_t j = 0; j < s; ++j) {
      const std::size_t row = r * s + j;
      const auto xj = static_cast<Element>(1u << j);
      for (std::size_t c = 0; c < outer.n(); ++c) {
        const Element y = f.mul(xj, outer.generator().at(r, c));
        for (std::uint32_t t = 0; t < inner_n; ++t) g.set(row, c * inner_n + t, bit_of(y, inner[t]));
      }
    }
  }
  const std::string base = outer.label().empty() ? "code" : outer.label();
  return LinearCode(std::move(g), "concat(" + base + ")");
}

}  // namespace anticode
