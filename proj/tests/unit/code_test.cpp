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

#include <map>
#include <random>
#include <vector>

#include "anticode/code.hpp"
#include "anticode/error.hpp"
#include "doctest.h"

using namespace anticode;

namespace {

std::vector<std::vector<Element>> all_messages(std::uint32_t q, std::size_t k) {
  std::vector<std::vector<Element>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<Element>> next;
    for (const auto& m : out)
      for (std::uint32_t a = 0; a < q; ++a) {
        next.push_back(m);
        next.back().push_back(static_cast<Element>(a));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Element> encode_oracle(const LinearCode& c, const std::vector<Element>& m) {
  const auto& f = *c.field();
  std::vector<Element> w(c.n(), 0);
  for (std::size_t j = 0; j < c.n(); ++j)
    for (std::size_t i = 0; i < c.k(); ++i)
      w[j] = f.add(w[j], f.mul(m[i], c.generator().at(i, j)));
  return w;
}

std::map<std::size_t, std::uint64_t> wd_oracle(const LinearCode& c) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& m : all_messages(c.q(), c.k())) ++out[hamming_weight(encode_oracle(c, m))];
  return out;
}

// c = xG is minimal iff the columns where c vanishes span a hyperplane.
bool minimal_oracle(const LinearCode& c) {
  for (const auto& m : all_messages(c.q(), c.k())) {
    const auto w = encode_oracle(c, m);
    if (hamming_weight(w) == 0) continue;
    std::vector<std::vector<Element>> cols;
    for (std::size_t j = 0; j < c.n(); ++j)
      if (w[j] == 0) cols.push_back(c.generator().column(j));
    if (cols.empty()) {
      if (c.k() != 1) return false;
      continue;
    }
    if (mat_rank(GfMatrix::from_columns(c.field(), c.k(), cols)) != c.k() - 1) return false;
  }
  return true;
}

LinearCode simplex23() {
  return code_from_generator(GaloisField::get(2, 1), {{0, 0, 0, 1, 1, 1, 1},
                                                      {0, 1, 1, 0, 0, 1, 1},
                                                      {1, 0, 1, 0, 1, 0, 1}});
}

LinearCode random_code(std::mt19937& rng, std::uint32_t p, std::uint32_t e, std::size_t k,
                       std::size_t n) {
  auto f = GaloisField::get(p, e);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(f->q()) - 1);
  for (;;) {
    std::vector<std::vector<Element>> rows(k, std::vector<Element>(n));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<Element>(pick(rng));
    GfMatrix g = GfMatrix::from_rows(f, rows);
    if (mat_rank(g) == k) return LinearCode(g);
  }
}

}  // namespace

TEST_CASE("construction validates rank") {
  auto f2 = GaloisField::get(2, 1);
  CHECK(simplex23().n() == 7);
  try {
    code_from_generator(f2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    FAIL("expected RankDeficient");
  } catch (const RankDeficient& e) {
    CHECK(e.actual() == 2);
    CHECK(e.expected() == 3);
  }
  auto f3 = GaloisField::get(3, 1);
  auto c = code_from_generator(f3, {{1, 0, 1, 2}, {0, 1, 1, 1}});
  CHECK(c.k() == 2);
  CHECK(c.n() == 4);
}

TEST_CASE("simplex weight distribution") {
  auto wd = weight_distribution(simplex23());
  CHECK(wd.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {4, 7}});
  wd.validate();
}

TEST_CASE("both enumeration strategies agree with a naive oracle") {
  std::mt19937 rng(7);
  const std::vector<std::tuple<int, int, int, int>> shapes{
      {2, 1, 1, 5}, {2, 1, 5, 12}, {2, 1, 8, 70}, {3, 1, 3, 7}, {5, 1, 2, 6}, {2, 2, 3, 9}, {3, 2, 2, 10}, {2, 3, 2, 5}, {7, 1, 3, 8}};
  for (auto [p, e, k, n] : shapes) {
    for (int trial = 0; trial < 3; ++trial) {
      auto c = random_code(rng, p, e, k, n);
      auto full = weight_distribution(c, Enumeration::kFullMessages);
      auto classes = weight_distribution(c, Enumeration::kScalarClasses);
      CHECK(full == classes);
      CHECK(full.counts == wd_oracle(c));
      full.validate();
    }
  }
}

TEST_CASE("weight equals n minus columns in the message hyperplane") {
  std::mt19937 rng(11);
  auto c = random_code(rng, 3, 1, 4, 15);
  const auto& f = *c.field();
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Element> x(4);
    for (auto& v : x) v = static_cast<Element>(pick(rng));
    std::size_t on = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      Element dot = 0;
      for (std::size_t i = 0; i < 4; ++i) dot = f.add(dot, f.mul(x[i], c.generator().at(i, j)));
      on += dot == 0;
    }
    CHECK(hamming_weight(c.encode(x)) == c.n() - on);
  }
}

TEST_CASE("enumeration cap") {
  Caps caps;
  caps.enumeration_log2 = 2;
  CHECK_THROWS_AS(weight_distribution(simplex23(), Enumeration::kScalarClasses, caps), CapExceeded);
}

TEST_CASE("dual code and dual distance") {
  auto s = simplex23();
  auto h = dual_code(s);
  CHECK(h.k() == 4);
  CHECK(min_distance(h) == 3);
  CHECK(dual_distance(s).exact == 3u);

  auto f2 = GaloisField::get(2, 1);
  auto sd = code_from_generator(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto sdd = dual_code(sd);
  CHECK(weight_distribution(sdd) == weight_distribution(sd));
  CHECK(dual_distance(sd).exact == 2u);
  CHECK_FALSE(dual_distance(sd).at_least_three);

  Caps tiny;
  tiny.enumeration_log2 = 1;
  auto dd = dual_distance(s, tiny);
  CHECK_FALSE(dd.exact.has_value());
  CHECK(dd.at_least_three);
  CHECK_THROWS_AS(dual_distance(s, tiny, false), CapExceeded);
}

TEST_CASE("projectivity") {
  CHECK(is_projective(simplex23()));
  auto f2 = GaloisField::get(2, 1);
  CHECK_FALSE(is_projective(code_from_generator(f2, {{1, 1, 0}, {0, 0, 1}})));
  auto f3 = GaloisField::get(3, 1);
  CHECK_FALSE(is_projective(code_from_generator(f3, {{1, 2, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_projective(code_from_generator(f3, {{1, 0, 0}, {0, 0, 1}})));
}

TEST_CASE("projectivity agrees with dual distance") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_code(rng, trial % 2 ? 3 : 2, 1, 3, 6 + trial % 4);
    auto dd = dual_distance(c);
    REQUIRE(dd.exact.has_value());
    CHECK(is_projective(c) == (*dd.exact >= 3));
  }
}

TEST_CASE("exact minimality") {
  CHECK(is_minimal_exact(simplex23()).minimal);
  auto f2 = GaloisField::get(2, 1);
  auto v = is_minimal_exact(code_from_generator(f2, {{1, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(v.minimal);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == std::vector<Element>{0, 0, 1});
  CHECK(v.witness->second == std::vector<Element>{1, 1, 1});
}

TEST_CASE("minimality matches the hyperplane oracle; AB implies minimal") {
  std::mt19937 rng(5);
  const std::vector<std::tuple<int, int, int, int>> shapes{
      {2, 1, 3, 7}, {2, 1, 4, 9}, {2, 1, 4, 14}, {3, 1, 3, 8}, {2, 2, 3, 9}, {5, 1, 2, 5}};
  for (auto [p, e, k, n] : shapes) {
    for (int trial = 0; trial < 6; ++trial) {
      auto c = random_code(rng, p, e, k, n);
      auto v = is_minimal_exact(c);
      CHECK(v.minimal == minimal_oracle(c));
      if (!v.minimal) {
        REQUIRE(v.witness.has_value());
        const auto& [a, b] = *v.witness;
        for (std::size_t j = 0; j < a.size(); ++j) CHECK((a[j] == 0 || b[j] != 0));
      }
      if (ab_criterion(weight_distribution(c))) CHECK(v.minimal);
    }
  }
}

TEST_CASE("Ashikhmin-Barg arithmetic") {
  CHECK(ab_criterion(2, 26, 30));
  CHECK(ab_criterion(5, 4, 4));
  CHECK_FALSE(ab_criterion(2, 2, 6));
}

TEST_CASE("distribution validation") {
  WeightDistribution wd{3, 4, 1, {{0, 1}, {4, 2}}};
  wd.validate();
  wd.counts[4] = 1;
  wd.counts[3] = 1;
  CHECK_THROWS_AS(wd.validate(), InvalidArgument);
  CHECK(to_string(WeightDistribution{2, 7, 3, {{0, 1}, {4, 7}}}) == "{0:1, 4:7}");
}
