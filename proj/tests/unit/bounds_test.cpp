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

#include <cstdint>
#include <vector>

#include "anticode/bounds.hpp"
#include "anticode/error.hpp"
#include "doctest.h"

using namespace anticode;

namespace {

std::int64_t griesmer_oracle(std::int64_t q, std::int64_t k, std::int64_t d) {
  std::int64_t s = 0, p = 1;
  for (std::int64_t i = 0; i < k; ++i, p *= q) s += (d + p - 1) / p;
  return s;
}

std::int64_t antigriesmer_oracle(std::int64_t q, std::int64_t k, std::int64_t delta) {
  std::int64_t s = 0, p = 1;
  for (std::int64_t i = 0; i < k; ++i, p *= q) s += delta / p;
  return s;
}

// Largest subset of F_2^n with all pairwise distances <= delta, by exhaustive
// search over subsets (n <= 4).
std::size_t max_anticode(unsigned n, unsigned delta) {
  const unsigned v = 1u << n;
  std::size_t best = 0;
  for (std::uint32_t set = 1; set < (1u << v); ++set) {
    bool ok = true;
    for (unsigned a = 0; a < v && ok; ++a)
      if (set >> a & 1)
        for (unsigned b = a + 1; b < v && ok; ++b)
          if ((set >> b & 1) && static_cast<unsigned>(__builtin_popcount(a ^ b)) > delta) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(set));
  }
  return best;
}

}  // namespace

TEST_CASE("griesmer sums") {
  CHECK(griesmer_sum(2, 6, 26) == 53);
  CHECK(griesmer(2, 6, 26, 56).defect == 3);
  CHECK(griesmer(2, 5, 14, 29).defect == 1);
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::uint64_t k = 1; k <= 6; ++k) {
      CHECK(griesmer_sum(q, k, 1) == k);
      for (std::uint64_t d = 1; d <= 60; d += 7) {
        CHECK(griesmer_sum(q, k, d) == griesmer_oracle(q, k, d));
      }
    }
  // simplex meets the bound
  CHECK(griesmer(2, 4, 8, 15).defect == 0);
  CHECK(griesmer(3, 3, 9, 13).defect == 0);
  // a negative defect is reported, not clamped
  CHECK(griesmer(2, 3, 4, 6).defect == -1);
}

TEST_CASE("griesmer sums stay exact beyond 64 bits") {
  const BigInt s = griesmer_sum(2, 70, std::uint64_t{1} << 62);
  BigInt expect = 0;
  for (int i = 0; i < 70; ++i) {
    BigInt p = BigInt(1) << i;
    expect += (BigInt(std::uint64_t{1} << 62) + p - 1) / p;
  }
  CHECK(s == expect);
}

TEST_CASE("antigriesmer") {
  AntiGriesmerResult r = antigriesmer(2, 6, 30, 56);
  CHECK(r.sum == 56);
  CHECK(r.defect == 0);
  CHECK(r.holds);
  CHECK_FALSE(r.hypothesis);  // 56 >= 2^5

  r = antigriesmer(2, 5, 18, 29);
  CHECK(r.sum == 34);
  CHECK(r.defect == 5);

  for (std::uint64_t q : {2, 3, 4})
    for (std::uint64_t k = 2; k <= 5; ++k) {
      std::uint64_t top = 1, n = 0;
      for (std::uint64_t i = 0; i + 1 < k; ++i) top *= q;
      for (std::uint64_t p = 1; p <= top; p *= q) n += p;
      AntiGriesmerResult s = antigriesmer(q, k, top, n);  // simplex
      CHECK(s.sum == n);
      CHECK(s.defect == 0);
      for (std::uint64_t d = 0; d < 3 * top; d += 5) CHECK(antigriesmer(q, k, d, n).sum == antigriesmer_oracle(q, k, d));
    }
  CHECK(antigriesmer(2, 6, 20, 31).hypothesis);
}

TEST_CASE("erdos-kleitman") {
  CHECK(erdos_kleitman(4, 2) == 5);
  CHECK(erdos_kleitman(7, 0) == 1);
  CHECK(erdos_kleitman(5, 4) == 16);
  CHECK(erdos_kleitman(5, 5) == 16);  // floor(delta / 2)
  CHECK(erdos_kleitman(4, 2) == max_anticode(4, 2));
  CHECK(erdos_kleitman(3, 2) == max_anticode(3, 2));
  CHECK(erdos_kleitman(4, 3) == 5);
  BigInt binom = 1, sum = 1;
  for (int i = 1; i <= 30; ++i) {
    binom = binom * (100 - i + 1) / i;
    sum += binom;
  }
  CHECK(erdos_kleitman(100, 61) == sum);
  CHECK_THROWS_AS(erdos_kleitman(3, 4), InvalidArgument);
}

TEST_CASE("code-anticode") {
  CHECK(code_anticode_check(16, 8, 2, 7));   // Hamming code with the radius-1 ball
  CHECK_FALSE(code_anticode_check(16, 9, 2, 7));
  CHECK(code_anticode_check(8, 8, 2, 7));
  CHECK(code_anticode_check(1, BigInt(1) << 40, 2, 40));
}

TEST_CASE("plotkin floor and report") {
  CHECK(plotkin_anticode_floor(2, 56) == 28);
  CHECK(plotkin_anticode_floor(3, 13) == 9);
  CHECK(plotkin_anticode_floor(4, 17) == 13);

  BoundsReport b = bounds_report(2, 56, 6, 26, 30);
  CHECK(b.griesmer_defect == 3);
  CHECK(b.antigriesmer_sum == 56);
  CHECK(b.antigriesmer_defect == 0);
  CHECK(b.prop21_holds);
  REQUIRE(b.ek_bound);
  CHECK(*b.ek_bound == erdos_kleitman(56, 30));

  BoundsReport t = bounds_report(3, 13, 3, 9, 9);
  CHECK_FALSE(t.ek_bound);
  CHECK(t.griesmer_defect == 0);
}

TEST_CASE("best-known table") {
  const BestKnownTable& t = BestKnownTable::bundled();
  CHECK(t.size() >= 80);
  CHECK(t.lookup(2, 56, 6) == 28u);
  CHECK(t.lookup(2, 70, 7) == 33u);
  CHECK(t.lookup(2, 19, 5) == 8u);
  CHECK_FALSE(t.lookup(2, 1000, 3));

  Optimality o = classify_optimality(56, 6, 2, 26);
  CHECK(o.cls == OptimalityClass::kDistanceToBest);
  CHECK(o.distance_to_best == 2);
  CHECK(classify_optimality(19, 5, 2, 8).cls == OptimalityClass::kOptimal);
  CHECK(classify_optimality(70, 7, 2, 32).cls == OptimalityClass::kAlmostOptimal);
  CHECK(classify_optimality(1000, 3, 2, 8).cls == OptimalityClass::kUnknown);

  BestKnownTable custom = BestKnownTable::parse("# comment\n2 7 3 4 paper-cited\n3\t13\t3\t9\tx\n\n");
  CHECK(custom.size() == 2);
  CHECK(custom.lookup(3, 13, 3) == 9u);
  CHECK_THROWS_AS(BestKnownTable::parse("2 7 three 4 x\n"), ParseError);
}
