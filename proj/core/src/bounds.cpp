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

#include "anticode/bounds.hpp"

#include <sstream>

#include "anticode/error.hpp"

namespace anticode {

namespace detail {
extern const char* const kBestKnownTsv;
}

BigInt griesmer_sum(std::uint64_t q, std::uint64_t k, std::uint64_t d) {
  BigInt sum = 0;
  BigInt qi = 1;
  const BigInt dd = d;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += (dd + qi - 1) / qi;
    qi *= q;
  }
  return sum;
}

GriesmerResult griesmer(std::uint64_t q, std::uint64_t k, std::uint64_t d, std::uint64_t n) {
  GriesmerResult r;
  r.sum = griesmer_sum(q, k, d);
  r.defect = BigInt(n) - r.sum;
  return r;
}

AntiGriesmerResult antigriesmer(std::uint64_t q, std::uint64_t k, std::uint64_t delta,
                                std::uint64_t n) {
  AntiGriesmerResult r;
  BigInt qi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r.sum += BigInt(delta) / qi;
    qi *= q;
  }
  r.defect = r.sum - n;
  r.holds = r.sum >= n;
  BigInt top = 1;
  for (std::uint64_t i = 0; i + 1 < k; ++i) top *= q;
  r.hypothesis = BigInt(n) < top;
  return r;
}

BigInt erdos_kleitman(std::uint64_t n, std::uint64_t delta) {
  if (delta > n) throw InvalidArgument("diameter exceeds length");
  BigInt sum = 0;
  BigInt binom = 1;
  for (std::uint64_t i = 0; i <= delta / 2; ++i) {
    sum += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return sum;
}

bool code_anticode_check(const BigInt& code_size, const BigInt& anticode_size, std::uint64_t q,
                         std::uint64_t n) {
  BigInt space = 1;
  for (std::uint64_t i = 0; i < n; ++i) space *= q;
  return code_size * anticode_size <= space;
}

BigInt plotkin_anticode_floor(std::uint64_t q, std::uint64_t n) {
  const BigInt num = BigInt(q - 1) * n;
  return (num + q - 1) / q;
}

BoundsReport bounds_report(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t d,
                           std::uint64_t delta) {
  BoundsReport r;
  const auto g = griesmer(q, k, d, n);
  r.griesmer_sum = g.sum;
  r.griesmer_defect = g.defect;
  const auto a = antigriesmer(q, k, delta, n);
  r.antigriesmer_sum = a.sum;
  r.antigriesmer_defect = a.defect;
  r.antigriesmer_holds = a.holds;
  r.antigriesmer_hypothesis = a.hypothesis;
  r.plotkin_anticode_floor = plotkin_anticode_floor(q, n);
  if (q == 2) r.ek_bound = erdos_kleitman(n, delta);
  r.prop21_holds = delta >= k;
  return r;
}

BestKnownTable BestKnownTable::parse(std::string_view text) {
  BestKnownTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::uint64_t q, n, k, d;
    if (!(fields >> q)) continue;
    std::string source;
    if (!(fields >> n >> k >> d >> source)) {
      throw ParseError("best-known table line " + std::to_string(lineno) +
                       ": expected q n k d_best source");
    }
    auto [it, fresh] = t.entries_.emplace(std::make_tuple(q, n, k), d);
    if (!fresh && it->second != d) {
      throw ParseError("best-known table line " + std::to_string(lineno) +
                       ": conflicting entry for (" + std::to_string(q) + "," + std::to_string(n) +
                       "," + std::to_string(k) + ")");
    }
  }
  return t;
}

const BestKnownTable& BestKnownTable::bundled() {
  static const BestKnownTable table = parse(detail::kBestKnownTsv);
  return table;
}

std::optional<std::uint64_t> BestKnownTable::lookup(std::uint64_t q, std::uint64_t n,
                                                    std::uint64_t k) const {
  auto it = entries_.find(std::make_tuple(q, n, k));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Optimality classify_optimality(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t d,
                               const BestKnownTable& table) {
  Optimality o;
  o.d_best = table.lookup(q, n, k);
  if (!o.d_best) return o;
  const auto gap = static_cast<std::int64_t>(*o.d_best) - static_cast<std::int64_t>(d);
  o.distance_to_best = gap;
  if (gap == 0) {
    o.cls = OptimalityClass::kOptimal;
  } else if (gap == 1) {
    o.cls = OptimalityClass::kAlmostOptimal;
  } else {
    o.cls = OptimalityClass::kDistanceToBest;
  }
  return o;
}

std::string to_string(OptimalityClass cls) {
  switch (cls) {
    case OptimalityClass::kOptimal: return "optimal";
    case OptimalityClass::kAlmostOptimal: return "almost_optimal";
    case OptimalityClass::kDistanceToBest: return "distance_to_best";
    case OptimalityClass::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace anticode
