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

#ifndef ANTICODE_SWRG_HPP_
#define ANTICODE_SWRG_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anticode/caps.hpp"
#include "anticode/code.hpp"

namespace anticode {

// Simple undirected graph with a dense adjacency matrix.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on loops or out-of-range endpoints; repeated edges
  // collapse.
  Graph(std::size_t vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t vertex_count() const noexcept { return v_; }
  bool adjacent(std::size_t a, std::size_t b) const noexcept { return adj_[a * v_ + b] != 0; }
  const std::vector<std::uint32_t>& neighbors(std::size_t a) const noexcept { return nbrs_[a]; }
  std::size_t degree(std::size_t a) const noexcept { return nbrs_[a].size(); }
  // Common degree, or nullopt when the graph is not regular.
  std::optional<std::size_t> regular_degree() const noexcept;

 private:
  std::size_t v_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::uint32_t>> nbrs_;
};

// Cayley graph on GF(2)^k whose connection set is the generator columns; it is
// the coset graph of the dual code when the code is projective.
struct CosetGraph {
  std::size_t k = 0;
  std::size_t degree = 0;
  std::vector<std::uint32_t> connection;  // columns as k-bit integers, row 0 most significant
  std::string source;
  Graph graph;

  std::size_t vertex_count() const noexcept { return std::size_t{1} << k; }
};

// Throws InvalidArgument for non-binary or non-projective codes, CapExceeded
// when k > caps.swrg_max_k.
CosetGraph coset_graph(const LinearCode& code, const Caps& caps = Caps::defaults());

// eigenvalue -> multiplicity, largest eigenvalue first
using Spectrum = std::map<std::int64_t, std::uint64_t, std::greater<>>;

// Eigenvalue n - 2w with multiplicity A_w. Binary only.
Spectrum spectrum_from_wd(const WeightDistribution& wd);

// Checks A chi_x = (n - 2 wt(xG)) chi_x for every character chi_x(u) =
// (-1)^(x.u) and compares the resulting multiset with `expected`.
bool verify_spectrum(const CosetGraph& g, const Spectrum& expected);

struct WalkCounts {
  std::uint64_t lambda = 0;  // adjacent pairs
  std::uint64_t mu = 0;      // distinct non-adjacent pairs
  std::uint64_t nu = 0;      // closed walks
};

struct WalkWitness {
  std::string cls;  // "adjacent", "non-adjacent" or "diagonal"
  std::pair<std::uint32_t, std::uint32_t> first, second;
  std::uint64_t first_count = 0, second_count = 0;
};

struct WalkResult {
  std::optional<WalkCounts> counts;     // set when constant on all three classes
  std::optional<WalkWitness> witness;   // set otherwise
};

// Exact entries of A^l on every vertex pair. Requires a regular graph, odd
// l >= 3, and at most 2^10 vertices for l = 3, 2^8 otherwise.
WalkResult walk_counts(const Graph& g, unsigned l);

// Row 0 of A^l via repeated convolution with the connection set; vertex
// transitivity extends it to every row. Same caps as the dense version.
WalkResult walk_counts(const CosetGraph& g, unsigned l);

enum class SwrgVerdict { kIsSwrg, kNotSwrg, kConditionsUnmet };
std::string to_string(SwrgVerdict v);

struct SwrgCertificate {
  unsigned l = 3;
  std::size_t n = 0, k = 0;
  std::vector<std::size_t> weights;  // w1 < w2 < w3
  Spectrum spectrum;
  bool spectrum_verified = false;
  bool sum_condition = false;     // w1 + w2 + w3 = 3n/2
  bool middle_condition = false;  // w2 = n/2
  WalkResult walks;
  // lambda_3, mu_3, nu_3 from the closed forms; only when l = 3, both
  // conditions hold and 4 n w1 (n - w1) is divisible by 2^k.
  std::optional<WalkCounts> analytic;
  std::optional<bool> analytic_matches;
  std::optional<bool> root_equation;     // nonzero-weight eigenvalues solve x^l + (mu-lambda)x + (mu-nu) = 0
  std::optional<bool> vertex_identity;   // n^l + (mu-lambda)n + (mu-nu) = mu * 2^k
  SwrgVerdict verdict = SwrgVerdict::kNotSwrg;
};

// Throws InvalidArgument unless the code is binary, projective and has exactly
// three nonzero weights; CapExceeded beyond the walk-count caps.
SwrgCertificate verify_swrg(const LinearCode& code, unsigned l, const Caps& caps = Caps::defaults());

}  // namespace anticode

#endif  // ANTICODE_SWRG_HPP_
