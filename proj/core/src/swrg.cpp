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

#include "anticode/swrg.hpp"

#include <algorithm>
#include <bit>

#include "anticode/bounds.hpp"
#include "anticode/error.hpp"

namespace anticode {

Graph::Graph(std::size_t vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : v_(vertices), adj_(vertices * vertices, 0), nbrs_(vertices) {
  for (auto [a, b] : edges) {
    if (a >= v_ || b >= v_) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loops are not allowed");
    if (adj_[a * v_ + b]) continue;
    adj_[a * v_ + b] = adj_[b * v_ + a] = 1;
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
  }
  for (auto& n : nbrs_) std::sort(n.begin(), n.end());
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
  if (v_ == 0) return std::nullopt;
  const std::size_t d = nbrs_[0].size();
  for (const auto& n : nbrs_) {
    if (n.size() != d) return std::nullopt;
  }
  return d;
}

CosetGraph coset_graph(const LinearCode& code, const Caps& caps) {
  if (code.q() != 2) throw InvalidArgument("coset graphs need a binary code");
  if (!is_projective(code)) throw InvalidArgument("coset graphs need a projective code");
  if (code.k() > caps.swrg_max_k || code.k() > 30) {
    throw CapExceeded("2^" + std::to_string(code.k()) + " vertices exceed the cap 2^" +
                      std::to_string(caps.swrg_max_k));
  }
  CosetGraph g;
  g.k = code.k();
  g.degree = code.n();
  g.source = code.label();
  for (std::size_t c = 0; c < code.n(); ++c) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < code.k(); ++i) v = (v << 1) | code.generator().at(i, c);
    g.connection.push_back(v);
  }
  const std::uint32_t vertices = 1u << g.k;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(std::size_t{vertices} * g.degree / 2);
  for (std::uint32_t u = 0; u < vertices; ++u) {
    for (std::uint32_t c : g.connection) {
      if (u < (u ^ c)) edges.emplace_back(u, u ^ c);
    }
  }
  g.graph = Graph(vertices, edges);
  return g;
}

Spectrum spectrum_from_wd(const WeightDistribution& wd) {
  if (wd.q != 2) throw InvalidArgument("spectrum_from_wd needs a binary distribution");
  Spectrum s;
  for (const auto& [w, a] : wd.counts) {
    s[static_cast<std::int64_t>(wd.n) - 2 * static_cast<std::int64_t>(w)] += a;
  }
  return s;
}

bool verify_spectrum(const CosetGraph& g, const Spectrum& expected) {
  const std::uint32_t vertices = static_cast<std::uint32_t>(g.vertex_count());
  auto chi = [](std::uint32_t x, std::uint32_t u) {
    return (std::popcount(x & u) & 1) ? -1 : 1;
  };
  Spectrum found;
  if (vertices <= 256) {
    // Explicit residual A chi_x - lambda chi_x at every vertex.
    for (std::uint32_t x = 0; x < vertices; ++x) {
      std::int64_t lambda = 0;
      for (std::uint32_t c : g.connection) lambda += chi(x, c);
      for (std::uint32_t u = 0; u < vertices; ++u) {
        std::int64_t av = 0;
        for (std::uint32_t nb : g.graph.neighbors(u)) av += chi(x, nb);
        if (av != lambda * chi(x, u)) return false;
      }
      ++found[lambda];
    }
    return found == expected;
  }
  // Larger graphs: character sums of the connection set by a Walsh-Hadamard
  // transform of its indicator.
  std::vector<std::int64_t> h(vertices, 0);
  for (std::uint32_t c : g.connection) ++h[c];
  for (std::uint32_t len = 1; len < vertices; len <<= 1) {
    for (std::uint32_t i = 0; i < vertices; i += len << 1) {
      for (std::uint32_t j = i; j < i + len; ++j) {
        const std::int64_t a = h[j], b = h[j + len];
        h[j] = a + b;
        h[j + len] = a - b;
      }
    }
  }
  for (std::int64_t lambda : h) ++found[lambda];
  return found == expected;
}

namespace {

void check_walk_caps(std::size_t vertices, unsigned l) {
  if (l < 3 || l % 2 == 0) throw InvalidArgument("walk length must be odd and at least 3");
  const std::size_t cap = l == 3 ? (std::size_t{1} << 10) : (std::size_t{1} << 8);
  if (vertices > cap) {
    throw CapExceeded(std::to_string(vertices) + " vertices exceed the walk-count cap " +
                      std::to_string(cap) + " for l=" + std::to_string(l));
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("walk count overflows 64 bits");
  return r;
}

// Tracks the first count seen in each class and reports the first mismatch.
class ClassTracker {
 public:
  bool add(int cls, std::uint32_t a, std::uint32_t b, std::uint64_t count) {
    auto& slot = seen_[cls];
    if (!slot) {
      slot = Seen{{a, b}, count};
      return true;
    }
    if (slot->count == count) return true;
    static const char* const names[] = {"adjacent", "non-adjacent", "diagonal"};
    witness_ = WalkWitness{names[cls], slot->pair, {a, b}, slot->count, count};
    return false;
  }

  WalkResult result() const {
    WalkResult r;
    if (witness_) {
      r.witness = witness_;
      return r;
    }
    WalkCounts c;
    c.lambda = seen_[0] ? seen_[0]->count : 0;
    c.mu = seen_[1] ? seen_[1]->count : 0;
    c.nu = seen_[2] ? seen_[2]->count : 0;
    r.counts = c;
    return r;
  }

 private:
  struct Seen {
    std::pair<std::uint32_t, std::uint32_t> pair;
    std::uint64_t count;
  };
  std::optional<Seen> seen_[3];
  std::optional<WalkWitness> witness_;
};

}  // namespace

WalkResult walk_counts(const Graph& g, unsigned l) {
  const std::size_t v = g.vertex_count();
  check_walk_caps(v, l);
  if (!g.regular_degree()) throw InvalidArgument("walk counts need a regular graph");
  std::vector<std::uint64_t> w(v * v, 0), next(v * v, 0);
  for (std::size_t a = 0; a < v; ++a) {
    for (auto b : g.neighbors(a)) w[a * v + b] = 1;
  }
  for (unsigned step = 1; step < l; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t a = 0; a < v; ++a) {
      std::uint64_t* out = &next[a * v];
      for (auto m : g.neighbors(a)) {
        const std::uint64_t* in = &w[m * v];
        for (std::size_t b = 0; b < v; ++b) out[b] = checked_add(out[b], in[b]);
      }
    }
    w.swap(next);
  }
  ClassTracker t;
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = 0; b < v; ++b) {
      const int cls = a == b ? 2 : (g.adjacent(a, b) ? 0 : 1);
      if (!t.add(cls, a, b, w[a * v + b])) return t.result();
    }
  }
  return t.result();
}

WalkResult walk_counts(const CosetGraph& g, unsigned l) {
  const std::size_t v = g.vertex_count();
  check_walk_caps(v, l);
  std::vector<std::uint64_t> f(v, 0), next(v, 0);
  f[0] = 1;
  for (unsigned step = 0; step < l; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t u = 0; u < v; ++u) {
      if (f[u] == 0) continue;
      for (std::uint32_t c : g.connection) next[u ^ c] = checked_add(next[u ^ c], f[u]);
    }
    f.swap(next);
  }
  std::vector<std::uint8_t> in_conn(v, 0);
  for (std::uint32_t c : g.connection) in_conn[c] = 1;
  ClassTracker t;
  for (std::uint32_t u = 0; u < v; ++u) {
    const int cls = u == 0 ? 2 : (in_conn[u] ? 0 : 1);
    if (!t.add(cls, 0, u, f[u])) return t.result();
  }
  return t.result();
}

std::string to_string(SwrgVerdict v) {
  switch (v) {
    case SwrgVerdict::kIsSwrg: return "is_l_swrg";
    case SwrgVerdict::kNotSwrg: return "not_l_swrg";
    case SwrgVerdict::kConditionsUnmet: return "conditions_unmet";
  }
  return "not_l_swrg";
}

SwrgCertificate verify_swrg(const LinearCode& code, unsigned l, const Caps& caps) {
  if (code.q() != 2) throw InvalidArgument("SWRG verification needs a binary code");
  if (l < 3 || l % 2 == 0) throw InvalidArgument("walk length must be odd and at least 3");
  const WeightDistribution wd = weight_distribution(code, Enumeration::kScalarClasses, caps);
  SwrgCertificate cert;
  cert.l = l;
  cert.n = code.n();
  cert.k = code.k();
  cert.weights = wd.nonzero_weights();
  if (cert.weights.size() != 3) {
    throw InvalidArgument("SWRG verification needs a three-weight code, got " +
                          std::to_string(cert.weights.size()) + " nonzero weights");
  }
  const CosetGraph g = coset_graph(code, caps);
  check_walk_caps(g.vertex_count(), l);

  const std::size_t n = cert.n;
  const std::size_t w1 = cert.weights[0], w2 = cert.weights[1], w3 = cert.weights[2];
  cert.sum_condition = 2 * (w1 + w2 + w3) == 3 * n;
  cert.middle_condition = 2 * w2 == n;
  cert.spectrum = spectrum_from_wd(wd);
  cert.spectrum_verified = verify_spectrum(g, cert.spectrum);
  cert.walks = walk_counts(g, l);

  if (l == 3 && cert.sum_condition && cert.middle_condition) {
    const BigInt num = BigInt(4) * n * w1 * (n - w1);
    const BigInt v = BigInt(1) << cert.k;
    if (num % v == 0) {
      WalkCounts a;
      a.mu = a.nu = static_cast<std::uint64_t>(num / v);
      const std::int64_t e = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(w1);
      a.lambda = a.mu + static_cast<std::uint64_t>(e * e);
      cert.analytic = a;
      cert.analytic_matches = cert.walks.counts && cert.walks.counts->lambda == a.lambda &&
                              cert.walks.counts->mu == a.mu && cert.walks.counts->nu == a.nu;
    } else {
      cert.analytic_matches = false;
    }
  }

  if (cert.walks.counts) {
    const BigInt lam = cert.walks.counts->lambda, mu = cert.walks.counts->mu,
                 nu = cert.walks.counts->nu;
    auto poly = [&](const BigInt& x) {
      BigInt p = 1;
      for (unsigned i = 0; i < l; ++i) p *= x;
      return p + (mu - lam) * x + (mu - nu);
    };
    bool roots = true;
    for (std::size_t w : cert.weights) {
      roots = roots && poly(BigInt(static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(w))) == 0;
    }
    cert.root_equation = roots;
    cert.vertex_identity = poly(BigInt(n)) == mu * (BigInt(1) << cert.k);
  }

  const bool conditions = l == 3 ? cert.sum_condition : cert.sum_condition && cert.middle_condition;
  const bool constant = cert.walks.counts.has_value();
  const bool analytic_ok = !cert.analytic_matches.has_value() || *cert.analytic_matches;
  if (constant && analytic_ok && cert.spectrum_verified) {
    cert.verdict = SwrgVerdict::kIsSwrg;
  } else if (!conditions) {
    cert.verdict = SwrgVerdict::kConditionsUnmet;
  } else {
    cert.verdict = SwrgVerdict::kNotSwrg;
  }
  return cert;
}

}  // namespace anticode
