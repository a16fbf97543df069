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

#include "anticode/code.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "anticode/error.hpp"

namespace anticode {

LinearCode::LinearCode(GfMatrix generator, std::string label)
    : generator_(std::move(generator)), label_(std::move(label)) {
  if (generator_.empty()) throw InvalidArgument("a code needs n >= 1 and k >= 1");
  const std::size_t r = mat_rank(generator_);
  if (r != generator_.rows()) throw RankDeficient(generator_.rows(), r);
}

LinearCode LinearCode::relabeled(std::string label) const {
  LinearCode c = *this;
  c.label_ = std::move(label);
  return c;
}

std::vector<Element> LinearCode::encode(std::span<const Element> message) const {
  if (message.size() != k()) throw InvalidArgument("message length differs from k");
  return vec_mat(message, generator_);
}

LinearCode code_from_generator(FieldPtr field, const std::vector<std::vector<Element>>& rows,
                               std::string label) {
  return LinearCode(GfMatrix::from_rows(std::move(field), rows), std::move(label));
}

// ---------------------------------------------------------------------------
// WeightDistribution

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t s = 0;
  for (const auto& [w, a] : counts) s += a;
  return s;
}

std::uint64_t WeightDistribution::count(std::size_t weight) const noexcept {
  auto it = counts.find(weight);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (const auto& [w, a] : counts) {
    if (w > 0 && a > 0) out.push_back(w);
  }
  return out;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, a] : counts) {
    if (w > 0 && a > 0) return w;
  }
  throw InvalidArgument("distribution has no nonzero weight");
}

std::size_t WeightDistribution::max_weight() const {
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->first > 0 && it->second > 0) return it->first;
  }
  throw InvalidArgument("distribution has no nonzero weight");
}

std::size_t WeightDistribution::weight_count() const { return nonzero_weights().size(); }

void WeightDistribution::validate() const {
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(expected, std::uint64_t{q}, &expected)) {
      throw InvalidArgument("q^k does not fit in 64 bits");
    }
  }
  std::uint64_t sum = 0;
  for (const auto& [w, a] : counts) {
    if (w > n) {
      throw InvalidArgument("weight " + std::to_string(w) + " exceeds length " + std::to_string(n));
    }
    if (a == 0) throw InvalidArgument("zero count stored for weight " + std::to_string(w));
    if (w > 0 && q > 2 && a % (q - 1) != 0) {
      throw InvalidArgument("count " + std::to_string(a) + " at weight " + std::to_string(w) +
                            " is not a multiple of q-1");
    }
    if (__builtin_add_overflow(sum, a, &sum)) throw InvalidArgument("counts overflow");
  }
  if (count(0) != 1) throw InvalidArgument("A_0 must be 1");
  if (sum != expected) throw InvalidArgument("counts do not sum to q^k");
}

std::string to_string(const WeightDistribution& wd) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [w, a] : wd.counts) {
    if (!first) out << ", ";
    first = false;
    out << w << ':' << a;
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void check_enumeration_cap(std::uint32_t q, std::size_t k, unsigned log2_cap, const char* what) {
  if (!power_within(q, k, log2_cap)) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(k) +
                      " messages exceed the cap 2^" + std::to_string(log2_cap));
  }
}

std::vector<std::uint64_t> binary_gray_histogram(const GfMatrix& g) {
  const std::size_t n = g.cols(), k = g.rows();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(k * words, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      if (g.at(i, c)) rows[i * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<std::uint64_t> cw(words, 0);
  hist[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t* r = &rows[std::countr_zero(i) * words];
    std::size_t w = 0;
    for (std::size_t j = 0; j < words; ++j) {
      cw[j] ^= r[j];
      w += std::popcount(cw[j]);
    }
    ++hist[w];
  }
  return hist;
}

// Depth-first over messages; the last coordinate is resolved for all q values
// at once by counting, per column, which scalar kills it.
class DfsHistogram {
 public:
  DfsHistogram(const GfMatrix& g, bool classes)
      : f_(*g.field()), g_(g), n_(g.cols()), k_(g.rows()), q_(f_.q()), classes_(classes),
        partial_(k_, std::vector<Element>(n_, 0)), hist_(n_ + 1, 0), zeros_(q_, 0) {}

  std::vector<std::uint64_t> run() {
    descend(0, true);
    if (classes_) {
      for (std::size_t w = 1; w <= n_; ++w) hist_[w] *= q_ - 1;
      hist_[0] = 1;
    }
    return std::move(hist_);
  }

 private:
  void descend(std::size_t level, bool leading) {
    if (level + 1 == k_) {
      leaf(leading);
      return;
    }
    const auto row = g_.row(level);
    const auto& base = partial_[level];
    auto& next = partial_[level + 1];
    const std::uint32_t top = classes_ && leading ? 2 : q_;
    for (std::uint32_t a = 0; a < top; ++a) {
      const auto s = static_cast<Element>(a);
      for (std::size_t c = 0; c < n_; ++c) next[c] = f_.add(base[c], f_.mul(s, row[c]));
      descend(level + 1, leading && a == 0);
    }
  }

  void leaf(bool leading) {
    const auto row = g_.row(k_ - 1);
    const auto& base = partial_[k_ - 1];
    if (classes_ && leading) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < n_; ++c) w += f_.add(base[c], row[c]) != 0;
      ++hist_[w];
      return;
    }
    std::fill(zeros_.begin(), zeros_.end(), 0);
    std::size_t always = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (row[c] == 0) {
        always += base[c] == 0;
      } else {
        ++zeros_[f_.div(f_.neg(base[c]), row[c])];
      }
    }
    for (std::uint32_t a = 0; a < q_; ++a) ++hist_[n_ - always - zeros_[a]];
  }

  const GaloisField& f_;
  const GfMatrix& g_;
  std::size_t n_, k_;
  std::uint32_t q_;
  bool classes_;
  std::vector<std::vector<Element>> partial_;
  std::vector<std::uint64_t> hist_;
  std::vector<std::size_t> zeros_;
};

WeightDistribution from_histogram(const LinearCode& code, const std::vector<std::uint64_t>& hist) {
  WeightDistribution wd;
  wd.q = code.q();
  wd.n = code.n();
  wd.k = code.k();
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] != 0) wd.counts.emplace(w, hist[w]);
  }
  return wd;
}

// Calls visit(message, word) for one message per scalar class (first nonzero
// coordinate 1), zero message excluded.
void for_each_class_word(
    const LinearCode& code,
    const std::function<void(std::span<const Element>, std::span<const Element>)>& visit) {
  const GaloisField& f = *code.field();
  const GfMatrix& g = code.generator();
  const std::size_t n = code.n(), k = code.k();
  std::vector<std::vector<Element>> partial(k + 1, std::vector<Element>(n, 0));
  std::vector<Element> msg(k, 0);
  std::function<void(std::size_t, bool)> go = [&](std::size_t level, bool leading) {
    if (level == k) {
      if (!leading) visit(msg, partial[k]);
      return;
    }
    const auto row = g.row(level);
    const std::uint32_t top = leading ? 2 : f.q();
    for (std::uint32_t a = 0; a < top; ++a) {
      msg[level] = static_cast<Element>(a);
      for (std::size_t c = 0; c < n; ++c) {
        partial[level + 1][c] = f.add(partial[level][c], f.mul(msg[level], row[c]));
      }
      go(level + 1, leading && a == 0);
    }
    msg[level] = 0;
  };
  go(0, true);
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& code, Enumeration strategy,
                                       const Caps& caps) {
  check_enumeration_cap(code.q(), code.k(), caps.enumeration_log2, "weight enumeration");
  if (code.q() == 2 && strategy == Enumeration::kFullMessages) {
    return from_histogram(code, binary_gray_histogram(code.generator()));
  }
  DfsHistogram dfs(code.generator(), strategy == Enumeration::kScalarClasses);
  return from_histogram(code, dfs.run());
}

std::size_t min_distance(const LinearCode& code, const Caps& caps) {
  return weight_distribution(code, Enumeration::kScalarClasses, caps).min_nonzero_weight();
}

std::size_t max_weight(const LinearCode& code, const Caps& caps) {
  return weight_distribution(code, Enumeration::kScalarClasses, caps).max_weight();
}

std::size_t hamming_weight(std::span<const Element> word) noexcept {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(),
                                                [](Element x) { return x != 0; }));
}

LinearCode dual_code(const LinearCode& code) {
  if (code.k() == code.n()) throw InvalidArgument("the dual of a [n,n] code is the zero code");
  std::string label = code.label().empty() ? std::string() : code.label() + "-dual";
  return LinearCode(mat_kernel(code.generator()), std::move(label));
}

DualDistance dual_distance(const LinearCode& code, const Caps& caps, bool allow_column_fallback) {
  DualDistance out;
  out.at_least_three = is_projective(code);
  if (power_within(code.q(), code.n() - code.k(), caps.enumeration_log2)) {
    if (code.n() > code.k()) out.exact = min_distance(dual_code(code), caps);
    return out;
  }
  if (!allow_column_fallback) {
    check_enumeration_cap(code.q(), code.n() - code.k(), caps.enumeration_log2,
                          "dual enumeration");
  }
  return out;
}

bool is_projective(const LinearCode& code) {
  const GaloisField& f = *code.field();
  std::set<std::vector<Element>> seen;
  for (std::size_t c = 0; c < code.n(); ++c) {
    std::vector<Element> col = code.generator().column(c);
    auto lead = std::find_if(col.begin(), col.end(), [](Element x) { return x != 0; });
    if (lead == col.end()) return false;
    const Element s = f.inv(*lead);
    for (auto& x : col) x = f.mul(x, s);
    if (!seen.insert(std::move(col)).second) return false;
  }
  return true;
}

MinimalityVerdict is_minimal_exact(const LinearCode& code, const Caps& caps) {
  check_enumeration_cap(code.q(), code.k(), caps.minimality_log2, "minimality check");
  const std::size_t n = code.n(), k = code.k();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> supports;
  std::vector<Element> messages;
  std::vector<std::size_t> weights;
  for_each_class_word(code, [&](std::span<const Element> msg, std::span<const Element> word) {
    const std::size_t at = supports.size();
    supports.resize(at + words, 0);
    std::size_t w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (word[c] != 0) {
        supports[at + c / 64] |= std::uint64_t{1} << (c % 64);
        ++w;
      }
    }
    weights.push_back(w);
    messages.insert(messages.end(), msg.begin(), msg.end());
  });
  const std::size_t count = weights.size();
  auto supp = [&](std::size_t i) { return &supports[i * words]; };

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (weights[a] != weights[b]) return weights[a] < weights[b];
    return std::lexicographical_compare(supp(a), supp(a) + words, supp(b), supp(b) + words);
  });

  auto witness = [&](std::size_t small, std::size_t big) {
    MinimalityVerdict v;
    v.minimal = false;
    auto word = [&](std::size_t i) {
      return code.encode(std::span<const Element>(&messages[i * k], k));
    };
    v.witness = std::make_pair(word(small), word(big));
    return v;
  };

  // Distinct scalar classes sharing a support.
  for (std::size_t i = 1; i < count; ++i) {
    const std::size_t a = order[i - 1], b = order[i];
    if (std::equal(supp(a), supp(a) + words, supp(b))) return witness(a, b);
  }
  // Strict containment needs strictly larger weight.
  std::size_t start = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = order[i];
    while (start < count && weights[order[start]] <= weights[a]) ++start;
    const std::uint64_t* sa = supp(a);
    for (std::size_t j = start; j < count; ++j) {
      const std::uint64_t* sb = supp(order[j]);
      bool inside = true;
      for (std::size_t t = 0; t < words && inside; ++t) inside = (sa[t] & ~sb[t]) == 0;
      if (inside) return witness(a, order[j]);
    }
  }
  return MinimalityVerdict{};
}

bool ab_criterion(std::uint32_t q, std::size_t d, std::size_t delta) noexcept {
  return std::uint64_t{q} * d > std::uint64_t{q - 1} * delta;
}

bool ab_criterion(const WeightDistribution& wd) noexcept {
  if (wd.nonzero_weights().empty()) return false;
  return ab_criterion(wd.q, wd.min_nonzero_weight(), wd.max_weight());
}

}  // namespace anticode
