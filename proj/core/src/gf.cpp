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


#include "anticode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "anticode/error.hpp"

namespace anticode {
namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0 mod p.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t exp = p - 2;
  while (exp != 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the nonzero polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> coefficients) {
  Poly f(coefficients.begin(), coefficients.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Every monic divisor candidate of degree 1..degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec field_make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e == 0) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw InvalidArgument("field size " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds the 2^16 cap");
    }
  }
  FieldSpec spec;
  spec.p = p;
  spec.e = e;
  spec.q = static_cast<std::uint32_t>(q);
  if (e == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  // Lexicographic order with the constant term most significant: the
  // constant term is the leading base-p digit of the scan index.
  Poly candidate(e + 1);
  candidate[e] = 1;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      candidate[e - 1 - i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (candidate[0] == 0) continue;  // divisible by x
    if (is_irreducible_mod_p(p, candidate)) {
      spec.modulus = candidate;
      return spec;
    }
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable
}

std::string describe(const FieldSpec& spec) {
  std::ostringstream os;
  os << "GF(" << spec.q << ")";
  if (spec.e > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = spec.modulus.size(); i-- > 0;) {
      const auto c = spec.modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw InvalidArgument("field characteristic is not prime");
  if (spec_.e == 0) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  pow_p_.assign(spec_.e + 1, 1);
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    q *= spec_.p;
    if (q > kMaxFieldSize) throw InvalidArgument("field size exceeds the 2^16 cap");
    pow_p_[i + 1] = static_cast<std::uint32_t>(q);
  }
  if (spec_.q != q) throw InvalidArgument("field spec has q != p^e");
  if (spec_.modulus.size() != spec_.e + 1 || spec_.modulus.back() != 1) {
    throw InvalidArgument("modulus must be monic of degree e");
  }
  for (auto c : spec_.modulus) {
    if (c >= spec_.p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (spec_.e == 1) {
    if (spec_.modulus != std::vector<std::uint32_t>{0, 1}) {
      throw InvalidArgument("prime field modulus must be the placeholder x");
    }
  } else if (!is_irreducible_mod_p(spec_.p, spec_.modulus)) {
    throw InvalidArgument("modulus is reducible over GF(" + std::to_string(spec_.p) + ")");
  }

  const std::uint32_t qq = spec_.q;
  neg_.resize(qq);
  for (std::uint32_t a = 0; a < qq; ++a) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < spec_.e; ++i) {
      const std::uint32_t d = (a / pow_p_[i]) % spec_.p;
      r += ((spec_.p - d) % spec_.p) * pow_p_[i];
    }
    neg_[a] = static_cast<Element>(r);
  }
  if (spec_.p != 2 && qq <= 256) {
    add_table_.resize(static_cast<std::size_t>(qq) * qq);
    for (std::uint32_t a = 0; a < qq; ++a) {
      for (std::uint32_t b = 0; b < qq; ++b) {
        add_table_[a * qq + b] = add_digits(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }

  // Multiplicative group generator: smallest code of order q - 1.
  const std::uint64_t order = qq - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [this](Element a, std::uint64_t n) {
    Element result = 1;
    Element base = a;
    while (n != 0) {
      if (n & 1u) result = slow_mul(result, base);
      base = slow_mul(base, base);
      n >>= 1;
    }
    return result;
  };
  Element generator = 1;
  if (order > 1) {
    for (std::uint32_t g = 2; g < qq; ++g) {
      bool ok = true;
      for (auto f : factors) {
        if (slow_pow(static_cast<Element>(g), order / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator = static_cast<Element>(g);
        break;
      }
    }
  }
  exp_.resize(order);
  log_.assign(qq, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator);
  }

  trace_.resize(qq);
  for (std::uint32_t a = 0; a < qq; ++a) {
    Element t = 0;
    Element y = static_cast<Element>(a);
    for (std::uint32_t i = 0; i < spec_.e; ++i) {
      t = add(t, y);
      y = pow(y, spec_.p);
    }
    trace_[a] = t;
  }
}

FieldPtr GaloisField::of_order(std::uint32_t q) {
  if (q >= 2) {
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r == 1) return get(p, e);
  }
  throw InvalidArgument("no field of order " + std::to_string(q));
}

FieldPtr GaloisField::get(std::uint32_t p, std::uint32_t e) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const GaloisField>(field_make(p, e));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(p, e), field).first->second;
}

FieldPtr GaloisField::from_spec(const FieldSpec& spec) {
  if (is_prime(spec.p) && spec.e >= 1) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec.e && q <= kMaxFieldSize; ++i) q *= spec.p;
    if (q <= kMaxFieldSize) {
      auto canonical = get(spec.p, spec.e);
      if (canonical->spec() == spec) return canonical;
    }
  }
  return std::make_shared<const GaloisField>(spec);
}

Element GaloisField::div(Element a, Element b) const {
  if (b == 0) throw InvalidArgument("division by zero in " + describe(spec_));
  return mul(a, inv(b));
}

Element GaloisField::inv(Element a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
  const std::uint32_t order = spec_.q - 1;
  return exp_[(order - log_[a]) % order];
}

Element GaloisField::pow(Element a, std::uint64_t exponent) const noexcept {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = spec_.q - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (exponent % order)) % order];
}

std::uint32_t GaloisField::digit(Element a, std::uint32_t i) const noexcept {
  return (a / pow_p_[i]) % spec_.p;
}

Element GaloisField::add_digits(Element a, Element b) const noexcept {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    const std::uint32_t d = ((a / pow_p_[i]) % spec_.p + (b / pow_p_[i]) % spec_.p) % spec_.p;
    r += d * pow_p_[i];
  }
  return static_cast<Element>(r);
}

// Schoolbook product reduced modulo the field modulus; used to build tables.
Element GaloisField::slow_mul(Element a, Element b) const {
  const std::uint32_t p = spec_.p;
  const std::uint32_t e = spec_.e;
  Poly pa(e), pb(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    pa[i] = (a / pow_p_[i]) % p;
    pb[i] = (b / pow_p_[i]) % p;
  }
  Poly prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
  }
  Poly r = e == 1 ? prod : poly_mod(prod, spec_.modulus, p);
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < e && i < r.size(); ++i) code += (r[i] % p) * pow_p_[i];
  return static_cast<Element>(code);
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr big, FieldPtr small)
    : big_(std::move(big)), small_(std::move(small)) {
  if (!big_ || !small_) throw InvalidArgument("null field");
  if (big_->p() != small_->p()) throw InvalidArgument("fields have different characteristic");
  if (small_->e() == 0 || big_->e() % small_->e() != 0) {
    throw InvalidArgument("subfield degree " + std::to_string(small_->e()) +
                          " does not divide " + std::to_string(big_->e()));
  }
  degree_ = big_->e() / small_->e();

  // Smallest big-field root of the small field's modulus.
  const auto& modulus = small_->spec().modulus;
  Element root = 0;
  bool found = false;
  if (small_->e() == 1) {
    root = 0;  // placeholder modulus x; the prime field embeds digit-wise
    found = true;
  } else {
    for (std::uint32_t r = 0; r < big_->q() && !found; ++r) {
      Element acc = 0;
      Element power = 1;
      for (auto c : modulus) {
        acc = big_->add(acc, big_->mul(static_cast<Element>(c), power));
        power = big_->mul(power, static_cast<Element>(r));
      }
      if (acc == 0) {
        root = static_cast<Element>(r);
        found = true;
      }
    }
  }
  if (!found) throw InvalidArgument("small field modulus has no root in the big field");

  embed_.resize(small_->q());
  restrict_.assign(big_->q(), -1);
  for (std::uint32_t a = 0; a < small_->q(); ++a) {
    Element image = 0;
    if (small_->e() == 1) {
      image = static_cast<Element>(a);  // prime-field constants share codes
    } else {
      Element power = 1;
      for (std::uint32_t i = 0; i < small_->e(); ++i) {
        const auto c = small_->digit(static_cast<Element>(a), i);
        image = big_->add(image, big_->mul(static_cast<Element>(c), power));
        power = big_->mul(power, root);
      }
    }
    embed_[a] = image;
    restrict_[image] = static_cast<std::int32_t>(a);
  }
}

bool SubfieldEmbedding::in_subfield(Element big_code) const noexcept {
  return big_code < restrict_.size() && restrict_[big_code] >= 0;
}

Element SubfieldEmbedding::restrict(Element big_code) const {
  if (!in_subfield(big_code)) {
    throw InvalidArgument("element " + std::to_string(big_code) + " is not in the subfield");
  }
  return static_cast<Element>(restrict_[big_code]);
}

Element SubfieldEmbedding::relative_trace(Element x) const {
  Element t = 0;
  Element y = x;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    t = big_->add(t, y);
    y = big_->pow(y, small_->q());
  }
  return restrict(t);
}

Element relative_trace(const GaloisField& big, Element x, std::uint32_t target_degree) {
  if (target_degree == 0 || big.e() % target_degree != 0) {
    throw InvalidArgument("target degree " + std::to_string(target_degree) +
                          " does not divide " + std::to_string(big.e()));
  }
  SubfieldEmbedding embedding(GaloisField::from_spec(big.spec()),
                              GaloisField::get(big.p(), target_degree));
  return embedding.relative_trace(x);
}

}  // namespace anticode
