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

#include "anticode/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "anticode/bounds.hpp"
#include "anticode/constructions.hpp"
#include "anticode/error.hpp"
#include "json.hpp"

namespace anticode {

namespace detail {
extern const char* const kCatalogJson;
}

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::uint64_t param(const ConstructionSpec& s, const char* name) {
  auto it = s.params.find(name);
  if (it == s.params.end()) throw InvalidArgument(s.family + " needs parameter " + name);
  return it->second;
}

std::uint32_t small(const ConstructionSpec& s, const char* name) {
  std::uint64_t v = param(s, name);
  if (v > 1'000'000) throw InvalidArgument(s.family + ": " + name + " out of range");
  return static_cast<std::uint32_t>(v);
}

const ConstructionSpec& inner(const ConstructionSpec& s) {
  if (!s.inner) throw InvalidArgument(s.family + " needs a base construction");
  return *s.inner;
}

ConstructionSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw ParseError("construction without a family");
  }
  ConstructionSpec s;
  s.family = j["family"].get<std::string>();
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "family") continue;
    if (it.key() == "base" || it.key() == "outer") {
      s.inner = std::make_shared<ConstructionSpec>(spec_from_json(*it));
    } else if (it->is_number_unsigned()) {
      s.params[it.key()] = it->get<std::uint64_t>();
    } else {
      throw ParseError("construction parameter " + it.key() + " is not a non-negative integer");
    }
  }
  return s;
}

std::map<std::size_t, std::uint64_t> pairs(const json& a) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2) throw ParseError("distribution entries are [weight, count]");
    out[p[0].get<std::size_t>()] = p[1].get<std::uint64_t>();
  }
  return out;
}

CatalogEntry entry_from_json(const json& j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.tag = j.value("tag", "");
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "construct_and_enumerate") {
    e.mode = CatalogMode::kConstructAndEnumerate;
    e.construct = spec_from_json(j.at("construct"));
  } else if (mode == "transform_only") {
    e.mode = CatalogMode::kTransformOnly;
    const json& b = j.at("base");
    WeightDistribution wd;
    wd.q = b.at("q").get<std::uint32_t>();
    wd.n = b.at("n").get<std::size_t>();
    wd.k = b.at("k").get<std::size_t>();
    wd.counts = pairs(b.at("distribution"));
    wd.counts[0] = 1;
    e.base = std::move(wd);
    e.K = j.at("K").get<std::size_t>();
  } else {
    throw ParseError(e.id + ": unknown mode " + mode);
  }
  const json& x = j.at("expected");
  ExpectedParams& p = e.expected;
  p.q = x.at("q").get<std::uint32_t>();
  p.n = x.at("n").get<std::size_t>();
  p.k = x.at("k").get<std::size_t>();
  if (x.contains("d")) p.d = x["d"].get<std::size_t>();
  if (x.contains("delta")) p.delta = x["delta"].get<std::size_t>();
  if (x.contains("weights")) p.weights = x["weights"].get<std::vector<std::size_t>>();
  if (x.contains("distribution")) p.distribution = pairs(x["distribution"]);
  if (x.contains("griesmer_defect")) p.griesmer_defect = x["griesmer_defect"].get<std::int64_t>();
  if (x.contains("antigriesmer_defect")) p.antigriesmer_defect = x["antigriesmer_defect"].get<std::int64_t>();
  if (x.contains("optimality")) p.optimality = x["optimality"].get<std::string>();
  if (x.contains("minimal")) p.minimal = x["minimal"].get<bool>();
  if (j.contains("known_discrepancy")) e.known_discrepancy = j["known_discrepancy"].get<std::string>();
  return e;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string join(const std::map<std::size_t, std::uint64_t>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [w, c] : m) {
    s += (first ? "" : ",") + std::to_string(w) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

std::string optimality_label(const Optimality& o) {
  if (o.cls == OptimalityClass::kDistanceToBest) {
    return "distance_to_best:" + std::to_string(*o.distance_to_best);
  }
  return to_string(o.cls);
}

template <class T>
void compare(std::vector<std::string>& out, const char* what, const T& expected, const T& measured) {
  if (expected == measured) return;
  std::ostringstream os;
  os << what << ": expected " << expected << ", measured " << measured;
  out.push_back(os.str());
}

void compare_text(std::vector<std::string>& out, const char* what, const std::string& expected,
                  const std::string& measured) {
  if (expected != measured) out.push_back(std::string(what) + ": expected " + expected + ", measured " + measured);
}

void check_expected(const ExpectedParams& x, const WeightDistribution& wd, std::optional<bool> minimal,
                    std::vector<std::string>& out) {
  compare(out, "q", std::size_t{x.q}, std::size_t{wd.q});
  compare(out, "n", x.n, wd.n);
  compare(out, "k", x.k, wd.k);
  const std::size_t d = wd.min_nonzero_weight();
  const std::size_t delta = wd.max_weight();
  if (x.d) compare(out, "d", *x.d, d);
  if (x.delta) compare(out, "delta", *x.delta, delta);
  if (x.weights) {
    std::vector<std::size_t> want = *x.weights;
    std::sort(want.begin(), want.end());
    compare_text(out, "weights", join(want), join(wd.nonzero_weights()));
  }
  if (x.distribution) {
    auto got = wd.counts;
    got.erase(0);
    compare_text(out, "distribution", join(*x.distribution), join(got));
  }
  if (x.griesmer_defect || x.antigriesmer_defect) {
    BoundsReport b = bounds_report(wd.q, wd.n, wd.k, d, delta);
    if (x.griesmer_defect) compare_text(out, "griesmer_defect", std::to_string(*x.griesmer_defect), to_string(b.griesmer_defect));
    if (x.antigriesmer_defect) {
      compare_text(out, "antigriesmer_defect", std::to_string(*x.antigriesmer_defect),
                   to_string(b.antigriesmer_defect));
    }
  }
  if (x.optimality) {
    compare_text(out, "optimality", *x.optimality, optimality_label(classify_optimality(wd.n, wd.k, wd.q, d)));
  }
  if (x.minimal) {
    if (!minimal) {
      out.push_back("minimal: not decidable for this entry");
    } else if (*x.minimal != *minimal) {
      out.push_back(std::string("minimal: expected ") + (*x.minimal ? "true" : "false") + ", measured " +
                    (*minimal ? "true" : "false"));
    }
  }
}

}  // namespace

std::string ConstructionSpec::describe() const {
  std::string s = family + "(";
  bool first = true;
  if (inner) {
    s += inner->describe();
    first = false;
  }
  for (const auto& [k, v] : params) {
    s += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

LinearCode build(const ConstructionSpec& s, const Caps& caps) {
  const std::string& f = s.family;
  if (f == "simplex") return simplex(small(s, "q"), param(s, "k"), caps);
  if (f == "rs") return rs_code(small(s, "q"), param(s, "k"));
  if (f == "comp-rs") return complementary_rs(small(s, "q"), param(s, "k"), param(s, "h"), caps);
  if (f == "comp-mds") return complementary_mds_trivial(small(s, "q"), param(s, "k"), param(s, "h"), caps);
  if (f == "fixed-weight") return fixed_weight_anticode(param(s, "k"), param(s, "w"), caps);
  if (f == "two-subspace") return two_subspace_code(small(s, "q"));
  if (f == "ovoid") return ovoid_code(small(s, "q"), caps);
  if (f == "dual-bch") return dual_bch_code(small(s, "m"));
  if (f == "kasami") return kasami_code(small(s, "m"));
  if (f == "concat") return concatenate_with_simplex(build(inner(s), caps));
  if (f == "complement") return complement(build(inner(s), caps), param(s, "K"), caps);
  throw InvalidArgument("unknown construction family \"" + f + "\"");
}

CatalogManifest CatalogManifest::parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kCatalogFormat) {
    throw ParseError("catalog: format is not " + std::string(kCatalogFormat));
  }
  CatalogManifest m;
  try {
    for (const auto& e : j.at("entries")) m.entries.push_back(entry_from_json(e));
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog: ") + e.what());
  }
  return m;
}

const CatalogManifest& CatalogManifest::bundled() {
  static const CatalogManifest m = parse(detail::kCatalogJson);
  return m;
}

std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::kPass:
      return "pass";
    case EntryStatus::kFail:
      return "fail";
    case EntryStatus::kKnownDiscrepancy:
      return "known_discrepancy";
    case EntryStatus::kError:
      break;
  }
  return "error";
}

EntryResult verify_entry(const CatalogEntry& e, const Caps& caps) {
  EntryResult r;
  r.id = e.id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::optional<bool> minimal;
    if (e.mode == CatalogMode::kConstructAndEnumerate) {
      LinearCode code = build(*e.construct, caps);
      r.measured = weight_distribution(code, Enumeration::kScalarClasses, caps);
      if (e.expected.minimal) {
        if (ab_criterion(*r.measured)) {
          minimal = true;
        } else {
          minimal = is_minimal_exact(code, caps).minimal;
        }
      }
    } else {
      e.base->validate();
      r.measured = transform_wd(*e.base, e.K);
      if (e.expected.minimal && ab_criterion(*r.measured)) minimal = true;
    }
    check_expected(e.expected, *r.measured, minimal, r.mismatches);
    r.matches = r.mismatches.empty();
    if (e.known_discrepancy) {
      r.status = EntryStatus::kKnownDiscrepancy;
    } else {
      r.status = r.matches ? EntryStatus::kPass : EntryStatus::kFail;
    }
  } catch (const std::exception& ex) {
    r.status = EntryStatus::kError;
    r.error = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CatalogSummary verify_catalog(const CatalogManifest& manifest, const Caps& caps, unsigned threads) {
  CatalogSummary s;
  s.results.resize(manifest.entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, manifest.entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < manifest.entries.size(); i = next++) {
      s.results[i] = verify_entry(manifest.entries[i], caps);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& r : s.results) {
    switch (r.status) {
      case EntryStatus::kPass:
        ++s.passed;
        break;
      case EntryStatus::kFail:
        ++s.failed;
        break;
      case EntryStatus::kKnownDiscrepancy:
        ++s.known;
        break;
      case EntryStatus::kError:
        ++s.errors;
        break;
    }
  }
  return s;
}

std::string format_catalog_summary(const CatalogSummary& s, OutputFormat fmt) {
  if (fmt == OutputFormat::kJson) {
    ordered_json j;
    j["summary"] = {{"total", s.results.size()},
                    {"pass", s.passed},
                    {"fail", s.failed},
                    {"known_discrepancy", s.known},
                    {"error", s.errors}};
    j["entries"] = ordered_json::array();
    for (const auto& r : s.results) {
      ordered_json e;
      e["id"] = r.id;
      e["status"] = to_string(r.status);
      e["matches"] = r.matches;
      e["mismatches"] = r.mismatches;
      if (!r.error.empty()) e["error"] = r.error;
      e["seconds"] = r.seconds;
      j["entries"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == OutputFormat::kCsv) {
    os << "id,status,matches,detail\n";
    for (const auto& r : s.results) {
      std::string detail = r.error;
      for (const auto& m : r.mismatches) detail += (detail.empty() ? "" : "; ") + m;
      std::string quoted;
      for (char c : detail) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      os << r.id << "," << to_string(r.status) << "," << (r.matches ? "true" : "false") << ",\"" << quoted
         << "\"\n";
    }
    return os.str();
  }
  std::size_t w = 4;
  for (const auto& r : s.results) w = std::max(w, r.id.size());
  for (const auto& r : s.results) {
    os << std::left << std::setw(static_cast<int>(w) + 2) << r.id << std::setw(19) << to_string(r.status);
    if (r.status == EntryStatus::kKnownDiscrepancy) os << (r.matches ? "(values agree) " : "");
    os << std::fixed << std::setprecision(3) << r.seconds << "s\n";
    if (!r.error.empty()) os << "    error: " << r.error << "\n";
    if (r.status != EntryStatus::kPass) {
      for (const auto& m : r.mismatches) os << "    " << m << "\n";
    }
  }
  os << "\n" << s.results.size() << " entries: " << s.passed << " pass, " << s.failed << " fail, " << s.known
     << " known discrepancy, " << s.errors << " error\n";
  return os.str();
}

}  // namespace anticode
