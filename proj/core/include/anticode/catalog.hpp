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

#ifndef ANTICODE_CATALOG_HPP_
#define ANTICODE_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anticode/caps.hpp"
#include "anticode/code.hpp"
#include "anticode/report.hpp"

namespace anticode {

inline constexpr std::string_view kCatalogFormat = "anticode-catalog/1";

// A named construction with integer parameters. complement and concat carry
// the base code in `inner`.
struct ConstructionSpec {
  std::string family;
  std::map<std::string, std::uint64_t> params;
  std::shared_ptr<const ConstructionSpec> inner;

  std::string describe() const;
};

// Families: simplex, rs, comp-rs, comp-mds, fixed-weight, two-subspace, ovoid,
// dual-bch, kasami, concat, complement. Throws InvalidArgument on an unknown
// family or a missing parameter.
LinearCode build(const ConstructionSpec& spec, const Caps& caps = Caps::defaults());

enum class CatalogMode { kConstructAndEnumerate, kTransformOnly };

struct ExpectedParams {
  std::uint32_t q = 2;
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d, delta;
  std::optional<std::vector<std::size_t>> weights;
  std::optional<std::map<std::size_t, std::uint64_t>> distribution;  // nonzero weights only
  std::optional<std::int64_t> griesmer_defect, antigriesmer_defect;
  std::optional<std::string> optimality;  // optimal, almost_optimal, distance_to_best:N
  std::optional<bool> minimal;
};

struct CatalogEntry {
  std::string id;
  std::string tag;
  CatalogMode mode = CatalogMode::kConstructAndEnumerate;
  std::optional<ConstructionSpec> construct;
  std::optional<WeightDistribution> base;  // transform_only
  std::size_t K = 0;                       // transform_only
  ExpectedParams expected;
  std::optional<std::string> known_discrepancy;
};

struct CatalogManifest {
  std::vector<CatalogEntry> entries;

  // Throws ParseError.
  static CatalogManifest parse(std::string_view json_text);
  static const CatalogManifest& bundled();
};

enum class EntryStatus { kPass, kFail, kKnownDiscrepancy, kError };
std::string to_string(EntryStatus s);

struct EntryResult {
  std::string id;
  EntryStatus status = EntryStatus::kError;
  bool matches = false;
  std::vector<std::string> mismatches;
  std::string error;
  std::optional<WeightDistribution> measured;
  double seconds = 0;
};

// Flagged entries always report kKnownDiscrepancy, with `matches` telling
// whether the values agreed anyway.
EntryResult verify_entry(const CatalogEntry& entry, const Caps& caps = Caps::defaults());

struct CatalogSummary {
  std::vector<EntryResult> results;  // manifest order
  std::size_t passed = 0, failed = 0, known = 0, errors = 0;

  bool ok() const noexcept { return failed == 0 && errors == 0; }
};

// threads == 0 uses std::thread::hardware_concurrency().
CatalogSummary verify_catalog(const CatalogManifest& manifest, const Caps& caps = Caps::defaults(),
                              unsigned threads = 0);

std::string format_catalog_summary(const CatalogSummary& summary, OutputFormat fmt);

}  // namespace anticode

#endif  // ANTICODE_CATALOG_HPP_
