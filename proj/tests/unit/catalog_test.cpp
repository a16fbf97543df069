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

#include <set>
#include <string>

#include "anticode/catalog.hpp"
#include "anticode/constructions.hpp"
#include "anticode/error.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace anticode;
using nlohmann::json;

namespace {

std::string manifest(const std::string& entries) {
  return R"({"format":"anticode-catalog/1","entries":[)" + entries + "]}";
}

const char* kGood = R"({"id":"s","tag":"t","mode":"construct_and_enumerate",
  "construct":{"family":"simplex","q":2,"k":3},
  "expected":{"q":2,"n":7,"k":3,"d":4,"weights":[4],"distribution":[[4,7]],"griesmer_defect":0}})";

const char* kWrong = R"({"id":"w","tag":"t","mode":"construct_and_enumerate",
  "construct":{"family":"simplex","q":2,"k":3},
  "expected":{"q":2,"n":7,"k":3,"d":3}})";

const char* kTransform = R"({"id":"x","tag":"t","mode":"transform_only",
  "base":{"q":2,"n":35,"k":6,"distribution":[[16,35],[20,28]]},"K":7,
  "expected":{"q":2,"n":92,"k":7,"d":44,"distribution":[[44,56],[48,70],[64,1]]}})";

}  // namespace

TEST_CASE("bundled manifest") {
  const CatalogManifest& m = CatalogManifest::bundled();
  CHECK(m.entries.size() >= 100);
  std::set<std::string> ids;
  std::size_t construct = 0, transform = 0;
  for (const auto& e : m.entries) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.tag.empty());
    if (e.mode == CatalogMode::kTransformOnly) {
      ++transform;
      REQUIRE(e.base);
      CHECK(e.base->total() == [&] {
        std::uint64_t t = 1;
        for (std::size_t i = 0; i < e.base->k; ++i) t *= e.base->q;
        return t;
      }());
    } else {
      ++construct;
      CHECK(e.construct.has_value());
    }
  }
  CHECK(construct > 50);
  CHECK(transform > 50);
}

TEST_CASE("construction specs") {
  ConstructionSpec outer{"ovoid", {{"q", 4}}, nullptr};
  ConstructionSpec concat{"concat", {}, std::make_shared<ConstructionSpec>(outer)};
  LinearCode c = build(concat);
  CHECK(c.n() == 51);
  CHECK(c.k() == 8);
  CHECK(concat.describe() == "concat(ovoid(q=4))");

  ConstructionSpec comp{"complement", {{"K", 6}}, std::make_shared<ConstructionSpec>(ConstructionSpec{"dual-bch", {{"m", 3}}, nullptr})};
  CHECK(build(comp).n() == 56);

  CHECK_THROWS_AS(build(ConstructionSpec{"nope", {}, nullptr}), InvalidArgument);
  CHECK_THROWS_AS(build(ConstructionSpec{"simplex", {{"q", 2}}, nullptr}), InvalidArgument);
  CHECK_THROWS_AS(build(ConstructionSpec{"complement", {{"K", 3}}, nullptr}), InvalidArgument);
}

TEST_CASE("entry verdicts") {
  CatalogManifest m = CatalogManifest::parse(manifest(std::string(kGood) + "," + kWrong + "," + kTransform));
  REQUIRE(m.entries.size() == 3);
  EntryResult good = verify_entry(m.entries[0]);
  CHECK(good.status == EntryStatus::kPass);
  CHECK(good.matches);
  EntryResult wrong = verify_entry(m.entries[1]);
  CHECK(wrong.status == EntryStatus::kFail);
  REQUIRE(wrong.mismatches.size() == 1);
  CHECK(wrong.mismatches[0] == "d: expected 3, measured 4");
  CHECK(verify_entry(m.entries[2]).status == EntryStatus::kPass);

  m.entries[1].known_discrepancy = "printed value differs";
  EntryResult flagged = verify_entry(m.entries[1]);
  CHECK(flagged.status == EntryStatus::kKnownDiscrepancy);
  CHECK_FALSE(flagged.matches);

  m.entries[0].known_discrepancy = "caption only";
  EntryResult agree = verify_entry(m.entries[0]);
  CHECK(agree.status == EntryStatus::kKnownDiscrepancy);
  CHECK(agree.matches);

  Caps tiny;
  tiny.enumeration_log2 = 2;
  CHECK(verify_entry(m.entries[0], tiny).status == EntryStatus::kError);
}

TEST_CASE("summaries") {
  CatalogManifest m = CatalogManifest::parse(manifest(std::string(kGood) + "," + kWrong + "," + kTransform));
  CatalogSummary s = verify_catalog(m, Caps::defaults(), 2);
  CHECK(s.passed == 2);
  CHECK(s.failed == 1);
  CHECK_FALSE(s.ok());
  CHECK(s.results[1].id == "w");
  json j = json::parse(format_catalog_summary(s, OutputFormat::kJson));
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["entries"][1]["status"] == "fail");
  CHECK(format_catalog_summary(s, OutputFormat::kCsv).find("w,fail,false,\"d: expected 3, measured 4\"") !=
        std::string::npos);
  CHECK(format_catalog_summary(s, OutputFormat::kText).find("3 entries: 2 pass, 1 fail") != std::string::npos);
}

TEST_CASE("bundled catalog verifies, concurrently and serially alike") {
  const CatalogManifest& m = CatalogManifest::bundled();
  CatalogSummary one = verify_catalog(m, Caps::defaults(), 1);
  CatalogSummary four = verify_catalog(m, Caps::defaults(), 4);
  CHECK(one.ok());
  CHECK(one.errors == 0);
  CHECK(one.known > 0);
  REQUIRE(one.results.size() == four.results.size());
  for (std::size_t i = 0; i < one.results.size(); ++i) {
    CHECK(one.results[i].id == four.results[i].id);
    CHECK(one.results[i].status == four.results[i].status);
    CHECK(one.results[i].mismatches == four.results[i].mismatches);
  }
}

TEST_CASE("manifest errors") {
  CHECK_THROWS_AS(CatalogManifest::parse("{"), ParseError);
  CHECK_THROWS_AS(CatalogManifest::parse(R"({"format":"x","entries":[]})"), ParseError);
  CHECK_THROWS_AS(CatalogManifest::parse(manifest(R"({"id":"a","mode":"sideways","expected":{}})")), ParseError);
  CHECK_THROWS_AS(CatalogManifest::parse(manifest(R"({"id":"a","mode":"construct_and_enumerate",
      "construct":{"family":"simplex","q":-2},"expected":{"q":2,"n":1,"k":1}})")),
                  ParseError);
  CHECK(CatalogManifest::parse(manifest("")).entries.empty());
}
