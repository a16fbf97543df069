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

#include <cstdio>
#include <filesystem>
#include <string>

#include "anticode/constructions.hpp"
#include "anticode/error.hpp"
#include "anticode/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace anticode;
using nlohmann::json;

TEST_CASE("code files round-trip") {
  for (const LinearCode& c : {simplex(3, 3), ovoid_code(4), complement(dual_bch_code(3), 6), rs_code(9, 3),
                              two_subspace_code(5)}) {
    const WeightDistribution wd = weight_distribution(c);
    const std::string text = write_code_json(c, &wd);
    CodeFile f = read_code_json(text);
    CHECK(f.code.label() == c.label());
    CHECK(f.code.q() == c.q());
    CHECK(f.code.generator() == c.generator());
    REQUIRE(f.weight_distribution);
    CHECK(*f.weight_distribution == wd);
    CHECK(write_code_json(f.code, &*f.weight_distribution) == text);

    const std::string bare = write_code_json(c);
    CHECK_FALSE(read_code_json(bare).weight_distribution);
  }
}

TEST_CASE("code file layout") {
  LinearCode c = simplex(2, 2);
  json j = json::parse(write_code_json(c));
  CHECK(j["format"] == std::string(kCodeFormat));
  CHECK(j["field"]["p"] == 2);
  CHECK(j["field"]["e"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 2);
  CHECK(j["generator"] == json::array({json::array({0, 1, 1}), json::array({1, 0, 1})}));

  // GF(4) carries its modulus
  json g = json::parse(write_code_json(ovoid_code(4)));
  CHECK(g["field"]["modulus"].size() == 3);
}

TEST_CASE("code file errors") {
  const std::string good = write_code_json(simplex(2, 2));
  auto mutate = [&](auto f) {
    json j = json::parse(good);
    f(j);
    return j.dump();
  };
  CHECK_THROWS_AS(read_code_json("{"), ParseError);
  CHECK_THROWS_AS(read_code_json("[]"), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["format"] = "other/1"; })), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["n"] = 4; })), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["k"] = 3; })), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["generator"][0][0] = 2; })), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["field"]["p"] = 4; })), ParseError);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["generator"][1] = j["generator"][0]; })), RankDeficient);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) {
                    j["weight_distribution"] = json::array({json::array({0, 1}), json::array({2, 2})});
                  })),
                  InvalidArgument);
  CHECK_THROWS_AS(read_code_json(mutate([](json& j) { j["weight_distribution"] = "x"; })), ParseError);
}

TEST_CASE("distribution documents") {
  WeightDistribution w = read_weight_distribution_json(R"({"q":2,"n":35,"k":6,"weight_distribution":[[16,35],[20,28]]})");
  CHECK(w.total() == 64);
  CHECK(w.count(0) == 1);
  CHECK(w.min_nonzero_weight() == 16);

  LinearCode c = simplex(3, 2);
  CHECK(read_weight_distribution_json(write_code_json(c)) == weight_distribution(c));
  CHECK_THROWS_AS(read_weight_distribution_json(R"({"q":2,"n":3,"k":2,"weight_distribution":[[2,2]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(read_weight_distribution_json(R"({"q":2,"n":3})"), ParseError);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "anticode_io_test.json";
  LinearCode c = two_subspace_code(3);
  write_text_file(path.string(), write_code_json(c));
  CHECK(load_code_file(path.string()).code.generator() == c.generator());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_code_file(path.string()), InvalidArgument);
}
