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


#ifndef ANTICODE_IO_HPP_
#define ANTICODE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "anticode/caps.hpp"
#include "anticode/code.hpp"

namespace anticode {

inline constexpr std::string_view kCodeFormat = "anticode-code/1";

struct CodeFile {
  LinearCode code;
  std::optional<WeightDistribution> weight_distribution;
};

// Single JSON document: field (p, e, modulus), n, k, label, generator rows as
// integer codes, and optionally the weight distribution as [weight, count]
// pairs. Output is deterministic.
std::string write_code_json(const LinearCode& code, const WeightDistribution* wd = nullptr);

// Throws ParseError on malformed documents, RankDeficient when the generator
// rank is below k, InvalidArgument on an inconsistent cached distribution.
CodeFile read_code_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

CodeFile load_code_file(const std::string& path);

// Either a distribution document {"q", "n", "k", "weight_distribution"} or a
// code file. A code file without a cached distribution is enumerated, so this
// can throw CapExceeded. A missing zero word is added.
WeightDistribution read_weight_distribution_json(std::string_view text, const Caps& caps = Caps::defaults());

}  // namespace anticode

#endif  // ANTICODE_IO_HPP_
