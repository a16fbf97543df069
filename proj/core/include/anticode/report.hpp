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


#ifndef ANTICODE_REPORT_HPP_
#define ANTICODE_REPORT_HPP_

#include <map>
#include <optional>
#include <string>

#include "anticode/bounds.hpp"
#include "anticode/caps.hpp"
#include "anticode/code.hpp"
#include "anticode/swrg.hpp"

namespace anticode {

struct CodeReport {
  std::string label;
  std::uint32_t q = 2;
  std::size_t n = 0, k = 0;
  bool projective = false;
  std::optional<WeightDistribution> weight_distribution;
  std::optional<std::size_t> d, delta, t;
  std::optional<std::size_t> dual_distance;
  std::optional<MinimalityVerdict> minimal_exact;
  std::optional<bool> ab_criterion;
  std::optional<BoundsReport> bounds;
  std::optional<Optimality> optimality;
  // field name -> reason, for every field left unset
  std::map<std::string, std::string> skipped;
};

// Cap overflows never throw here; the affected fields are listed in skipped.
CodeReport analyze(const LinearCode& code, const Caps& caps = Caps::defaults(),
                   const BestKnownTable& table = BestKnownTable::bundled());

enum class OutputFormat { kJson, kCsv, kText };
OutputFormat parse_output_format(const std::string& name);

std::string format_report(const CodeReport& r, OutputFormat fmt);
std::string format_weight_distribution(const WeightDistribution& wd, OutputFormat fmt);
std::string format_certificate(const SwrgCertificate& cert, OutputFormat fmt);

}  // namespace anticode

#endif  // ANTICODE_REPORT_HPP_
