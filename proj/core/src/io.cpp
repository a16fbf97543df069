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


#include "anticode/io.hpp"

#include <fstream>
#include <sstream>

#include "anticode/error.hpp"
#include "json.hpp"

namespace anticode {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T>
T get_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("code file: missing \"") + key + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("code file: bad value for \"") + key + "\"");
  }
}

}  // namespace

std::string write_code_json(const LinearCode& code, const WeightDistribution* wd) {
  const FieldSpec& spec = code.field()->spec();
  ordered_json doc;
  doc["format"] = kCodeFormat;
  doc["label"] = code.label();
  doc["field"] = {{"p", spec.p}, {"e", spec.e}, {"modulus", spec.modulus}};
  doc["n"] = code.n();
  doc["k"] = code.k();
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < code.k(); ++r) {
    auto row = code.generator().row(r);
    rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  doc["generator"] = std::move(rows);
  if (wd != nullptr) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [w, c] : wd->counts) pairs.push_back({w, c});
    doc["weight_distribution"] = std::move(pairs);
  }
  // one generator row per line keeps files diffable
  std::string out = "{\n";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + ordered_json(it.key()).dump() + ": ";
    if (it.key() == "generator" || it.key() == "weight_distribution") {
      out += "[";
      for (std::size_t i = 0; i < it->size(); ++i) {
        out += (i == 0 ? "\n    " : ",\n    ") + (*it)[i].dump();
      }
      out += it->empty() ? "]" : "\n  ]";
    } else {
      out += it->dump();
    }
  }
  out += "\n}\n";
  return out;
}

CodeFile read_code_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("code file: top level must be an object");
  if (get_field<std::string>(doc, "format") != kCodeFormat) {
    throw ParseError("code file: unsupported format, expected " + std::string(kCodeFormat));
  }
  const json& fd = doc.at("field");
  FieldSpec spec;
  spec.p = get_field<std::uint32_t>(fd, "p");
  spec.e = get_field<std::uint32_t>(fd, "e");
  spec.modulus = get_field<std::vector<std::uint32_t>>(fd, "modulus");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.e && q <= kMaxFieldSize; ++i) q *= spec.p;
  if (spec.e == 0 || q > kMaxFieldSize) throw ParseError("code file: field size out of range");
  spec.q = static_cast<std::uint32_t>(q);
  FieldPtr field;
  try {
    field = GaloisField::from_spec(spec);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("code file: ") + e.what());
  }

  const auto n = get_field<std::size_t>(doc, "n");
  const auto k = get_field<std::size_t>(doc, "k");
  const auto raw = get_field<std::vector<std::vector<std::uint32_t>>>(doc, "generator");
  if (raw.size() != k) {
    throw ParseError("code file: generator has " + std::to_string(raw.size()) +
                     " rows, k = " + std::to_string(k));
  }
  std::vector<std::vector<Element>> rows;
  for (const auto& r : raw) {
    if (r.size() != n) throw ParseError("code file: generator row length differs from n");
    std::vector<Element> row;
    for (std::uint32_t v : r) {
      if (v >= spec.q) {
        throw ParseError("code file: entry " + std::to_string(v) + " outside GF(" +
                         std::to_string(spec.q) + ")");
      }
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
  }
  std::string label = doc.contains("label") ? get_field<std::string>(doc, "label") : std::string();
  CodeFile out{code_from_generator(field, rows, std::move(label)), std::nullopt};

  if (auto it = doc.find("weight_distribution"); it != doc.end()) {
    WeightDistribution wd;
    wd.q = spec.q;
    wd.n = n;
    wd.k = k;
    try {
      for (const auto& pair : *it) {
        auto w = pair.at(0).get<std::size_t>();
        auto c = pair.at(1).get<std::uint64_t>();
        if (!wd.counts.emplace(w, c).second) throw ParseError("code file: repeated weight");
      }
    } catch (const json::exception&) {
      throw ParseError("code file: weight_distribution must be [weight, count] pairs");
    }
    wd.validate();
    out.weight_distribution = std::move(wd);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InvalidArgument("write failed: " + path);
}

CodeFile load_code_file(const std::string& path) { return read_code_json(read_text_file(path)); }

WeightDistribution read_weight_distribution_json(std::string_view text, const Caps& caps) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("distribution: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("distribution: expected a JSON object");
  if (doc.contains("generator")) {
    CodeFile f = read_code_json(text);
    if (f.weight_distribution) return *f.weight_distribution;
    return weight_distribution(f.code, Enumeration::kScalarClasses, caps);
  }
  WeightDistribution wd;
  wd.q = get_field<std::uint32_t>(doc, "q");
  wd.n = get_field<std::size_t>(doc, "n");
  wd.k = get_field<std::size_t>(doc, "k");
  auto it = doc.find("weight_distribution");
  if (it == doc.end()) throw ParseError("distribution: missing \"weight_distribution\"");
  try {
    for (const auto& pair : *it) {
      auto w = pair.at(0).get<std::size_t>();
      auto c = pair.at(1).get<std::uint64_t>();
      if (!wd.counts.emplace(w, c).second) throw ParseError("distribution: repeated weight");
    }
  } catch (const json::exception&) {
    throw ParseError("distribution: weight_distribution must be [weight, count] pairs");
  }
  wd.counts.emplace(0, 1);
  wd.validate();
  return wd;
}

}  // namespace anticode
