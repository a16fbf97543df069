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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anticode/catalog.hpp"
#include "anticode/code.hpp"
#include "anticode/constructions.hpp"
#include "anticode/error.hpp"
#include "anticode/io.hpp"
#include "anticode/report.hpp"
#include "anticode/swrg.hpp"

namespace {

using namespace anticode;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

const std::vector<std::string> kFamilies = {"simplex", "complement", "rs", "comp-rs", "comp-mds", "fixed-weight",
                                            "two-subspace", "ovoid", "dual-bch", "kasami", "concat"};

struct Params {
  std::optional<std::uint64_t> q, k, m, s, w, K, h;
  std::string base, outer, in, out, format = "text";
  unsigned l = 3;
  unsigned threads = 0;
  std::string manifest;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

// Family parameters from flags. --s stands for q = 2^s.
ConstructionSpec spec_for(const std::string& family, const Params& p) {
  ConstructionSpec s;
  s.family = family;
  auto put = [&](const char* name, const std::optional<std::uint64_t>& v) {
    if (v) s.params[name] = *v;
  };
  std::optional<std::uint64_t> q = p.q;
  if (!q && p.s) {
    if (*p.s == 0 || *p.s > 16) throw InvalidArgument("--s must be in 1..16");
    q = std::uint64_t{1} << *p.s;
  }
  if (family == "simplex" || family == "rs") {
    put("q", q);
    put("k", p.k);
  } else if (family == "comp-rs" || family == "comp-mds") {
    put("q", q);
    put("k", p.k);
    s.params["h"] = p.h.value_or(0);
  } else if (family == "fixed-weight") {
    put("k", p.k);
    put("w", p.w);
  } else if (family == "two-subspace" || family == "ovoid") {
    put("q", q);
  } else if (family == "dual-bch" || family == "kasami") {
    put("m", p.m);
  }
  return s;
}

LinearCode construct_code(const std::string& family, const Params& p, const Caps& caps) {
  if (family == "complement" || family == "concat") {
    const std::string& inner_family = family == "complement" ? p.base : p.outer;
    LinearCode inner = [&] {
      if (!p.in.empty()) return load_code_file(p.in).code;
      if (inner_family.empty()) {
        throw InvalidArgument(family + " needs --in FILE or " + (family == "complement" ? "--base" : "--outer") +
                              " FAMILY");
      }
      if (inner_family == "complement" || inner_family == "concat") {
        throw InvalidArgument("nested " + inner_family + " is only available through --in");
      }
      return build(spec_for(inner_family, p), caps);
    }();
    if (family == "concat") return concatenate_with_simplex(inner);
    if (!p.K) throw InvalidArgument("complement needs --K");
    return complement(inner, *p.K, caps);
  }
  return build(spec_for(family, p), caps);
}

std::string params_line(const LinearCode& code, const std::optional<WeightDistribution>& wd) {
  std::string s = "[" + std::to_string(code.n()) + "," + std::to_string(code.k());
  if (wd) s += "," + std::to_string(wd->min_nonzero_weight());
  s += "]_" + std::to_string(code.q()) + "  " + code.label();
  return s;
}

// Writes the code file and a one-line summary. The distribution is cached in
// the file when it is within the caps.
int write_code(const LinearCode& code, const Params& p, const Caps& caps) {
  std::optional<WeightDistribution> wd;
  try {
    wd = weight_distribution(code, Enumeration::kScalarClasses, caps);
  } catch (const CapExceeded&) {
  }
  emit(write_code_json(code, wd ? &*wd : nullptr), p.out);
  std::ostream& info = (p.out.empty() || p.out == "-") ? std::cerr : std::cout;
  info << params_line(code, wd) << "\n";
  return kExitOk;
}

int run_analyze(const Params& p, const Caps& caps) {
  CodeFile f = load_code_file(p.in);
  CodeReport r = analyze(f.code, caps);
  emit(format_report(r, parse_output_format(p.format)), p.out);
  return r.weight_distribution ? kExitOk : kExitCap;
}

int run_wd_transform(const Params& p, const Caps& caps) {
  if (!p.K) throw InvalidArgument("wd-transform needs --K");
  WeightDistribution base = read_weight_distribution_json(read_text_file(p.in), caps);
  emit(format_weight_distribution(transform_wd(base, *p.K), parse_output_format(p.format)), p.out);
  return kExitOk;
}

int run_swrg(const Params& p, const Caps& caps) {
  CodeFile f = load_code_file(p.in);
  SwrgCertificate c = verify_swrg(f.code, p.l, caps);
  emit(format_certificate(c, parse_output_format(p.format)), p.out);
  return kExitOk;
}

int run_catalog(const Params& p, const Caps& caps, const std::vector<std::string>& only) {
  CatalogManifest m = p.manifest.empty() ? CatalogManifest::bundled()
                                         : CatalogManifest::parse(read_text_file(p.manifest));
  if (!only.empty()) {
    std::vector<CatalogEntry> kept;
    for (auto& e : m.entries) {
      if (std::find(only.begin(), only.end(), e.id) != only.end()) kept.push_back(std::move(e));
    }
    if (kept.size() != only.size()) throw InvalidArgument("unknown catalog id in --id");
    m.entries = std::move(kept);
  }
  CatalogSummary s = verify_catalog(m, caps, p.threads);
  emit(format_catalog_summary(s, parse_output_format(p.format)), p.out);
  return s.ok() ? kExitOk : kExitMismatch;
}

void add_family_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--q", p.q, "field size");
  cmd->add_option("--k", p.k, "dimension");
  cmd->add_option("--m", p.m, "extension degree (dual-bch, kasami)");
  cmd->add_option("--s", p.s, "q = 2^s");
  cmd->add_option("--w", p.w, "column weight (fixed-weight)");
  cmd->add_option("--h", p.h, "extra dimensions, K = k + h (comp-rs, comp-mds)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective codes, anticodes and their complements over small finite fields.\n"
               "Caps: ANTICODE_ENUM_LOG2, ANTICODE_MINIMAL_LOG2, ANTICODE_POINTS_LOG2, ANTICODE_SWRG_MAX_K."};
  app.require_subcommand(1);
  Params p;
  std::string family;
  std::vector<std::string> only;
  const std::vector<std::string> formats = {"json", "csv", "text"};

  auto* construct = app.add_subcommand("construct", "build a code and write it as JSON");
  construct->set_help_flag("--help", "print this help and exit");  // -h clashes with --h
  construct->add_option("family", family, "code family")->required()->check(CLI::IsMember(kFamilies));
  add_family_flags(construct, p);
  construct->add_option("--K", p.K, "ambient dimension (complement)");
  construct->add_option("--base", p.base, "base family (complement)")->check(CLI::IsMember(kFamilies));
  construct->add_option("--outer", p.outer, "outer family over GF(2^s) (concat)")->check(CLI::IsMember(kFamilies));
  construct->add_option("--in", p.in, "base or outer code file (complement, concat)");
  construct->add_option("--out", p.out, "output path (default stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "report parameters, bounds and minimality");
  analyze_cmd->add_option("--in,input", p.in, "code file")->required();
  analyze_cmd->add_option("--format", p.format)->check(CLI::IsMember(formats));
  analyze_cmd->add_option("--out", p.out, "output path (default stdout)");

  auto* complement_cmd = app.add_subcommand("complement", "complement of a code file in dimension K");
  complement_cmd->add_option("--in,input", p.in, "code file")->required();
  complement_cmd->add_option("--K", p.K, "ambient dimension")->required();
  complement_cmd->add_option("--out", p.out, "output path (default stdout)");

  auto* transform = app.add_subcommand("wd-transform", "complement distribution from a base distribution");
  transform->add_option("--in,input", p.in, "distribution or code file")->required();
  transform->add_option("--K", p.K, "ambient dimension")->required();
  transform->add_option("--format", p.format)->check(CLI::IsMember(formats));
  transform->add_option("--out", p.out, "output path (default stdout)");

  auto* swrg = app.add_subcommand("swrg-verify", "certify l-strong walk regularity of the dual coset graph");
  swrg->add_option("--in,input", p.in, "binary three-weight code file")->required();
  swrg->add_option("--l", p.l, "odd walk length >= 3")->check(CLI::Range(3u, 7u));
  swrg->add_option("--format", p.format)->check(CLI::IsMember(formats));
  swrg->add_option("--out", p.out, "output path (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "bundled table catalog");
  catalog->require_subcommand(1);
  auto* verify = catalog->add_subcommand("verify", "check every catalog row");
  verify->add_option("--manifest", p.manifest, "manifest file (default: bundled)");
  verify->add_option("--id", only, "only these entry ids");
  verify->add_option("--threads", p.threads, "worker threads (0 = hardware)");
  verify->add_option("--format", p.format)->check(CLI::IsMember(formats));
  verify->add_option("--out", p.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Caps caps = Caps::from_env();
    if (construct->parsed()) return write_code(construct_code(family, p, caps), p, caps);
    if (complement_cmd->parsed()) return write_code(complement(load_code_file(p.in).code, *p.K, caps), p, caps);
    if (analyze_cmd->parsed()) return run_analyze(p, caps);
    if (transform->parsed()) return run_wd_transform(p, caps);
    if (swrg->parsed()) return run_swrg(p, caps);
    if (verify->parsed()) return run_catalog(p, caps, only);
  } catch (const CapExceeded& e) {
    std::cerr << "anticode: cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "anticode: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
