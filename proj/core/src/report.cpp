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


#include "anticode/report.hpp"

#include <iomanip>
#include <sstream>

#include "anticode/error.hpp"
#include "json.hpp"

namespace anticode {

using nlohmann::ordered_json;

namespace {

ordered_json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

std::string word_string(const std::vector<Element>& w) {
  std::string s;
  for (Element e : w) {
    if (!s.empty() && e > 9) s += ' ';
    s += std::to_string(e);
  }
  return s;
}

std::string params(const CodeReport& r) {
  std::string s = "[" + std::to_string(r.n) + "," + std::to_string(r.k);
  if (r.d) s += "," + std::to_string(*r.d);
  return s + "]_" + std::to_string(r.q);
}

ordered_json wd_json(const WeightDistribution& wd) {
  ordered_json a = ordered_json::array();
  for (const auto& [w, c] : wd.counts) a.push_back({w, c});
  return a;
}

ordered_json report_json(const CodeReport& r) {
  ordered_json j;
  auto skipped = [](const char*) { return ordered_json("skipped"); };
  j["label"] = r.label;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d ? ordered_json(*r.d) : skipped("d");
  j["delta"] = r.delta ? ordered_json(*r.delta) : skipped("delta");
  j["t"] = r.t ? ordered_json(*r.t) : skipped("t");
  if (r.weight_distribution) {
    j["weights"] = r.weight_distribution->nonzero_weights();
    j["weight_distribution"] = wd_json(*r.weight_distribution);
  } else {
    j["weights"] = "skipped";
    j["weight_distribution"] = "skipped";
  }
  j["projective"] = r.projective;
  j["dual_distance"] = r.dual_distance ? ordered_json(*r.dual_distance) : skipped("dual_distance");
  if (r.minimal_exact) {
    ordered_json m;
    m["minimal"] = r.minimal_exact->minimal;
    if (r.minimal_exact->witness) {
      m["witness"] = {word_string(r.minimal_exact->witness->first),
                      word_string(r.minimal_exact->witness->second)};
    }
    j["minimal_exact"] = std::move(m);
  } else {
    j["minimal_exact"] = "skipped";
  }
  j["ab_criterion"] = r.ab_criterion ? ordered_json(*r.ab_criterion) : skipped("ab_criterion");
  if (r.bounds) {
    const BoundsReport& b = *r.bounds;
    ordered_json bj;
    bj["griesmer_sum"] = big(b.griesmer_sum);
    bj["griesmer_defect"] = big(b.griesmer_defect);
    bj["antigriesmer_sum"] = big(b.antigriesmer_sum);
    bj["antigriesmer_defect"] = big(b.antigriesmer_defect);
    bj["antigriesmer_holds"] = b.antigriesmer_holds;
    bj["antigriesmer_hypothesis"] = b.antigriesmer_hypothesis;
    bj["plotkin_anticode_floor"] = big(b.plotkin_anticode_floor);
    bj["ek_bound"] = b.ek_bound ? big(*b.ek_bound) : ordered_json(nullptr);
    bj["prop21_holds"] = b.prop21_holds;
    j["bounds"] = std::move(bj);
  } else {
    j["bounds"] = "skipped";
  }
  if (r.optimality) {
    ordered_json o;
    o["class"] = to_string(r.optimality->cls);
    o["d_best"] = r.optimality->d_best ? ordered_json(*r.optimality->d_best) : ordered_json(nullptr);
    o["distance_to_best"] = r.optimality->distance_to_best
                                ? ordered_json(*r.optimality->distance_to_best)
                                : ordered_json(nullptr);
    j["optimality"] = std::move(o);
  } else {
    j["optimality"] = "skipped";
  }
  j["skipped"] = ordered_json::object();
  for (const auto& [k, why] : r.skipped) j["skipped"][k] = why;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string optimality_string(const Optimality& o) {
  switch (o.cls) {
    case OptimalityClass::kOptimal:
      return "optimal";
    case OptimalityClass::kAlmostOptimal:
      return "almost optimal (best known d = " + std::to_string(*o.d_best) + ")";
    case OptimalityClass::kDistanceToBest:
      return std::to_string(*o.distance_to_best) + " below best known d = " + std::to_string(*o.d_best);
    case OptimalityClass::kUnknown:
      break;
  }
  return "unknown (no table entry)";
}

std::string wd_text(const WeightDistribution& wd) {
  std::size_t ww = 6;
  for (const auto& [w, c] : wd.counts) ww = std::max(ww, std::to_string(w).size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(ww)) << "Weight" << "  Weight distribution\n";
  for (const auto& [w, c] : wd.counts) {
    os << std::left << std::setw(static_cast<int>(ww)) << w << "  " << c << "\n";
  }
  return os.str();
}

std::string report_text(const CodeReport& r) {
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(26) << key << value << "\n";
  };
  auto skip = [&](const std::string& key) {
    auto it = r.skipped.find(key);
    return "skipped (" + (it == r.skipped.end() ? std::string("cap") : it->second) + ")";
  };
  if (!r.label.empty()) line("code", r.label);
  line("parameters", params(r));
  line("maximum weight", r.delta ? std::to_string(*r.delta) : skip("delta"));
  line("nonzero weights", r.t ? std::to_string(*r.t) : skip("t"));
  line("projective", yes_no(r.projective));
  line("dual distance", r.dual_distance ? std::to_string(*r.dual_distance) : skip("dual_distance"));
  if (r.minimal_exact) {
    std::string v = yes_no(r.minimal_exact->minimal);
    if (r.minimal_exact->witness) {
      v += " (supp " + word_string(r.minimal_exact->witness->first) + " inside supp " +
           word_string(r.minimal_exact->witness->second) + ")";
    }
    line("minimal", v);
  } else {
    line("minimal", skip("minimal_exact"));
  }
  line("Ashikhmin-Barg", r.ab_criterion ? yes_no(*r.ab_criterion) : skip("ab_criterion"));
  if (r.bounds) {
    const BoundsReport& b = *r.bounds;
    line("Griesmer sum / defect", to_string(b.griesmer_sum) + " / " + to_string(b.griesmer_defect));
    line("antiGriesmer sum / defect",
         to_string(b.antigriesmer_sum) + " / " + to_string(b.antigriesmer_defect) +
             (b.antigriesmer_hypothesis ? "" : " (n >= q^(k-1), bound not applicable)"));
    line("Plotkin anticode floor", to_string(b.plotkin_anticode_floor));
    if (b.ek_bound) line("Erdos-Kleitman bound", to_string(*b.ek_bound));
    line("delta >= k", yes_no(b.prop21_holds));
  } else {
    line("bounds", skip("bounds"));
  }
  line("optimality", r.optimality ? optimality_string(*r.optimality) : skip("optimality"));
  if (r.weight_distribution) {
    os << "\n" << wd_text(*r.weight_distribution);
  } else {
    line("weight distribution", skip("weight_distribution"));
  }
  return os.str();
}

std::string report_csv(const CodeReport& r) {
  // flatten the JSON form; nested objects become dotted keys
  std::ostringstream os;
  os << "field,value\n";
  ordered_json j = report_json(r);
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "weight_distribution" && it->is_array()) {
      for (const auto& p : *it) os << "A_" << p[0].dump() << "," << p[1].dump() << "\n";
    } else if (it->is_object()) {
      for (auto jt = it->begin(); jt != it->end(); ++jt) {
        os << it.key() << "." << jt.key() << ","
           << esc(jt->is_string() ? jt->get<std::string>() : jt->dump()) << "\n";
      }
    } else if (it->is_array()) {
      std::string v;
      for (const auto& x : *it) v += (v.empty() ? "" : " ") + x.dump();
      os << it.key() << "," << esc(v) << "\n";
    } else {
      os << it.key() << "," << esc(it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
  return os.str();
}

ordered_json walk_json(const WalkCounts& w) {
  return {{"lambda", w.lambda}, {"mu", w.mu}, {"nu", w.nu}};
}

ordered_json certificate_json(const SwrgCertificate& c) {
  ordered_json j;
  j["l"] = c.l;
  j["n"] = c.n;
  j["k"] = c.k;
  j["vertices"] = std::uint64_t{1} << c.k;
  j["weights"] = c.weights;
  ordered_json sp = ordered_json::array();
  for (const auto& [ev, mult] : c.spectrum) sp.push_back({ev, mult});
  j["spectrum"] = std::move(sp);
  j["spectrum_verified"] = c.spectrum_verified;
  j["sum_condition"] = c.sum_condition;
  j["middle_condition"] = c.middle_condition;
  if (c.walks.counts) {
    j["walk_counts"] = walk_json(*c.walks.counts);
  } else if (c.walks.witness) {
    const WalkWitness& w = *c.walks.witness;
    j["walk_counts"] = nullptr;
    j["nonconstancy_witness"] = {{"class", w.cls},
                                 {"first", {w.first.first, w.first.second}},
                                 {"first_count", w.first_count},
                                 {"second", {w.second.first, w.second.second}},
                                 {"second_count", w.second_count}};
  }
  j["analytic"] = c.analytic ? walk_json(*c.analytic) : ordered_json(nullptr);
  j["analytic_matches"] = c.analytic_matches ? ordered_json(*c.analytic_matches) : ordered_json(nullptr);
  j["root_equation"] = c.root_equation ? ordered_json(*c.root_equation) : ordered_json(nullptr);
  j["vertex_identity"] = c.vertex_identity ? ordered_json(*c.vertex_identity) : ordered_json(nullptr);
  j["verdict"] = to_string(c.verdict);
  return j;
}

std::string opt_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

}  // namespace

CodeReport analyze(const LinearCode& code, const Caps& caps, const BestKnownTable& table) {
  CodeReport r;
  r.label = code.label();
  r.q = code.q();
  r.n = code.n();
  r.k = code.k();
  r.projective = is_projective(code);

  try {
    r.weight_distribution = weight_distribution(code, Enumeration::kScalarClasses, caps);
  } catch (const CapExceeded& e) {
    r.skipped["weight_distribution"] = e.what();
    for (const char* key : {"d", "delta", "t", "ab_criterion", "bounds", "optimality"}) {
      r.skipped[key] = "needs the weight distribution";
    }
  }
  if (r.weight_distribution) {
    const WeightDistribution& wd = *r.weight_distribution;
    r.d = wd.min_nonzero_weight();
    r.delta = wd.max_weight();
    r.t = wd.weight_count();
    r.ab_criterion = ab_criterion(wd);
    r.bounds = bounds_report(r.q, r.n, r.k, *r.d, *r.delta);
    r.optimality = classify_optimality(r.n, r.k, r.q, *r.d, table);
  }

  if (r.n == r.k) {
    r.skipped["dual_distance"] = "the dual of a [n,n] code is the zero code";
  } else {
    DualDistance dd = dual_distance(code, caps, true);
    if (dd.exact) {
      r.dual_distance = dd.exact;
    } else {
      r.skipped["dual_distance"] = std::string("q^(n-k) over the enumeration cap; column test gives ") +
                                   (dd.at_least_three ? ">= 3" : "< 3");
    }
  }

  try {
    r.minimal_exact = is_minimal_exact(code, caps);
  } catch (const CapExceeded& e) {
    r.skipped["minimal_exact"] = e.what();
  }
  return r;
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw InvalidArgument("unknown format \"" + name + "\" (json, csv, text)");
}

std::string format_report(const CodeReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson:
      return report_json(r).dump(2) + "\n";
    case OutputFormat::kCsv:
      return report_csv(r);
    case OutputFormat::kText:
      break;
  }
  return report_text(r);
}

std::string format_weight_distribution(const WeightDistribution& wd, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: {
      ordered_json j;
      j["q"] = wd.q;
      j["n"] = wd.n;
      j["k"] = wd.k;
      j["weight_distribution"] = wd_json(wd);
      return j.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string s = "weight,count\n";
      for (const auto& [w, c] : wd.counts) s += std::to_string(w) + "," + std::to_string(c) + "\n";
      return s;
    }
    case OutputFormat::kText:
      break;
  }
  return "[" + std::to_string(wd.n) + "," + std::to_string(wd.k) + "]_" + std::to_string(wd.q) + "\n" +
         wd_text(wd);
}

std::string format_certificate(const SwrgCertificate& c, OutputFormat fmt) {
  if (fmt == OutputFormat::kJson) return certificate_json(c).dump(2) + "\n";
  if (fmt == OutputFormat::kCsv) {
    std::ostringstream os;
    os << "field,value\n";
    ordered_json j = certificate_json(c);
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string v = it->is_string() ? it->get<std::string>() : it->dump();
      if (v.find(',') != std::string::npos) v = "\"" + v + "\"";
      os << it.key() << "," << v << "\n";
    }
    return os.str();
  }
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(22) << key << value << "\n";
  };
  line("l", std::to_string(c.l));
  line("graph", std::to_string(std::uint64_t{1} << c.k) + " vertices, degree " + std::to_string(c.n));
  std::string ws;
  for (auto w : c.weights) ws += (ws.empty() ? "" : ", ") + std::to_string(w);
  line("weights", ws);
  std::string sp;
  for (const auto& [ev, m] : c.spectrum) sp += (sp.empty() ? "" : ", ") + std::to_string(ev) + "^" + std::to_string(m);
  line("spectrum", "{" + sp + "}" + (c.spectrum_verified ? " verified" : " NOT verified"));
  line("w1+w2+w3 = 3n/2", yes_no(c.sum_condition));
  line("w2 = n/2", yes_no(c.middle_condition));
  if (c.walks.counts) {
    const WalkCounts& w = *c.walks.counts;
    line("(lambda, mu, nu)", "(" + std::to_string(w.lambda) + ", " + std::to_string(w.mu) + ", " +
                                 std::to_string(w.nu) + ")");
  } else if (c.walks.witness) {
    const WalkWitness& w = *c.walks.witness;
    line("walk counts", "not constant on " + w.cls + " pairs: " + std::to_string(w.first_count) + " vs " +
                            std::to_string(w.second_count));
  }
  if (c.analytic) {
    line("closed form", "(" + std::to_string(c.analytic->lambda) + ", " + std::to_string(c.analytic->mu) +
                            ", " + std::to_string(c.analytic->nu) + ")");
  }
  line("closed form matches", opt_bool(c.analytic_matches));
  line("root equation", opt_bool(c.root_equation));
  line("vertex identity", opt_bool(c.vertex_identity));
  line("verdict", to_string(c.verdict));
  return os.str();
}

}  // namespace anticode
