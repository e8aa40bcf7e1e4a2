// Copyright 2026 The qswap authors
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

#include "qswap/report_io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <ostream>
#include <stdexcept>

namespace qswap {

namespace {

std::string iso_utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void dump_value(const Json& value, std::string& out, int indent, int depth) {
  const std::string pad = indent >= 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent >= 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += pad;
        out += Json(key).dump();
        out += indent >= 0 ? ": " : ":";
        dump_value(item, out, indent, depth + 1);
      }
      out += close_pad;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ',';
        first = false;
        out += pad;
        dump_value(item, out, indent, depth + 1);
      }
      out += close_pad;
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

Json complex_pair(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json optional_double(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const char* distribution_name(SampleDistribution d) {
  switch (d) {
    case SampleDistribution::kUniformSimplex: return "uniform-simplex";
    case SampleDistribution::kSparseSupport: return "sparse-support";
    case SampleDistribution::kStructuredPeriodic: return "structured-periodic";
  }
  return "unknown";
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump_value(value, out, indent, 0);
  return out;
}

Json to_json(const CCRBreakdown& ccr) {
  return Json{{"coherence", ccr.coherence},
              {"predictability", ccr.predictability},
              {"entanglement", ccr.entanglement},
              {"d", ccr.d},
              {"sum", ccr.sum}};
}

Json to_json(const SchmidtCoeffs& coeffs) {
  Json arr = Json::array();
  for (const Complex& c : coeffs.coeffs()) arr.push_back(complex_pair(c));
  return arr;
}

Json to_json(const PureState& state) {
  Json arr = Json::array();
  for (std::int64_t i = 0; i < state.total_dim(); ++i) arr.push_back(complex_pair(state.amp(i)));
  return arr;
}

Json to_json(const BBMOutcome& outcome) {
  return Json{{"p", outcome.p},
              {"q", outcome.q},
              {"probability", outcome.probability},
              {"entanglement", outcome.entanglement},
              {"degenerate", outcome.degenerate},
              {"post_state", outcome.post_state ? to_json(*outcome.post_state) : Json(nullptr)}};
}

Json to_json(const BoundReport& bounds) {
  Json per_outcome = Json::array();
  for (const std::optional<double>& b : bounds.per_outcome_bound) per_outcome.push_back(optional_double(b));
  return Json{{"avg_entanglement", bounds.avg_entanglement},
              {"bound_xi", bounds.bound_xi},
              {"bound_eta", bounds.bound_eta},
              {"bound_product", bounds.bound_product},
              {"bound_conjecture", bounds.bound_conjecture},
              {"per_outcome_bound", per_outcome},
              {"xi_bound_holds", bounds.xi_bound_holds},
              {"eta_bound_holds", bounds.eta_bound_holds},
              {"product_bound_holds", bounds.product_bound_holds},
              {"per_outcome_bounds_hold", bounds.per_outcome_bounds_hold},
              {"per_outcome_applicable", bounds.per_outcome_applicable},
              {"conjecture_status",
               std::string(bounds.conjecture_holds ? "HOLDS" : "VIOLATED") + " (hypothesis)"},
              {"tol", bounds.tol}};
}

Json to_json(const SwapReport& report) {
  Json outcomes = Json::array();
  for (const BBMOutcome& o : report.outcomes) outcomes.push_back(to_json(o));
  return Json{{"d", report.d},
              {"xi", to_json(report.xi)},
              {"eta", to_json(report.eta)},
              {"initial_ccr_xi", to_json(report.initial_ccr_xi)},
              {"initial_ccr_eta", to_json(report.initial_ccr_eta)},
              {"outcomes", outcomes},
              {"bounds", to_json(report.bounds)}};
}

Json to_json(const OracleOutcome& outcome) {
  return Json{{"p", outcome.p},
              {"q", outcome.q},
              {"probability", outcome.probability},
              {"entanglement", outcome.entanglement},
              {"degenerate", outcome.degenerate},
              {"post_state", outcome.post_state ? to_json(*outcome.post_state) : Json(nullptr)}};
}

Json to_json(const OracleReport& report) {
  Json outcomes = Json::array();
  for (const OracleOutcome& o : report.outcomes) outcomes.push_back(to_json(o));
  return Json{{"d", report.d},
              {"initial_ccr_xi", to_json(report.initial_ccr_xi)},
              {"initial_ccr_eta", to_json(report.initial_ccr_eta)},
              {"initial_entanglement_xi", report.initial_entanglement_xi},
              {"initial_entanglement_eta", report.initial_entanglement_eta},
              {"avg_entanglement", report.avg_entanglement},
              {"outcomes", outcomes},
              {"max_abs_deviation", optional_double(report.max_abs_deviation)}};
}

Json to_json(const ScanConfig& config) {
  return Json{{"d", config.d},
              {"n_samples", config.n_samples},
              {"seed", config.seed},
              {"distribution", distribution_name(config.distribution)},
              {"sparse_k", config.sparse_k},
              {"tol", config.tol},
              {"include_structured",
               config.include_structured ? Json(*config.include_structured) : Json(nullptr)},
              {"threads", config.threads}};
}

Json to_json(const ScanViolation& violation) {
  return Json{{"xi", to_json(violation.xi)},
              {"eta", to_json(violation.eta)},
              {"ratio", violation.ratio},
              {"source", violation.source},
              {"oracle_confirmed", violation.oracle_confirmed},
              {"oracle_deviation", violation.oracle_deviation}};
}

Json to_json(const ScanResult& result) {
  Json violations = Json::array();
  for (const ScanViolation& v : result.violations) violations.push_back(to_json(v));
  return Json{{"config", to_json(result.config)},
              {"status", result.status()},
              {"max_ratio", result.max_ratio},
              {"argmax_xi", result.argmax_xi ? to_json(*result.argmax_xi) : Json(nullptr)},
              {"argmax_eta", result.argmax_eta ? to_json(*result.argmax_eta) : Json(nullptr)},
              {"violations", violations},
              {"saturation_count", result.saturation_count},
              {"evaluated", result.evaluated},
              {"skipped_not_applicable", result.skipped_not_applicable}};
}

Json make_document(const std::string& payload_type, const std::string& command,
                   Json payload, double duration_seconds) {
  return Json{{"schema_version", kSchemaVersion},
              {"payload_type", payload_type},
              {"command", command},
              {"generated_at", iso_utc_now()},
              {"duration_seconds", duration_seconds},
              {"payload", std::move(payload)}};
}

void write_swap_csv(std::ostream& os, const SwapReport& report) {
  os << "p,q,probability,entanglement,degenerate,per_outcome_bound\n";
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const BBMOutcome& o = report.outcomes[i];
    os << o.p << ',' << o.q << ',' << format_double(o.probability) << ','
       << format_double(o.entanglement) << ',' << (o.degenerate ? 1 : 0) << ',';
    if (report.bounds.per_outcome_bound[i]) os << format_double(*report.bounds.per_outcome_bound[i]);
    os << '\n';
  }
}

void write_qubit_scan_csv(std::ostream& os, const std::vector<QubitScanPoint>& points) {
  os << "x,y,pr_p0,pr_p1,ent_p0,ent_p1\n";
  for (const QubitScanPoint& point : points) {
    os << format_double(point.x) << ',' << format_double(point.y) << ','
       << format_double(point.pr_p0) << ',' << format_double(point.pr_p1) << ','
       << format_double(point.ent_p0) << ',' << format_double(point.ent_p1) << '\n';
  }
}

void write_bell_csv(std::ostream& os, const std::vector<PureState>& states, int d) {
  os << "p,q,index,re,im\n";
  for (std::size_t s = 0; s < states.size(); ++s) {
    const int p = static_cast<int>(s) / d;
    const int q = static_cast<int>(s) % d;
    for (std::int64_t i = 0; i < states[s].total_dim(); ++i) {
      const Complex a = states[s].amp(i);
      os << p << ',' << q << ',' << i << ',' << format_double(a.real()) << ','
         << format_double(a.imag()) << '\n';
    }
  }
}

void write_scan_csv(std::ostream& os, const ScanResult& result) {
  os << "status,max_ratio,saturation_count,evaluated,skipped_not_applicable,violations\n";
  os << result.status() << ',' << format_double(result.max_ratio) << ','
     << result.saturation_count << ',' << result.evaluated << ','
     << result.skipped_not_applicable << ',' << result.violations.size() << '\n';
}

}  // namespace qswap
