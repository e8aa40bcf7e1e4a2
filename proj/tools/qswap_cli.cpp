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

//
// qswap - exact simulation and analysis of entanglement swapping on
// partially entangled qudit pairs.
//
// Subcommands:
//   bell         print generalized Bell states and their Gram deviation
//   swap         run the full protocol on two coefficient vectors
//   scan-qubit   parameter sweep of the two-parameter qubit family
//   verify       cross-check the analytic pipeline against brute force
//   conjecture   sample-based test of the improved-bound hypothesis
//
// Exit codes: 0 success/finding, 2 usage, 3 invalid input state, 4 I/O,
// 5 verification regression.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qswap/conjecture_lab.hpp"
#include "qswap/oracle.hpp"
#include "qswap/report_io.hpp"
#include "qswap/swap_protocol.hpp"

namespace {

using namespace qswap;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitIo = 4;
constexpr int kExitRegression = 5;

//! |norm^2 - 1| above this is treated as a malformed coefficient list
//! rather than hand-typed rounding drift.
constexpr double kNormRejectTol = 1e-3;

struct GlobalOpts {
  std::string format = "pretty";
  std::string out;
  double tol = kBoundTol;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join_command(int argc, char** argv) {
  std::string cmd = "qswap";
  for (int i = 1; i < argc; ++i) {
    cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

//! Parse one coefficient: a real, or re+imj / re-imj / imj.
Complex parse_complex(std::string token) {
  std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
  if (token.empty()) throw UsageError("empty coefficient");

  auto to_double = [](const std::string& text) {
    if (text.empty() || text == "+" || text == "-") {
      // bare sign in front of j means +/- 1
      return text == "-" ? -1.0 : 1.0;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coefficient '" + text + "'");
    }
    if (used != text.size()) throw UsageError("cannot parse coefficient '" + text + "'");
    return value;
  };

  if (token.back() != 'j') {
    return Complex{to_double(token), 0.0};
  }
  const std::string body = token.substr(0, token.size() - 1);
  // split at the last +/- that is not an exponent sign and not leading
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      return Complex{to_double(body.substr(0, pos)), to_double(body.substr(pos))};
    }
  }
  return Complex{0.0, to_double(body)};
}

SchmidtCoeffs parse_coeffs(const std::string& list, int dim, const char* name) {
  std::vector<Complex> coeffs;
  std::stringstream stream(list);
  std::string token;
  while (std::getline(stream, token, ',')) coeffs.push_back(parse_complex(token));
  if (static_cast<int>(coeffs.size()) != dim) {
    throw UsageError(std::string(name) + " needs exactly " + std::to_string(dim) +
                     " comma-separated coefficients");
  }
  double n2 = 0.0;
  for (const Complex& c : coeffs) n2 += std::norm(c);
  if (n2 <= 1e-12) {
    throw InvalidStateError(std::string(name) + " is a zero vector");
  }
  if (std::abs(n2 - 1.0) > kNormRejectTol) {
    throw UsageError(std::string(name) + " is far from normalized (|c|^2 sums to " +
                     format_double(n2) + ")");
  }
  if (std::abs(n2 - 1.0) > 1e-12) {
    std::cerr << "warning: " << name << " renormalized (|c|^2 summed to " << format_double(n2)
              << ")\n";
  }
  return SchmidtCoeffs::make(std::move(coeffs), SchmidtCoeffs::Normalize::kAuto);
}

int write_output(const GlobalOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << opts.out << "' for writing\n";
    return kExitIo;
  }
  file << text;
  if (!file.good()) {
    std::cerr << "error: failed writing '" << opts.out << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// bell

struct BellArgs {
  int dim = 2;
  int p = -1;
  int q = -1;
};

int run_bell(const BellArgs& args, const GlobalOpts& opts, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  if ((args.p >= 0) != (args.q >= 0)) {
    throw UsageError("--p and --q must be given together");
  }
  const QuditDim d(args.dim);

  std::vector<PureState> states;
  std::vector<std::pair<int, int>> labels;
  if (args.p >= 0) {
    states.push_back(bell_state(BellIndex(args.p, args.q, d)));
    labels.emplace_back(args.p, args.q);
  } else {
    states = bell_basis(d);
    for (int p = 0; p < args.dim; ++p) {
      for (int q = 0; q < args.dim; ++q) labels.emplace_back(p, q);
    }
  }

  // max |<a|b> - delta_ab| over the emitted family
  double gram_dev = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      const Complex g = inner(states[a], states[b]);
      gram_dev = std::max(gram_dev, std::abs(g - (a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0})));
    }
  }

  if (opts.format == "csv") {
    std::ostringstream os;
    if (args.p >= 0) {
      os << "p,q,index,re,im\n";
      for (std::int64_t i = 0; i < states[0].total_dim(); ++i) {
        os << args.p << ',' << args.q << ',' << i << ',' << format_double(states[0].amp(i).real())
           << ',' << format_double(states[0].amp(i).imag()) << '\n';
      }
    } else {
      write_bell_csv(os, states, args.dim);
    }
    return write_output(opts, os.str());
  }
  if (opts.format == "json") {
    Json payload;
    payload["d"] = args.dim;
    payload["max_gram_deviation"] = gram_dev;
    Json arr = Json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
      arr.push_back(Json{{"p", labels[i].first},
                         {"q", labels[i].second},
                         {"amplitudes", to_json(states[i])}});
    }
    payload["states"] = arr;
    return write_output(
        opts, dump_json(make_document("bell_states", command, payload, seconds_since(start))) + "\n");
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << "|Phi_" << labels[i].first << labels[i].second << "> =";
    for (std::int64_t k = 0; k < states[i].total_dim(); ++k) {
      const Complex a = states[i].amp(k);
      if (std::abs(a) < 1e-15) continue;
      os << "  (" << format_double(a.real()) << ", " << format_double(a.imag()) << ")|";
      for (int digit : states[i].digits_of(k)) os << digit;
      os << '>';
    }
    os << '\n';
  }
  os << "max Gram deviation from identity: " << format_double(gram_dev) << '\n';
  return write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// swap

struct SwapArgs {
  int dim = 2;
  std::string xi;
  std::string eta;
};

void pretty_ccr(std::ostream& os, const char* label, const CCRBreakdown& ccr) {
  os << label << ": C = " << format_double(ccr.coherence) << ", P = "
     << format_double(ccr.predictability) << ", E = " << format_double(ccr.entanglement)
     << ", sum = " << format_double(ccr.sum) << '\n';
}

int run_swap(const SwapArgs& args, const GlobalOpts& opts, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  const SchmidtCoeffs xi = parse_coeffs(args.xi, args.dim, "--xi");
  const SchmidtCoeffs eta = parse_coeffs(args.eta, args.dim, "--eta");
  const SwapReport report = run_protocol(xi, eta, opts.tol);

  if (opts.format == "json") {
    return write_output(opts, dump_json(make_document("swap_report", command, to_json(report),
                                                      seconds_since(start))) + "\n");
  }
  if (opts.format == "csv") {
    std::ostringstream os;
    write_swap_csv(os, report);
    return write_output(opts, os.str());
  }

  std::ostringstream os;
  os << "entanglement swapping, d = " << report.d << "\n";
  pretty_ccr(os, "pair AC", report.initial_ccr_xi);
  pretty_ccr(os, "pair C'B", report.initial_ccr_eta);
  os << "outcomes (p, q): probability / post-measurement entanglement\n";
  for (const BBMOutcome& o : report.outcomes) {
    os << "  (" << o.p << ", " << o.q << "): " << format_double(o.probability) << " / "
       << format_double(o.entanglement) << (o.degenerate ? "  [degenerate]" : "") << '\n';
  }
  const BoundReport& b = report.bounds;
  os << "average distributed entanglement: " << format_double(b.avg_entanglement) << '\n';
  os << "bounds: E_xi = " << format_double(b.bound_xi) << (b.xi_bound_holds ? " ok" : " VIOLATED")
     << ", E_eta = " << format_double(b.bound_eta) << (b.eta_bound_holds ? " ok" : " VIOLATED")
     << ", product = " << format_double(b.bound_product)
     << (b.product_bound_holds ? " ok" : " VIOLATED") << '\n';
  os << "per-outcome bound: "
     << (b.per_outcome_applicable ? (b.per_outcome_bounds_hold ? "ok" : "VIOLATED")
                                  : "not applicable")
     << '\n';
  os << "improved-bound hypothesis product/(d-1) = " << format_double(b.bound_conjecture) << ": "
     << (b.conjecture_holds ? "HOLDS" : "VIOLATED") << " on this input\n";
  return write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// scan-qubit

struct ScanQubitArgs {
  int nx = 101;
  int ny = 101;
};

int run_scan_qubit(const ScanQubitArgs& args, const GlobalOpts& opts, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  if (args.nx < 2 || args.ny < 2) {
    throw UsageError("--nx and --ny must be at least 2");
  }
  const std::vector<QubitScanPoint> points = qubit_scan(unit_grid(args.nx), unit_grid(args.ny));

  if (opts.format == "json") {
    Json arr = Json::array();
    for (const QubitScanPoint& pt : points) {
      arr.push_back(Json{{"x", pt.x},
                         {"y", pt.y},
                         {"pr_p0", pt.pr_p0},
                         {"pr_p1", pt.pr_p1},
                         {"ent_p0", pt.ent_p0},
                         {"ent_p1", pt.ent_p1},
                         {"degenerate_p0", pt.degenerate_p0},
                         {"degenerate_p1", pt.degenerate_p1}});
    }
    Json payload{{"nx", args.nx}, {"ny", args.ny}, {"points", arr}};
    return write_output(opts, dump_json(make_document("qubit_scan", command, payload,
                                                      seconds_since(start))) + "\n");
  }
  std::ostringstream os;
  write_qubit_scan_csv(os, points);
  return write_output(opts, os.str());
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  int dim = 2;
  int samples = 100;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args, const GlobalOpts& opts, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t total = static_cast<std::int64_t>(args.dim) * args.dim * args.dim * args.dim;
  if (args.dim < 2 || total > kMaxRegisterDim) {
    throw UsageError("dimension out of range: d^4 must stay within " +
                     std::to_string(kMaxRegisterDim));
  }
  if (args.samples < 1) throw UsageError("--samples must be positive");

  double max_dev = 0.0;
  for (int i = 0; i < args.samples; ++i) {
    const SchmidtCoeffs xi = sample_coeffs(QuditDim(args.dim), args.seed,
                                           static_cast<std::uint64_t>(2 * i),
                                           SampleDistribution::kUniformSimplex);
    const SchmidtCoeffs eta = sample_coeffs(QuditDim(args.dim), args.seed,
                                            static_cast<std::uint64_t>(2 * i + 1),
                                            SampleDistribution::kUniformSimplex);
    max_dev = std::max(max_dev, compare(xi, eta));
  }
  const bool pass = max_dev < 1e-9;

  if (opts.format == "json") {
    Json payload{{"d", args.dim},
                 {"samples", args.samples},
                 {"seed", args.seed},
                 {"max_deviation", max_dev},
                 {"threshold", 1e-9},
                 {"pass", pass}};
    const int rc = write_output(opts, dump_json(make_document("verify", command, payload,
                                                              seconds_since(start))) + "\n");
    if (rc != kExitOk) return rc;
  } else {
    std::ostringstream os;
    os << "verify: d = " << args.dim << ", samples = " << args.samples << ", seed = " << args.seed
       << "\nmax |analytic - brute-force| = " << format_double(max_dev) << " ("
       << (pass ? "PASS" : "FAIL") << ", threshold 1e-09)\n";
    const int rc = write_output(opts, os.str());
    if (rc != kExitOk) return rc;
  }
  return pass ? kExitOk : kExitRegression;
}

// ---------------------------------------------------------------------------
// conjecture

struct ConjectureArgs {
  int dim = 2;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  bool structured = false;
  bool no_structured = false;
  std::string distribution = "uniform";
  int sparse_k = 2;
  int threads = 0;
};

int run_conjecture(const ConjectureArgs& args, const GlobalOpts& opts, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  ScanConfig config;
  config.d = args.dim;
  config.n_samples = args.samples;
  config.seed = args.seed;
  config.tol = opts.tol;
  config.sparse_k = args.sparse_k;
  config.threads = args.threads;
  if (args.distribution == "uniform") {
    config.distribution = SampleDistribution::kUniformSimplex;
  } else if (args.distribution == "sparse") {
    config.distribution = SampleDistribution::kSparseSupport;
  } else if (args.distribution == "structured") {
    config.distribution = SampleDistribution::kStructuredPeriodic;
  } else {
    throw UsageError("--distribution must be uniform, sparse or structured");
  }
  if (args.structured && args.no_structured) {
    throw UsageError("--structured and --no-structured conflict");
  }
  if (args.structured) config.include_structured = true;
  if (args.no_structured) config.include_structured = false;

  ScanResult result;
  try {
    result = scan(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (opts.format == "json") {
    return write_output(opts, dump_json(make_document("conjecture_scan", command, to_json(result),
                                                      seconds_since(start))) + "\n");
  }
  if (opts.format == "csv") {
    std::ostringstream os;
    write_scan_csv(os, result);
    return write_output(opts, os.str());
  }

  std::ostringstream os;
  os << "improved-bound hypothesis scan: d = " << config.d << ", samples = " << config.n_samples
     << ", seed = " << config.seed << "\nstatus: " << result.status()
     << "\nmax ratio: " << format_double(result.max_ratio) << "\nevaluated: " << result.evaluated
     << ", saturated: " << result.saturation_count
     << ", not applicable: " << result.skipped_not_applicable
     << "\nviolations: " << result.violations.size() << '\n';
  for (const ScanViolation& v : result.violations) {
    os << "  ratio " << format_double(v.ratio) << " at " << v.source
       << (v.oracle_confirmed ? " (oracle-confirmed)" : " (NUMERICALLY SUSPECT)") << '\n';
  }
  return write_output(opts, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact entanglement-swapping simulator and bound analyzer for qudit pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "write output to a file instead of stdout");
  app.add_option("--tol", opts.tol, "absolute tolerance for bound flags")->capture_default_str();

  BellArgs bell_args;
  CLI::App* bell_cmd = app.add_subcommand("bell", "emit generalized Bell states");
  bell_cmd->add_option("--dim", bell_args.dim, "qudit dimension")->required();
  bell_cmd->add_option("--p", bell_args.p, "shift index");
  bell_cmd->add_option("--q", bell_args.q, "phase index");

  SwapArgs swap_args;
  CLI::App* swap_cmd = app.add_subcommand("swap", "run the protocol on two coefficient vectors");
  swap_cmd->add_option("--dim", swap_args.dim, "qudit dimension")->required();
  swap_cmd->add_option("--xi", swap_args.xi, "coefficients of pair AC (comma separated)")
      ->required();
  swap_cmd->add_option("--eta", swap_args.eta, "coefficients of pair C'B (comma separated)")
      ->required();

  ScanQubitArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand("scan-qubit", "sweep the two-parameter qubit family");
  scan_cmd->add_option("--nx", scan_args.nx, "grid points along x")->capture_default_str();
  scan_cmd->add_option("--ny", scan_args.ny, "grid points along y")->capture_default_str();

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "compare the analytic pipeline against brute force");
  verify_cmd->add_option("--dim", verify_args.dim, "qudit dimension")->required();
  verify_cmd->add_option("--samples", verify_args.samples, "number of random input pairs")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed")->capture_default_str();

  ConjectureArgs conj_args;
  CLI::App* conj_cmd = app.add_subcommand("conjecture", "scan the improved-bound hypothesis");
  conj_cmd->add_option("--dim", conj_args.dim, "qudit dimension")->required();
  conj_cmd->add_option("--samples", conj_args.samples, "number of sampled input pairs")
      ->capture_default_str();
  conj_cmd->add_option("--seed", conj_args.seed, "RNG seed")->capture_default_str();
  conj_cmd->add_flag("--structured", conj_args.structured,
                     "force the structured-periodic cross product (default for d >= 4)");
  conj_cmd->add_flag("--no-structured", conj_args.no_structured,
                     "skip the structured-periodic cross product");
  conj_cmd->add_option("--distribution", conj_args.distribution,
                       "sampling family: uniform, sparse or structured")
      ->capture_default_str();
  conj_cmd->add_option("--sparse-k", conj_args.sparse_k, "support size for sparse sampling")
      ->capture_default_str();
  conj_cmd->add_option("--threads", conj_args.threads,
                       "worker threads (0 = QSWAP_THREADS or hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string command = join_command(argc, argv);
  try {
    if (*bell_cmd) return run_bell(bell_args, opts, command);
    if (*swap_cmd) return run_swap(swap_args, opts, command);
    if (*scan_cmd) return run_scan_qubit(scan_args, opts, command);
    if (*verify_cmd) return run_verify(verify_args, opts, command);
    if (*conj_cmd) return run_conjecture(conj_args, opts, command);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidStateError& e) {
    std::cerr << "invalid input state: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
