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

#ifndef QSWAP_CONJECTURE_LAB_HPP
#define QSWAP_CONJECTURE_LAB_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qswap/swap_protocol.hpp"

namespace qswap {

//! Families of Schmidt coefficient vectors the scanner can draw from.
//! Sampled vectors carry nonnegative real coefficients; every scanned
//! quantity depends on moduli only, so phases would be inert anyway.
enum class SampleDistribution {
  kUniformSimplex,      //!< squared moduli flat on the probability simplex
  kSparseSupport,       //!< a random k-subset of positions, flat simplex on it
  kStructuredPeriodic,  //!< equal weight 1/sqrt(k) on {0, s, 2s, ...}, k = d/s
};

struct ScanConfig {
  int d = 2;
  std::int64_t n_samples = 1000;
  std::uint64_t seed = 0;
  SampleDistribution distribution = SampleDistribution::kUniformSimplex;
  int sparse_k = 2;  // support size for kSparseSupport; 2 <= k <= d
  double tol = 1e-9;
  //! Also evaluate every pair from the structured-periodic family.
  //! Unset means the default policy: included for d >= 4.
  std::optional<bool> include_structured;
  int threads = 0;  // 0 = QSWAP_THREADS env var, else hardware concurrency
};

//! A ratio above 1 + tol, re-verified through the brute-force path before
//! being reported. oracle_confirmed is false only when the analytic and
//! brute-force pipelines disagreed (deviation >= 1e-9), which marks the
//! entry as numerically suspect rather than a finding.
struct ScanViolation {
  SchmidtCoeffs xi;
  SchmidtCoeffs eta;
  double ratio;
  std::string source;  // "sample:<i>" or "structured:<i>,<j>"
  bool oracle_confirmed;
  double oracle_deviation;
};

struct ScanResult {
  ScanConfig config;
  double max_ratio = 0.0;
  std::optional<SchmidtCoeffs> argmax_xi;
  std::optional<SchmidtCoeffs> argmax_eta;
  std::vector<ScanViolation> violations;
  std::int64_t saturation_count = 0;  // ratios within tol of 1
  std::int64_t evaluated = 0;
  std::int64_t skipped_not_applicable = 0;  // zero initial-entanglement pairs

  //! "CONFIRMED-ON-SAMPLE" when no violation was found, else "VIOLATED".
  std::string status() const;
};

//! Per-offset view of the inequality behind the improved-bound hypothesis.
//! lhs(delta) = sum_p |c_p c_{p (+) delta}| depends on (j, k) only through
//! delta = (k - j) mod d; rhs = sum_{l != m} |c_l c_m| / (d - 1).
struct PerIndexRow {
  int delta;
  double lhs;
  double rhs;
  bool flagged;  // lhs > rhs + tol
};

//! Deterministic per-sample RNG stream: distinct (seed, index) pairs give
//! independent generators, so evaluation order cannot change a scan.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

//! The deterministic structured-periodic family: one member per stride s
//! dividing d (ascending s), with equal weight on {0, s, 2s, ...}.
std::vector<SchmidtCoeffs> structured_periodic_family(QuditDim d);

//! Draw one coefficient vector from the given family. For the structured
//! family, index selects the member (mod family size).
SchmidtCoeffs sample_coeffs(QuditDim d, std::uint64_t seed, std::uint64_t index,
                            SampleDistribution distribution, int sparse_k = 2);

//! avg_entanglement * (d - 1) / (E_xi * E_eta); the hypothesis holds at a
//! point iff the ratio is <= 1. Throws std::domain_error when the initial
//! entanglement product is below 1e-12 (ratio not applicable).
double ratio(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

//! Run a full scan: n_samples random pairs plus (by default for d >= 4)
//! the structured-periodic cross product. Deterministic given the config,
//! regardless of thread count.
ScanResult scan(const ScanConfig& config);

//! Evaluate the per-offset inequality table for one coefficient vector.
std::vector<PerIndexRow> per_index_inequality_check(const SchmidtCoeffs& c,
                                                    double tol = 1e-9);

}  // namespace qswap

#endif  // QSWAP_CONJECTURE_LAB_HPP
