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

#ifndef QSWAP_ORACLE_HPP
#define QSWAP_ORACLE_HPP

#include <optional>
#include <vector>

#include "qswap/ccr.hpp"
#include "qswap/swap_protocol.hpp"

namespace qswap {

//! One Bell outcome re-derived by direct projection of the four-qudit
//! statevector. Mirrors BBMOutcome but is produced without any closed-form
//! probability or entanglement expression.
struct OracleOutcome {
  int p;
  int q;
  double probability;
  std::optional<PureState> post_state;
  double entanglement;
  bool degenerate;
};

//! Brute-force counterpart of SwapReport. Every quantity comes from the
//! literal statevector: projection weights, residual states, reduced
//! density matrices. max_abs_deviation is only present after a comparison
//! against the analytic pipeline.
struct OracleReport {
  int d;
  std::vector<OracleOutcome> outcomes;
  CCRBreakdown initial_ccr_xi;
  CCRBreakdown initial_ccr_eta;
  double initial_entanglement_xi;
  double initial_entanglement_eta;
  double avg_entanglement;
  std::optional<double> max_abs_deviation;
};

//! Build tensor(|xi>_AC, |eta>_C'B), regroup slots to (A, B, C, C'), and
//! project onto every circuit-built Bell state of (C, C'). Shares only
//! tensor_core and gates with the analytic path. Throws
//! std::invalid_argument when d^4 exceeds the register cap.
OracleReport simulate_full(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

//! Run both pipelines and return the largest absolute discrepancy across
//! all d^2 probabilities, all entanglements (initial and per-outcome) and
//! the average.
double compare(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

//! compare(), but returning the full oracle report with the deviation set.
OracleReport compare_report(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

}  // namespace qswap

#endif  // QSWAP_ORACLE_HPP
