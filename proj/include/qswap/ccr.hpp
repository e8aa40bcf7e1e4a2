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

#ifndef QSWAP_CCR_HPP
#define QSWAP_CCR_HPP

#include <utility>

#include "qswap/tensor_core.hpp"

namespace qswap {

//! Normalized complementarity triple: each component divided by d - 1,
//! so the three parts sum to 1 for a pure bipartite state.
struct NormalizedCCR {
  double coherence;
  double predictability;
  double entanglement;
  double sum;
};

//! l1-norm complementarity breakdown of one side of a bipartite pure state.
//! For a normalized state, coherence + predictability + entanglement equals
//! d - 1 (within rounding), which is what sum records.
struct CCRBreakdown {
  double coherence;
  double predictability;
  double entanglement;
  int d;
  double sum;

  NormalizedCCR normalized() const;
};

//! l1-norm coherence: sum of moduli of the off-diagonal entries.
double coherence_l1(const DensityMatrix& rho);

//! l1-norm predictability: d - 1 - sum_{j!=k} sqrt(rho_jj * rho_kk).
//! Lies in [0, d-1]; tiny negative rounding is clamped to 0.
double predictability_l1(const DensityMatrix& rho);

//! l1-norm entanglement evaluated on a given reduced state:
//! sum_{j!=k} (sqrt(rho_jj * rho_kk) - |rho_jk|) in the computational basis.
//! A result below -1e-10 signals a non-state input and throws
//! std::domain_error; results in [-1e-10, 0) clamp to 0.
double entanglement_l1(const DensityMatrix& rho);

//! l1-norm entanglement of a bipartite pure state, computed from the
//! reduced density matrix of the chosen side (slot 0 or 1).
double entanglement_l1(const PureState& bipartite, int side);

//! Full complementarity breakdown of one side of a bipartite pure state.
CCRBreakdown ccr_check(const PureState& bipartite, int side);

//! Breakdowns of both sides in one call (the local parts may differ; the
//! per-side sums are both d - 1).
std::pair<CCRBreakdown, CCRBreakdown> ccr_both_sides(const PureState& bipartite);

}  // namespace qswap

#endif  // QSWAP_CCR_HPP
