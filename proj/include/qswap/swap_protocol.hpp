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

#ifndef QSWAP_SWAP_PROTOCOL_HPP
#define QSWAP_SWAP_PROTOCOL_HPP

#include <optional>
#include <vector>

#include "qswap/ccr.hpp"
#include "qswap/gates.hpp"
#include "qswap/tensor_core.hpp"

namespace qswap {

//! Probability below which a measurement outcome counts as degenerate:
//! no post-measurement state is defined for it.
inline constexpr double kDegenerateTol = 1e-12;

//! Default absolute tolerance for bound satisfied/violated flags.
inline constexpr double kBoundTol = 1e-9;

//! Schmidt-form coefficient vector c defining one partially entangled pair
//! sum_j c_j |jj>. Coefficients may be complex; sum_j |c_j|^2 = 1.
class SchmidtCoeffs {
 public:
  enum class Normalize { kRequire, kAuto };

  //! Throws std::invalid_argument on fewer than 2 coefficients, a zero
  //! vector, or (with kRequire) a norm off by more than 1e-12.
  static SchmidtCoeffs make(std::vector<Complex> coeffs,
                            Normalize mode = Normalize::kRequire);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  double modulus(int j) const;
  double modulus2(int j) const;

  //! Closed-form initial entanglement sum_{j!=k} |c_j c_k|.
  double entanglement_l1() const;
  //! Closed-form local predictability d - 1 - entanglement_l1().
  double predictability_l1() const;

  //! The pair state sum_j c_j |jj> on a 2-slot register.
  PureState pair_state() const;

 private:
  explicit SchmidtCoeffs(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Complex> coeffs_;
};

//! One Bell-measurement outcome: its probability, the normalized
//! post-measurement state of the distant pair (absent when degenerate),
//! and that state's l1 entanglement.
struct BBMOutcome {
  int p;
  int q;
  double probability;
  std::optional<PureState> post_state;
  double entanglement;
  bool degenerate;
};

//! Evaluation of every bound on the distributed entanglement.
//!
//! bound_eta / bound_xi are the single-pair bounds (initial entanglement of
//! either input pair), bound_product their product, and bound_conjecture
//! product / (d - 1) - the improved-bound hypothesis, which is reported but
//! never asserted. per_outcome_bound lists E_xi*E_eta / (Pr * d) for each
//! outcome, empty-optional where not applicable (degenerate outcome or zero
//! initial-entanglement product).
struct BoundReport {
  double avg_entanglement;
  double bound_xi;
  double bound_eta;
  double bound_product;
  double bound_conjecture;
  std::vector<std::optional<double>> per_outcome_bound;

  bool xi_bound_holds;
  bool eta_bound_holds;
  bool product_bound_holds;
  bool per_outcome_bounds_hold;
  bool per_outcome_applicable;
  bool conjecture_holds;  // hypothesis status, not an invariant

  double tol;
};

//! Complete record of one protocol run: inputs, initial complementarity
//! breakdowns, all d^2 outcomes (index p*d + q) and the bound evaluation.
struct SwapReport {
  int d;
  SchmidtCoeffs xi;
  SchmidtCoeffs eta;
  CCRBreakdown initial_ccr_xi;
  CCRBreakdown initial_ccr_eta;
  std::vector<BBMOutcome> outcomes;
  BoundReport bounds;
};

//! One grid point of the qubit parameter scan. Probabilities are the
//! per-outcome values Pr(p, q), which do not depend on q.
struct QubitScanPoint {
  double x;
  double y;
  double pr_p0;
  double pr_p1;
  double ent_p0;
  double ent_p1;
  bool degenerate_p0;
  bool degenerate_p1;
};

//! Four-qudit register |Psi> on slots (A, B, C, C'): amplitude c_j d_k on
//! |j k j k>, i.e. pair AC tensor pair C'B with slots regrouped.
PureState initial_state(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

//! Probability that the Bell measurement on (C, C') yields outcome (p, q):
//! (1/d) sum_k |c_{p (+) k}|^2 |d_k|^2. Independent of q.
double outcome_probability(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                           const BellIndex& idx);

//! Normalized post-measurement state of (A, B) for a non-degenerate
//! outcome; supported on |p (+) k, k> only. Throws std::domain_error on a
//! degenerate outcome.
PureState post_bbm_state(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                         const BellIndex& idx);

//! l1 entanglement of the post-measurement state:
//! (1/(Pr*d)) sum_{j!=k} |c_{p (+) j} c_{p (+) k} d_j d_k|.
//! Returns 0 for a degenerate outcome. Independent of q.
double post_bbm_entanglement(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                             const BellIndex& idx);

//! Probability-weighted entanglement over all d^2 outcomes, in closed form
//! sum_p sum_{j!=k} |c_{p (+) j} c_{p (+) k} d_j d_k|.
double average_entanglement(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta);

//! Evaluate every bound at the given absolute tolerance.
BoundReport evaluate_bounds(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                            double tol = kBoundTol);

//! Run the full pipeline and assemble the report.
SwapReport run_protocol(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                        double tol = kBoundTol);

//! Scan the two-parameter qubit family xi = (sqrt(x), sqrt(1-x)),
//! eta = (sqrt(y), sqrt(1-y)) over the given grid values (all in [0, 1]).
//! Points are emitted row-major: x outer, y inner.
std::vector<QubitScanPoint> qubit_scan(const std::vector<double>& x_grid,
                                       const std::vector<double>& y_grid);

//! Evenly spaced grid of n values covering [0, 1] inclusive.
std::vector<double> unit_grid(int n);

}  // namespace qswap

#endif  // QSWAP_SWAP_PROTOCOL_HPP
