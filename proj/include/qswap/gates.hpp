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

#ifndef QSWAP_GATES_HPP
#define QSWAP_GATES_HPP

#include <vector>

#include "qswap/tensor_core.hpp"

namespace qswap {

//! Dense unitary matrix acting on a register. U†U = I within 1e-12.
class UnitaryGate {
 public:
  //! Checked factory: throws std::invalid_argument unless U†U = I within tol.
  static UnitaryGate from_matrix(Matrix entries, double tol = kNormTol);

  const Matrix& matrix() const { return entries_; }
  std::int64_t dim() const { return entries_.rows(); }

 private:
  explicit UnitaryGate(Matrix entries) : entries_(std::move(entries)) {}

  Matrix entries_;
};

//! Index (p, q) of a generalized Bell state in dimension d; 0 <= p, q < d.
class BellIndex {
 public:
  BellIndex(int p, int q, QuditDim d);

  int p() const { return p_; }
  int q() const { return q_; }
  QuditDim dim() const { return d_; }

 private:
  int p_;
  int q_;
  QuditDim d_;
};

//! Table of the d-th roots of unity: entry r is exp(2*pi*i*r/d).
//! Powers are always looked up by exponent mod d, so phases never
//! accumulate error; quarter-turn phases (1, i, -1, -i) are exact.
std::vector<Complex> root_of_unity_table(QuditDim d);

//! Discrete Fourier gate: entry (j, k) = omega^{jk} / sqrt(d).
UnitaryGate fourier(QuditDim d);

//! Cyclic shift by j: maps |k> to |(j + k) mod d>.
UnitaryGate shift(QuditDim d, int j);

//! Controlled shift on a 2-slot register: the target slot is shifted by the
//! control slot's digit, |c>|t> -> |c>|c (+) t> (and the mirrored wiring when
//! control_slot = 1). Both gates are d^2 x d^2 permutation matrices.
UnitaryGate controlled_shift(QuditDim d, int control_slot, int target_slot);

//! Kronecker product of two gates.
UnitaryGate kron(const UnitaryGate& a, const UnitaryGate& b);

UnitaryGate identity_gate(std::int64_t dim);

//! Apply a gate to a whole register (gate dim must equal the register dim).
PureState apply(const UnitaryGate& gate, const PureState& state);

//! Generalized Bell state in closed form:
//! (1/sqrt(d)) * sum_j omega^{jq} |p (+) j> (x) |j>.
PureState bell_state(const BellIndex& idx);

//! The same state prepared by circuit: controlled shift (control on slot 1)
//! after a Fourier gate on slot 1, applied to |p q>. Matches bell_state
//! entrywise, global phase included.
PureState bell_state_via_circuit(const BellIndex& idx);

//! All d^2 Bell states ordered with index p*d + q. Orthonormal and complete.
std::vector<PureState> bell_basis(QuditDim d);

}  // namespace qswap

#endif  // QSWAP_GATES_HPP
