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

#ifndef QSWAP_TENSOR_CORE_HPP
#define QSWAP_TENSOR_CORE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qswap {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

//! Default tolerance for norm / hermiticity checks.
inline constexpr double kNormTol = 1e-12;

//! Largest total Hilbert-space dimension a register may have (dense storage).
inline constexpr std::int64_t kMaxRegisterDim = 1'000'000;

//! Dimension of a single qudit. Always >= 2.
class QuditDim {
 public:
  explicit QuditDim(int d);

  int value() const { return d_; }

  friend bool operator==(QuditDim a, QuditDim b) { return a.d_ == b.d_; }
  friend bool operator!=(QuditDim a, QuditDim b) { return a.d_ != b.d_; }

 private:
  int d_;
};

//! Dense complex-amplitude state on a register of equal-dimension qudits.
//!
//! Slot 0 is the most significant digit of the amplitude index (row-major),
//! so tensor products are plain Kronecker products. States built through
//! make() are normalized; unnormalized vectors only appear inside a
//! Projection, which carries the squared norm alongside.
class PureState {
 public:
  enum class Normalize { kRequire, kAuto };

  //! Checked factory. Throws std::invalid_argument on a zero vector, a
  //! length mismatch, a mixed-dimension register or an oversized register.
  //! With Normalize::kRequire the squared norm must be 1 within 1e-12;
  //! with Normalize::kAuto any nonzero vector is rescaled to unit norm.
  static PureState make(Vector amps, std::vector<QuditDim> dims,
                        Normalize mode = Normalize::kRequire);

  //! Convenience for a register of n_slots qudits of equal dimension d.
  static PureState make(Vector amps, QuditDim d, int n_slots,
                        Normalize mode = Normalize::kRequire);

  //! Computational basis state |digits[0], digits[1], ...> of dimension d.
  static PureState basis(const std::vector<int>& digits, QuditDim d);

  //! Unchecked wrap of an (often unnormalized) amplitude vector. Internal
  //! plumbing for projections and tensor products; layout is still checked.
  static PureState raw(Vector amps, std::vector<QuditDim> dims);

  int slots() const { return static_cast<int>(dims_.size()); }
  const std::vector<QuditDim>& dims() const { return dims_; }
  //! Qudit dimension shared by all slots. Requires a nonempty register.
  QuditDim qudit_dim() const;
  std::int64_t total_dim() const { return amps_.size(); }
  const Vector& amps() const { return amps_; }

  double squared_norm() const { return amps_.squaredNorm(); }
  bool is_normalized(double tol = kNormTol) const;

  Complex amp(std::int64_t index) const { return amps_(index); }

  //! Row-major index of a digit tuple (slot 0 most significant).
  std::int64_t index_of(const std::vector<int>& digits) const;
  //! Digit tuple of a row-major index.
  std::vector<int> digits_of(std::int64_t index) const;

 private:
  PureState(Vector amps, std::vector<QuditDim> dims);

  Vector amps_;
  std::vector<QuditDim> dims_;
};

//! Reduced density operator on one or more kept slots.
//!
//! Entries are Hermitian by construction; unit trace and positive
//! semidefiniteness hold whenever the traced state was normalized and can
//! be checked explicitly via is_valid_state().
class DensityMatrix {
 public:
  //! Checked factory: matrix must be square, sized to the register and
  //! Hermitian within herm_tol. Trace/PSD are not enforced here so the
  //! entanglement guard for malformed inputs stays reachable.
  static DensityMatrix from_matrix(Matrix entries, std::vector<QuditDim> dims,
                                   double herm_tol = kNormTol);

  const Matrix& matrix() const { return entries_; }
  const std::vector<QuditDim>& dims() const { return dims_; }
  QuditDim qudit_dim() const;
  std::int64_t dim() const { return entries_.rows(); }

  double trace_real() const { return entries_.trace().real(); }
  //! Smallest eigenvalue (Hermitian solve); >= -1e-10 for physical states.
  double min_eigenvalue() const;
  bool is_valid_state(double trace_tol = kNormTol,
                      double eig_tol = 1e-10) const;

 private:
  DensityMatrix(Matrix entries, std::vector<QuditDim> dims);

  Matrix entries_;
  std::vector<QuditDim> dims_;
};

//! Result of projecting a register onto a target state on selected slots:
//! the unnormalized residual on the remaining slots plus its squared norm.
struct Projection {
  PureState residual;
  double weight;

  //! Residual rescaled to unit norm. Throws std::domain_error when the
  //! outcome is degenerate (weight <= tol).
  PureState normalized(double tol = 1e-12) const;
};

//! Kronecker product. dims = a.dims ++ b.dims; norm is multiplicative.
PureState tensor(const PureState& a, const PureState& b);

//! Trace out every slot not listed in keep. keep is a set of slot indices;
//! the reduced operator is laid out over the kept slots in ascending order.
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);

//! Apply (I_rest (x) |target><target|_slots) to a normalized state.
//! slots[i] is the register slot matched against slot i of target.
Projection project(const PureState& state, const PureState& target,
                   const std::vector<int>& slots);

//! Hermitian inner product <a|b>; conjugate-linear in a.
Complex inner(const PureState& a, const PureState& b);

//! Reorder register slots: slot i of the result is slot source_of[i] of the
//! input. source_of must be a permutation of [0, slots).
PureState permute_slots(const PureState& state, const std::vector<int>& source_of);

}  // namespace qswap

#endif  // QSWAP_TENSOR_CORE_HPP
