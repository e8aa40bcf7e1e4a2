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

#include "qswap/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qswap {

namespace {

std::int64_t product_dim(const std::vector<QuditDim>& dims) {
  std::int64_t total = 1;
  for (QuditDim d : dims) {
    total *= d.value();
    if (total > kMaxRegisterDim) {
      throw std::invalid_argument("register exceeds the dense-storage cap of " +
                                  std::to_string(kMaxRegisterDim));
    }
  }
  return total;
}

void check_homogeneous(const std::vector<QuditDim>& dims) {
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] != dims[0]) {
      throw std::invalid_argument("mixed-dimension registers are not supported");
    }
  }
}

}  // namespace

QuditDim::QuditDim(int d) : d_(d) {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension must be >= 2, got " + std::to_string(d));
  }
}

PureState::PureState(Vector amps, std::vector<QuditDim> dims)
    : amps_(std::move(amps)), dims_(std::move(dims)) {}

PureState PureState::raw(Vector amps, std::vector<QuditDim> dims) {
  check_homogeneous(dims);
  if (amps.size() != product_dim(dims)) {
    throw std::invalid_argument("amplitude vector length does not match register dimensions");
  }
  return PureState(std::move(amps), std::move(dims));
}

PureState PureState::make(Vector amps, std::vector<QuditDim> dims, Normalize mode) {
  PureState state = raw(std::move(amps), std::move(dims));
  const double n2 = state.squared_norm();
  if (n2 <= kNormTol) {
    throw std::invalid_argument("cannot make a state from a zero amplitude vector");
  }
  if (std::abs(n2 - 1.0) > kNormTol) {
    if (mode == Normalize::kRequire) {
      throw std::invalid_argument("amplitude vector is not normalized (|norm^2 - 1| = " +
                                  std::to_string(std::abs(n2 - 1.0)) + ")");
    }
    state.amps_ /= std::sqrt(n2);
  }
  return state;
}

PureState PureState::make(Vector amps, QuditDim d, int n_slots, Normalize mode) {
  if (n_slots < 1) {
    throw std::invalid_argument("register needs at least one slot");
  }
  return make(std::move(amps), std::vector<QuditDim>(static_cast<std::size_t>(n_slots), d), mode);
}

PureState PureState::basis(const std::vector<int>& digits, QuditDim d) {
  std::vector<QuditDim> dims(digits.size(), d);
  Vector amps = Vector::Zero(product_dim(dims));
  PureState state = raw(std::move(amps), std::move(dims));
  state.amps_(state.index_of(digits)) = 1.0;
  return state;
}

QuditDim PureState::qudit_dim() const {
  if (dims_.empty()) {
    throw std::logic_error("scalar residual has no qudit dimension");
  }
  return dims_[0];
}

bool PureState::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

std::int64_t PureState::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size()) {
    throw std::invalid_argument("digit tuple does not match the number of slots");
  }
  std::int64_t index = 0;
  for (std::size_t s = 0; s < digits.size(); ++s) {
    const int d = dims_[s].value();
    if (digits[s] < 0 || digits[s] >= d) {
      throw std::invalid_argument("digit out of range for slot " + std::to_string(s));
    }
    index = index * d + digits[s];
  }
  return index;
}

std::vector<int> PureState::digits_of(std::int64_t index) const {
  if (index < 0 || index >= total_dim()) {
    throw std::invalid_argument("index out of range");
  }
  std::vector<int> digits(dims_.size());
  for (std::size_t s = dims_.size(); s-- > 0;) {
    const int d = dims_[s].value();
    digits[s] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<QuditDim> dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {}

DensityMatrix DensityMatrix::from_matrix(Matrix entries, std::vector<QuditDim> dims,
                                         double herm_tol) {
  check_homogeneous(dims);
  if (dims.empty()) {
    throw std::invalid_argument("density matrix needs at least one slot");
  }
  const std::int64_t dim = product_dim(dims);
  if (entries.rows() != dim || entries.cols() != dim) {
    throw std::invalid_argument("density matrix size does not match register dimensions");
  }
  const double herm_dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > herm_tol) {
    throw std::invalid_argument("matrix is not Hermitian (max deviation " +
                                std::to_string(herm_dev) + ")");
  }
  return DensityMatrix(std::move(entries), std::move(dims));
}

QuditDim DensityMatrix::qudit_dim() const { return dims_[0]; }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid_state(double trace_tol, double eig_tol) const {
  return std::abs(trace_real() - 1.0) <= trace_tol &&
         std::abs(entries_.trace().imag()) <= trace_tol &&
         min_eigenvalue() >= -eig_tol;
}

PureState Projection::normalized(double tol) const {
  if (weight <= tol) {
    throw std::domain_error("degenerate outcome: projection weight is zero");
  }
  Vector amps = residual.amps() / std::sqrt(weight);
  return PureState::raw(std::move(amps), residual.dims());
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<QuditDim> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  check_homogeneous(dims);
  product_dim(dims);  // enforce the register cap

  const std::int64_t nb = b.total_dim();
  Vector amps(a.total_dim() * nb);
  for (std::int64_t i = 0; i < a.total_dim(); ++i) {
    amps.segment(i * nb, nb) = a.amp(i) * b.amps();
  }
  return PureState::raw(std::move(amps), std::move(dims));
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
  const int n = state.slots();
  if (keep.empty()) {
    throw std::invalid_argument("keep set must be nonempty");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("keep set contains a duplicate slot");
  }
  if (kept.front() < 0 || kept.back() >= n) {
    throw std::invalid_argument("keep set references a slot outside the register");
  }

  std::vector<int> traced;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  const int d = state.qudit_dim().value();
  std::int64_t kd = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) kd *= d;
  std::int64_t td = state.total_dim() / kd;

  // index = sum over slots of digit * stride
  std::vector<std::int64_t> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;

  auto assemble = [&](std::int64_t packed, const std::vector<int>& slots) {
    std::int64_t index = 0;
    for (std::size_t i = slots.size(); i-- > 0;) {
      index += (packed % d) * stride[slots[i]];
      packed /= d;
    }
    return index;
  };

  Matrix rho = Matrix::Zero(kd, kd);
  for (std::int64_t t = 0; t < td; ++t) {
    const std::int64_t t_index = assemble(t, traced);
    for (std::int64_t r = 0; r < kd; ++r) {
      const Complex ar = state.amp(assemble(r, kept) + t_index);
      if (ar == Complex{0.0, 0.0}) continue;
      for (std::int64_t c = 0; c < kd; ++c) {
        rho(r, c) += ar * std::conj(state.amp(assemble(c, kept) + t_index));
      }
    }
  }
  // Symmetrize away rounding so downstream consumers see exact Hermiticity.
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix::from_matrix(std::move(rho), std::vector<QuditDim>(kept.size(), state.qudit_dim()));
}

Projection project(const PureState& state, const PureState& target,
                   const std::vector<int>& slots) {
  if (!state.is_normalized(1e-9)) {
    throw std::invalid_argument("project expects a normalized input state");
  }
  if (static_cast<int>(slots.size()) != target.slots()) {
    throw std::invalid_argument("slot list does not match the target's register");
  }
  const int n = state.slots();
  std::vector<int> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n))) {
    throw std::invalid_argument("projection slots must be distinct register slots");
  }
  if (target.slots() > 0 && target.qudit_dim() != state.qudit_dim()) {
    throw std::invalid_argument("target qudit dimension does not match the register");
  }

  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) rest.push_back(s);
  }

  const int d = state.qudit_dim().value();
  std::vector<std::int64_t> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;

  std::int64_t rest_dim = 1;
  for (std::size_t i = 0; i < rest.size(); ++i) rest_dim *= d;

  Vector residual = Vector::Zero(rest_dim);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < state.total_dim(); ++i) {
    const Complex a = state.amp(i);
    if (a == Complex{0.0, 0.0}) continue;
    std::int64_t rem = i;
    for (int s = n - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = static_cast<int>(rem % d);
      rem /= d;
    }
    std::int64_t t_index = 0;
    for (int s : slots) t_index = t_index * d + digits[static_cast<std::size_t>(s)];
    std::int64_t r_index = 0;
    for (int s : rest) r_index = r_index * d + digits[static_cast<std::size_t>(s)];
    residual(r_index) += std::conj(target.amp(t_index)) * a;
  }

  PureState res = PureState::raw(std::move(residual),
                                 std::vector<QuditDim>(rest.size(), state.qudit_dim()));
  const double weight = res.squared_norm();
  return Projection{std::move(res), weight};
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims()) {
    throw std::invalid_argument("inner product requires identical registers");
  }
  return a.amps().dot(b.amps());
}

PureState permute_slots(const PureState& state, const std::vector<int>& source_of) {
  const int n = state.slots();
  std::vector<int> seen = source_of;
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(source_of.size()) != n ||
      std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
      (n > 0 && (seen.front() != 0 || seen.back() != n - 1))) {
    throw std::invalid_argument("source_of must be a permutation of the register slots");
  }

  const int d = n > 0 ? state.qudit_dim().value() : 2;
  Vector amps(state.total_dim());
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::vector<int> src(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < state.total_dim(); ++i) {
    std::int64_t rem = i;
    for (int s = n - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = static_cast<int>(rem % d);
      rem /= d;
    }
    for (int s = 0; s < n; ++s) src[static_cast<std::size_t>(source_of[static_cast<std::size_t>(s)])] = digits[static_cast<std::size_t>(s)];
    amps(i) = state.amp(state.index_of(src));
  }
  return PureState::raw(std::move(amps), state.dims());
}

}  // namespace qswap
