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

#include "qswap/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qswap {

UnitaryGate UnitaryGate::from_matrix(Matrix entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw std::invalid_argument("gate matrix must be square");
  }
  const Matrix gram = entries.adjoint() * entries;
  const double dev = (gram - Matrix::Identity(entries.rows(), entries.cols())).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument("matrix is not unitary (max |U†U - I| = " + std::to_string(dev) + ")");
  }
  return UnitaryGate(std::move(entries));
}

BellIndex::BellIndex(int p, int q, QuditDim d) : p_(p), q_(q), d_(d) {
  if (p < 0 || p >= d.value() || q < 0 || q >= d.value()) {
    throw std::invalid_argument("Bell index (p, q) must lie in [0, d)");
  }
}

std::vector<Complex> root_of_unity_table(QuditDim d) {
  const int n = d.value();
  std::vector<Complex> table(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (4 * r % n == 0) {
      // phase is a multiple of pi/2
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      table[static_cast<std::size_t>(r)] = quarter[(4 * r / n) % 4];
    } else {
      table[static_cast<std::size_t>(r)] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
    }
  }
  return table;
}

UnitaryGate fourier(QuditDim d) {
  const int n = d.value();
  const std::vector<Complex> omega = root_of_unity_table(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      f(j, k) = scale * omega[static_cast<std::size_t>(static_cast<std::int64_t>(j) * k % n)];
    }
  }
  return UnitaryGate::from_matrix(std::move(f));
}

UnitaryGate shift(QuditDim d, int j) {
  const int n = d.value();
  if (j < 0 || j >= n) {
    throw std::invalid_argument("shift amount must lie in [0, d)");
  }
  Matrix x = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    x((j + k) % n, k) = 1.0;
  }
  return UnitaryGate::from_matrix(std::move(x));
}

UnitaryGate controlled_shift(QuditDim d, int control_slot, int target_slot) {
  if (control_slot == target_slot) {
    throw std::invalid_argument("control and target slots must differ");
  }
  if ((control_slot != 0 && control_slot != 1) || (target_slot != 0 && target_slot != 1)) {
    throw std::invalid_argument("controlled shift acts on a 2-slot register (slots 0 and 1)");
  }
  const int n = d.value();
  Matrix cx = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int in = a * n + b;
      const int out = control_slot == 0 ? a * n + (a + b) % n : (a + b) % n * n + b;
      cx(out, in) = 1.0;
    }
  }
  return UnitaryGate::from_matrix(std::move(cx));
}

UnitaryGate kron(const UnitaryGate& a, const UnitaryGate& b) {
  const std::int64_t na = a.dim();
  const std::int64_t nb = b.dim();
  Matrix out(na * nb, na * nb);
  for (std::int64_t i = 0; i < na; ++i) {
    for (std::int64_t j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
    }
  }
  return UnitaryGate::from_matrix(std::move(out));
}

UnitaryGate identity_gate(std::int64_t dim) {
  return UnitaryGate::from_matrix(Matrix::Identity(dim, dim));
}

PureState apply(const UnitaryGate& gate, const PureState& state) {
  if (gate.dim() != state.total_dim()) {
    throw std::invalid_argument("gate dimension does not match the register");
  }
  return PureState::raw(gate.matrix() * state.amps(), state.dims());
}

PureState bell_state(const BellIndex& idx) {
  const int n = idx.dim().value();
  const std::vector<Complex> omega = root_of_unity_table(idx.dim());
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Vector amps = Vector::Zero(static_cast<std::int64_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    amps(static_cast<std::int64_t>((idx.p() + j) % n) * n + j) =
        scale * omega[static_cast<std::size_t>(static_cast<std::int64_t>(j) * idx.q() % n)];
  }
  return PureState::raw(std::move(amps), std::vector<QuditDim>(2, idx.dim()));
}

PureState bell_state_via_circuit(const BellIndex& idx) {
  const PureState input = PureState::basis({idx.p(), idx.q()}, idx.dim());
  const PureState fouriered = apply(kron(identity_gate(idx.dim().value()), fourier(idx.dim())), input);
  return apply(controlled_shift(idx.dim(), 1, 0), fouriered);
}

std::vector<PureState> bell_basis(QuditDim d) {
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(d.value()) * d.value());
  for (int p = 0; p < d.value(); ++p) {
    for (int q = 0; q < d.value(); ++q) {
      basis.push_back(bell_state(BellIndex(p, q, d)));
    }
  }
  return basis;
}

}  // namespace qswap
