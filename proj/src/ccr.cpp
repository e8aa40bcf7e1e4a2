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

#include "qswap/ccr.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qswap {

namespace {

constexpr double kNegativeGuard = 1e-10;

double clamp_rounding(double value, const char* what) {
  if (value < -kNegativeGuard) {
    throw std::domain_error(std::string(what) + " came out negative; input is not a physical state");
  }
  return value < 0.0 ? 0.0 : value;
}

//! Diagonal of a density matrix as clamped nonnegative reals.
std::vector<double> diagonal_populations(const DensityMatrix& rho) {
  std::vector<double> diag(static_cast<std::size_t>(rho.dim()));
  for (std::int64_t j = 0; j < rho.dim(); ++j) {
    diag[static_cast<std::size_t>(j)] = clamp_rounding(rho.matrix()(j, j).real(), "diagonal population");
  }
  return diag;
}

void check_bipartite(const PureState& state, int side) {
  if (state.slots() != 2) {
    throw std::invalid_argument("expected a bipartite (2-slot) state");
  }
  if (side != 0 && side != 1) {
    throw std::invalid_argument("side must be slot 0 or slot 1");
  }
}

}  // namespace

NormalizedCCR CCRBreakdown::normalized() const {
  const double scale = 1.0 / (d - 1);
  return NormalizedCCR{coherence * scale, predictability * scale, entanglement * scale, sum * scale};
}

double coherence_l1(const DensityMatrix& rho) {
  double total = 0.0;
  for (std::int64_t j = 0; j < rho.dim(); ++j) {
    for (std::int64_t k = 0; k < rho.dim(); ++k) {
      if (j != k) total += std::abs(rho.matrix()(j, k));
    }
  }
  return total;
}

double predictability_l1(const DensityMatrix& rho) {
  const std::vector<double> diag = diagonal_populations(rho);
  double geometric = 0.0;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (j != k) geometric += std::sqrt(diag[j] * diag[k]);
    }
  }
  return clamp_rounding(static_cast<double>(rho.dim()) - 1.0 - geometric, "predictability");
}

double entanglement_l1(const DensityMatrix& rho) {
  const std::vector<double> diag = diagonal_populations(rho);
  double total = 0.0;
  for (std::int64_t j = 0; j < rho.dim(); ++j) {
    for (std::int64_t k = 0; k < rho.dim(); ++k) {
      if (j != k) {
        total += std::sqrt(diag[static_cast<std::size_t>(j)] * diag[static_cast<std::size_t>(k)]) -
                 std::abs(rho.matrix()(j, k));
      }
    }
  }
  return clamp_rounding(total, "entanglement");
}

double entanglement_l1(const PureState& bipartite, int side) {
  check_bipartite(bipartite, side);
  return entanglement_l1(partial_trace(bipartite, {side}));
}

CCRBreakdown ccr_check(const PureState& bipartite, int side) {
  check_bipartite(bipartite, side);
  const DensityMatrix rho = partial_trace(bipartite, {side});
  const double c = coherence_l1(rho);
  const double p = predictability_l1(rho);
  const double e = entanglement_l1(rho);
  return CCRBreakdown{c, p, e, rho.qudit_dim().value(), c + p + e};
}

std::pair<CCRBreakdown, CCRBreakdown> ccr_both_sides(const PureState& bipartite) {
  return {ccr_check(bipartite, 0), ccr_check(bipartite, 1)};
}

}  // namespace qswap
