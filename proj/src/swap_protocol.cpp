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

#include "qswap/swap_protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qswap {

namespace {

void check_same_dim(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  if (xi.dim() != eta.dim()) {
    throw std::invalid_argument("both input pairs must have the same qudit dimension");
  }
}

void check_index(const SchmidtCoeffs& xi, const BellIndex& idx) {
  if (idx.dim().value() != xi.dim()) {
    throw std::invalid_argument("Bell index dimension does not match the coefficients");
  }
}

}  // namespace

SchmidtCoeffs SchmidtCoeffs::make(std::vector<Complex> coeffs, Normalize mode) {
  if (coeffs.size() < 2) {
    throw std::invalid_argument("a Schmidt coefficient vector needs at least 2 entries");
  }
  double n2 = 0.0;
  for (const Complex& c : coeffs) n2 += std::norm(c);
  if (n2 <= kNormTol) {
    throw std::invalid_argument("coefficient vector is zero");
  }
  if (std::abs(n2 - 1.0) > kNormTol) {
    if (mode == Normalize::kRequire) {
      throw std::invalid_argument("squared moduli must sum to 1 (got " + std::to_string(n2) + ")");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex& c : coeffs) c *= scale;
  }
  return SchmidtCoeffs(std::move(coeffs));
}

double SchmidtCoeffs::modulus(int j) const {
  return std::abs(coeffs_[static_cast<std::size_t>(j)]);
}

double SchmidtCoeffs::modulus2(int j) const {
  return std::norm(coeffs_[static_cast<std::size_t>(j)]);
}

double SchmidtCoeffs::entanglement_l1() const {
  double total = 0.0;
  for (int j = 0; j < dim(); ++j) {
    for (int k = 0; k < dim(); ++k) {
      if (j != k) total += modulus(j) * modulus(k);
    }
  }
  return total;
}

double SchmidtCoeffs::predictability_l1() const {
  return static_cast<double>(dim()) - 1.0 - entanglement_l1();
}

PureState SchmidtCoeffs::pair_state() const {
  const int d = dim();
  Vector amps = Vector::Zero(static_cast<std::int64_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    amps(static_cast<std::int64_t>(j) * d + j) = coeffs_[static_cast<std::size_t>(j)];
  }
  return PureState::raw(std::move(amps), std::vector<QuditDim>(2, QuditDim(d)));
}

PureState initial_state(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  check_same_dim(xi, eta);
  const int d = xi.dim();
  const std::int64_t dd = static_cast<std::int64_t>(d);
  Vector amps = Vector::Zero(dd * dd * dd * dd);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // |j k>_AB (x) |j k>_CC'
      amps(((j * dd + k) * dd + j) * dd + k) =
          xi.coeffs()[static_cast<std::size_t>(j)] * eta.coeffs()[static_cast<std::size_t>(k)];
    }
  }
  return PureState::raw(std::move(amps), std::vector<QuditDim>(4, QuditDim(d)));
}

double outcome_probability(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                           const BellIndex& idx) {
  check_same_dim(xi, eta);
  check_index(xi, idx);
  const int d = xi.dim();
  double sum = 0.0;
  for (int k = 0; k < d; ++k) {
    sum += xi.modulus2((idx.p() + k) % d) * eta.modulus2(k);
  }
  return sum / d;
}

PureState post_bbm_state(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                         const BellIndex& idx) {
  const double pr = outcome_probability(xi, eta, idx);
  if (pr <= kDegenerateTol) {
    throw std::domain_error("degenerate outcome: no post-measurement state is defined");
  }
  const int d = xi.dim();
  const std::vector<Complex> omega = root_of_unity_table(idx.dim());
  const double scale = 1.0 / std::sqrt(pr * d);
  Vector amps = Vector::Zero(static_cast<std::int64_t>(d) * d);
  for (int k = 0; k < d; ++k) {
    const int a = (idx.p() + k) % d;
    // conj(omega^{qk}) = omega^{-qk mod d}
    const Complex phase = std::conj(omega[static_cast<std::size_t>(static_cast<std::int64_t>(idx.q()) * k % d)]);
    amps(static_cast<std::int64_t>(a) * d + k) =
        scale * xi.coeffs()[static_cast<std::size_t>(a)] * eta.coeffs()[static_cast<std::size_t>(k)] * phase;
  }
  return PureState::raw(std::move(amps), std::vector<QuditDim>(2, QuditDim(d)));
}

double post_bbm_entanglement(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta,
                             const BellIndex& idx) {
  const double pr = outcome_probability(xi, eta, idx);
  if (pr <= kDegenerateTol) {
    return 0.0;
  }
  const int d = xi.dim();
  double sum = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j != k) {
        sum += xi.modulus((idx.p() + j) % d) * xi.modulus((idx.p() + k) % d) *
               eta.modulus(j) * eta.modulus(k);
      }
    }
  }
  return sum / (pr * d);
}

double average_entanglement(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  check_same_dim(xi, eta);
  const int d = xi.dim();
  double total = 0.0;
  for (int p = 0; p < d; ++p) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (j != k) {
          total += xi.modulus((p + j) % d) * xi.modulus((p + k) % d) *
                   eta.modulus(j) * eta.modulus(k);
        }
      }
    }
  }
  return total;
}

BoundReport evaluate_bounds(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta, double tol) {
  check_same_dim(xi, eta);
  const int d = xi.dim();
  BoundReport report;
  report.tol = tol;
  report.avg_entanglement = average_entanglement(xi, eta);
  report.bound_xi = xi.entanglement_l1();
  report.bound_eta = eta.entanglement_l1();
  report.bound_product = report.bound_xi * report.bound_eta;
  report.bound_conjecture = report.bound_product / (d - 1);

  report.xi_bound_holds = report.avg_entanglement <= report.bound_xi + tol;
  report.eta_bound_holds = report.avg_entanglement <= report.bound_eta + tol;
  report.product_bound_holds = report.avg_entanglement <= report.bound_product + tol;
  report.conjecture_holds = report.avg_entanglement <= report.bound_conjecture + tol;

  report.per_outcome_applicable = report.bound_product > kDegenerateTol;
  report.per_outcome_bounds_hold = true;
  report.per_outcome_bound.assign(static_cast<std::size_t>(d) * d, std::nullopt);
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      const BellIndex idx(p, q, QuditDim(d));
      const double pr = outcome_probability(xi, eta, idx);
      if (!report.per_outcome_applicable || pr <= kDegenerateTol) continue;
      const double bound = report.bound_product / (pr * d);
      report.per_outcome_bound[static_cast<std::size_t>(p) * d + q] = bound;
      if (post_bbm_entanglement(xi, eta, idx) > bound + tol) {
        report.per_outcome_bounds_hold = false;
      }
    }
  }
  return report;
}

SwapReport run_protocol(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta, double tol) {
  check_same_dim(xi, eta);
  const int d = xi.dim();

  std::vector<BBMOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(d) * d);
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      const BellIndex idx(p, q, QuditDim(d));
      const double pr = outcome_probability(xi, eta, idx);
      const bool degenerate = pr <= kDegenerateTol;
      std::optional<PureState> post;
      if (!degenerate) post = post_bbm_state(xi, eta, idx);
      outcomes.push_back(BBMOutcome{p, q, pr, std::move(post),
                                    post_bbm_entanglement(xi, eta, idx), degenerate});
    }
  }

  return SwapReport{d,
                    xi,
                    eta,
                    ccr_check(xi.pair_state(), 0),
                    ccr_check(eta.pair_state(), 0),
                    std::move(outcomes),
                    evaluate_bounds(xi, eta, tol)};
}

std::vector<double> unit_grid(int n) {
  if (n < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return grid;
}

std::vector<QubitScanPoint> qubit_scan(const std::vector<double>& x_grid,
                                       const std::vector<double>& y_grid) {
  for (double v : x_grid) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("grid values must lie in [0, 1]");
  }
  for (double v : y_grid) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("grid values must lie in [0, 1]");
  }

  auto family = [](double t) {
    return SchmidtCoeffs::make({std::sqrt(t), std::sqrt(1.0 - t)}, SchmidtCoeffs::Normalize::kAuto);
  };

  std::vector<QubitScanPoint> points;
  points.reserve(x_grid.size() * y_grid.size());
  for (double x : x_grid) {
    const SchmidtCoeffs xi = family(x);
    for (double y : y_grid) {
      const SwapReport report = run_protocol(xi, family(y));
      const BBMOutcome& o0 = report.outcomes[0];
      const BBMOutcome& o1 = report.outcomes[static_cast<std::size_t>(report.d)];
      points.push_back(QubitScanPoint{x, y, o0.probability, o1.probability, o0.entanglement,
                                      o1.entanglement, o0.degenerate, o1.degenerate});
    }
  }
  return points;
}

}  // namespace qswap
