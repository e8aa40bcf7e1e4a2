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

#include "qswap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qswap/gates.hpp"

namespace qswap {

namespace {

// Local l1-entanglement evaluation so the oracle path shares nothing with
// the ccr module: sum_{j!=k} (sqrt(rho_jj rho_kk) - |rho_jk|) on the
// reduced state of slot `side`.
double oracle_entanglement(const PureState& bipartite, int side) {
  const DensityMatrix rho = partial_trace(bipartite, {side});
  const std::int64_t n = rho.dim();
  double total = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) {
      if (j != k) {
        const double pj = std::max(0.0, rho.matrix()(j, j).real());
        const double pk = std::max(0.0, rho.matrix()(k, k).real());
        total += std::sqrt(pj * pk) - std::abs(rho.matrix()(j, k));
      }
    }
  }
  return std::max(0.0, total);
}

double oracle_coherence(const DensityMatrix& rho) {
  double total = 0.0;
  for (std::int64_t j = 0; j < rho.dim(); ++j) {
    for (std::int64_t k = 0; k < rho.dim(); ++k) {
      if (j != k) total += std::abs(rho.matrix()(j, k));
    }
  }
  return total;
}

CCRBreakdown oracle_ccr(const PureState& bipartite, int side) {
  const DensityMatrix rho = partial_trace(bipartite, {side});
  const double c = oracle_coherence(rho);
  const double e = oracle_entanglement(bipartite, side);
  double geometric = 0.0;
  for (std::int64_t j = 0; j < rho.dim(); ++j) {
    for (std::int64_t k = 0; k < rho.dim(); ++k) {
      if (j != k) {
        geometric += std::sqrt(std::max(0.0, rho.matrix()(j, j).real()) *
                               std::max(0.0, rho.matrix()(k, k).real()));
      }
    }
  }
  const double p = std::max(0.0, static_cast<double>(rho.dim()) - 1.0 - geometric);
  return CCRBreakdown{c, p, e, static_cast<int>(rho.dim()), c + p + e};
}

}  // namespace

OracleReport simulate_full(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  if (xi.dim() != eta.dim()) {
    throw std::invalid_argument("both input pairs must have the same qudit dimension");
  }
  const int d = xi.dim();
  const std::int64_t total = static_cast<std::int64_t>(d) * d * d * d;
  if (total > kMaxRegisterDim) {
    throw std::invalid_argument("register too large for the brute-force path");
  }

  const PureState pair_ac = xi.pair_state();    // slots (A, C)
  const PureState pair_cb = eta.pair_state();   // slots (C', B)
  // tensor gives (A, C, C', B); regroup to (A, B, C, C')
  const PureState psi = permute_slots(tensor(pair_ac, pair_cb), {0, 3, 1, 2});

  OracleReport report{d,
                      {},
                      oracle_ccr(pair_ac, 0),
                      oracle_ccr(pair_cb, 1),
                      oracle_entanglement(pair_ac, 0),
                      oracle_entanglement(pair_cb, 1),
                      0.0,
                      std::nullopt};

  report.outcomes.reserve(static_cast<std::size_t>(d) * d);
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      const PureState target = bell_state_via_circuit(BellIndex(p, q, QuditDim(d)));
      const Projection proj = project(psi, target, {2, 3});
      const bool degenerate = proj.weight <= kDegenerateTol;
      std::optional<PureState> post;
      double ent = 0.0;
      if (!degenerate) {
        post = proj.normalized();
        ent = oracle_entanglement(*post, 0);
      }
      report.avg_entanglement += proj.weight * ent;
      report.outcomes.push_back(OracleOutcome{p, q, proj.weight, std::move(post), ent, degenerate});
    }
  }
  return report;
}

OracleReport compare_report(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  OracleReport oracle = simulate_full(xi, eta);
  const SwapReport analytic = run_protocol(xi, eta);

  double dev = 0.0;
  auto track = [&dev](double a, double b) { dev = std::max(dev, std::abs(a - b)); };

  for (std::size_t i = 0; i < oracle.outcomes.size(); ++i) {
    track(analytic.outcomes[i].probability, oracle.outcomes[i].probability);
    if (!analytic.outcomes[i].degenerate && !oracle.outcomes[i].degenerate) {
      track(analytic.outcomes[i].entanglement, oracle.outcomes[i].entanglement);
    }
  }
  track(analytic.bounds.avg_entanglement, oracle.avg_entanglement);
  track(analytic.bounds.bound_xi, oracle.initial_entanglement_xi);
  track(analytic.bounds.bound_eta, oracle.initial_entanglement_eta);

  oracle.max_abs_deviation = dev;
  return oracle;
}

double compare(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  return *compare_report(xi, eta).max_abs_deviation;
}

}  // namespace qswap
