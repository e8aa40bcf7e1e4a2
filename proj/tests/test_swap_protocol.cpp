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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qswap/ccr.hpp"
#include "qswap/swap_protocol.hpp"
#include "test_util.hpp"

using namespace qswap;

namespace {

SchmidtCoeffs coeffs(std::initializer_list<Complex> values,
                     SchmidtCoeffs::Normalize mode = SchmidtCoeffs::Normalize::kRequire) {
  return SchmidtCoeffs::make(values, mode);
}

SchmidtCoeffs qubit_family(double x) {
  return coeffs({std::sqrt(x), std::sqrt(1.0 - x)}, SchmidtCoeffs::Normalize::kAuto);
}

SchmidtCoeffs uniform_coeffs(int d) {
  return SchmidtCoeffs::make(
      std::vector<Complex>(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d))),
      SchmidtCoeffs::Normalize::kAuto);
}

const SchmidtCoeffs kStructured4 = coeffs({1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0},
                                          SchmidtCoeffs::Normalize::kAuto);

}  // namespace

TEST_CASE("SchmidtCoeffs validation") {
  CHECK_THROWS_AS(coeffs({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(coeffs({0.5, 0.5}), std::invalid_argument);  // norm^2 = 0.5
  CHECK_THROWS_AS(coeffs({0.0, 0.0}, SchmidtCoeffs::Normalize::kAuto), std::invalid_argument);
  const SchmidtCoeffs c = coeffs({3.0, 4.0}, SchmidtCoeffs::Normalize::kAuto);
  CHECK(c.modulus(0) == doctest::Approx(0.6));
  CHECK(c.modulus(1) == doctest::Approx(0.8));
  CHECK(c.entanglement_l1() == doctest::Approx(2 * 0.6 * 0.8).epsilon(1e-14));
  CHECK(c.predictability_l1() == doctest::Approx(1.0 - 0.96).epsilon(1e-12));
}

TEST_CASE("initial_state") {
  SUBCASE("basis-vector inputs give |0000>") {
    const PureState psi = initial_state(coeffs({1.0, 0.0}), coeffs({1.0, 0.0}));
    CHECK(psi.amp(0) == Complex{1.0, 0.0});
    CHECK(psi.squared_norm() == doctest::Approx(1.0));
  }
  SUBCASE("uniform qubit inputs give the four-term expansion") {
    // (1/2)(|0000> + |0101> + |1010> + |1111>) on slots (A, B, C, C')
    const PureState psi = initial_state(qubit_family(0.5), qubit_family(0.5));
    CHECK(psi.amp(psi.index_of({0, 0, 0, 0})).real() == doctest::Approx(0.5));
    CHECK(psi.amp(psi.index_of({0, 1, 0, 1})).real() == doctest::Approx(0.5));
    CHECK(psi.amp(psi.index_of({1, 0, 1, 0})).real() == doctest::Approx(0.5));
    CHECK(psi.amp(psi.index_of({1, 1, 1, 1})).real() == doctest::Approx(0.5));
    CHECK(psi.amp(psi.index_of({0, 0, 1, 1})) == Complex{0.0, 0.0});
  }
  SUBCASE("reduced state of slot A is diag |c_j|^2") {
    std::mt19937_64 rng(8);
    const SchmidtCoeffs xi = test::random_schmidt(3, rng, true);
    const PureState psi = initial_state(xi, test::random_schmidt(3, rng, true));
    const DensityMatrix rho = partial_trace(psi, {0});
    for (int j = 0; j < 3; ++j) {
      CHECK(rho.matrix()(j, j).real() == doctest::Approx(xi.modulus2(j)).epsilon(1e-12));
      for (int k = 0; k < 3; ++k) {
        if (j != k) CHECK(std::abs(rho.matrix()(j, k)) < 1e-14);
      }
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(initial_state(coeffs({1.0, 0.0}), uniform_coeffs(3)), std::invalid_argument);
  }
}

TEST_CASE("outcome_probability") {
  SUBCASE("maximally entangled inputs: 1/d^2 for every outcome") {
    for (int d = 2; d <= 6; ++d) {
      const SchmidtCoeffs u = uniform_coeffs(d);
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
          CHECK(outcome_probability(u, u, BellIndex(p, q, QuditDim(d))) ==
                doctest::Approx(1.0 / (d * d)).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("x = y = 0.4 red-dot values") {
    const SchmidtCoeffs xi = qubit_family(0.4);
    CHECK(outcome_probability(xi, xi, BellIndex(0, 0, QuditDim(2))) ==
          doctest::Approx(0.26).epsilon(1e-12));
    CHECK(outcome_probability(xi, xi, BellIndex(1, 1, QuditDim(2))) ==
          doctest::Approx(0.24).epsilon(1e-12));
  }
  SUBCASE("single surviving term for offset basis vectors") {
    for (int d = 2; d <= 5; ++d) {
      std::vector<Complex> c(static_cast<std::size_t>(d), 0.0);
      std::vector<Complex> e(static_cast<std::size_t>(d), 0.0);
      c[0] = 1.0;
      e[1] = 1.0;
      const SchmidtCoeffs xi = SchmidtCoeffs::make(c);
      const SchmidtCoeffs eta = SchmidtCoeffs::make(e);
      for (int p = 0; p < d; ++p) {
        const double pr = outcome_probability(xi, eta, BellIndex(p, 0, QuditDim(d)));
        CHECK(pr == doctest::Approx(p == d - 1 ? 1.0 / d : 0.0));
      }
    }
  }
  SUBCASE("sums: per-q slice 1/d, grand total 1") {
    std::mt19937_64 rng(12);
    for (int d = 2; d <= 6; ++d) {
      const SchmidtCoeffs xi = test::random_schmidt(d, rng, true);
      const SchmidtCoeffs eta = test::random_schmidt(d, rng, true);
      double grand = 0.0;
      for (int q = 0; q < d; ++q) {
        double slice = 0.0;
        for (int p = 0; p < d; ++p) {
          slice += outcome_probability(xi, eta, BellIndex(p, q, QuditDim(d)));
        }
        CHECK(std::abs(slice - 1.0 / d) < 1e-12);
        grand += slice;
      }
      CHECK(std::abs(grand - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("post_bbm_state") {
  SUBCASE("maximally entangled inputs stay maximally entangled") {
    for (int d = 2; d <= 4; ++d) {
      const SchmidtCoeffs u = uniform_coeffs(d);
      for (int q = 0; q < d; ++q) {
        const PureState post = post_bbm_state(u, u, BellIndex(1 % d, q, QuditDim(d)));
        const DensityMatrix rho = partial_trace(post, {0});
        CHECK(test::max_abs_diff(rho.matrix(), Matrix::Identity(d, d) / d) < 1e-12);
      }
    }
  }
  SUBCASE("x = y = 0.4, outcome (1, 0): the balanced cross state") {
    const SchmidtCoeffs xi = qubit_family(0.4);
    const PureState post = post_bbm_state(xi, xi, BellIndex(1, 0, QuditDim(2)));
    CHECK(post.amp(post.index_of({1, 0})).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(post.amp(post.index_of({0, 1})).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("support is confined to |p (+) k, k>") {
    std::mt19937_64 rng(17);
    const SchmidtCoeffs xi = test::random_schmidt(3, rng, true);
    const SchmidtCoeffs eta = test::random_schmidt(3, rng, true);
    const PureState post = post_bbm_state(xi, eta, BellIndex(2, 1, QuditDim(3)));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != (2 + b) % 3) CHECK(std::abs(post.amp(post.index_of({a, b}))) == 0.0);
      }
    }
    CHECK(post.is_normalized(1e-12));
  }
  SUBCASE("coefficient phases only move amplitude phases") {
    const SchmidtCoeffs plain = coeffs({std::sqrt(0.3), std::sqrt(0.7)});
    const SchmidtCoeffs phased =
        coeffs({std::polar(std::sqrt(0.3), 1.1), std::polar(std::sqrt(0.7), -2.3)},
               SchmidtCoeffs::Normalize::kAuto);
    const BellIndex idx(1, 1, QuditDim(2));
    const PureState a = post_bbm_state(plain, plain, idx);
    const PureState b = post_bbm_state(phased, phased, idx);
    for (std::int64_t i = 0; i < a.total_dim(); ++i) {
      CHECK(std::abs(std::abs(a.amp(i)) - std::abs(b.amp(i))) < 1e-12);
    }
    CHECK(outcome_probability(plain, plain, idx) ==
          doctest::Approx(outcome_probability(phased, phased, idx)).epsilon(1e-12));
  }
  SUBCASE("degenerate outcome raises") {
    const SchmidtCoeffs basis_xi = coeffs({1.0, 0.0});
    CHECK_THROWS_AS(post_bbm_state(basis_xi, coeffs({0.0, 1.0}), BellIndex(0, 0, QuditDim(2))),
                    std::domain_error);
  }
  SUBCASE("matches the projection of the four-qudit state, phases included") {
    std::mt19937_64 rng(19);
    for (int d = 2; d <= 4; ++d) {
      const SchmidtCoeffs xi = test::random_schmidt(d, rng, true);
      const SchmidtCoeffs eta = test::random_schmidt(d, rng, true);
      const PureState psi = initial_state(xi, eta);
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
          const BellIndex idx(p, q, QuditDim(d));
          const Projection proj = project(psi, bell_state(idx), {2, 3});
          if (proj.weight <= kDegenerateTol) continue;
          CHECK(test::max_abs_diff(post_bbm_state(xi, eta, idx).amps(),
                                   proj.normalized().amps()) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("post_bbm_entanglement") {
  SUBCASE("basis-vector input kills the final entanglement") {
    const SchmidtCoeffs basis_xi = coeffs({1.0, 0.0, 0.0});
    std::mt19937_64 rng(23);
    const SchmidtCoeffs eta = test::random_schmidt(3, rng);
    for (int p = 0; p < 3; ++p) {
      CHECK(post_bbm_entanglement(basis_xi, eta, BellIndex(p, 0, QuditDim(3))) == 0.0);
    }
  }
  SUBCASE("x = y = 0.4 values") {
    const SchmidtCoeffs xi = qubit_family(0.4);
    CHECK(post_bbm_entanglement(xi, xi, BellIndex(0, 0, QuditDim(2))) ==
          doctest::Approx(0.92307692307692313).epsilon(1e-12));
    CHECK(post_bbm_entanglement(xi, xi, BellIndex(1, 0, QuditDim(2))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("maximally entangled inputs reach d - 1") {
    for (int d = 2; d <= 6; ++d) {
      const SchmidtCoeffs u = uniform_coeffs(d);
      CHECK(post_bbm_entanglement(u, u, BellIndex(0, 0, QuditDim(d))) ==
            doctest::Approx(d - 1.0).epsilon(1e-12));
    }
  }
  SUBCASE("agrees with entanglement_l1 of the post state") {
    std::mt19937_64 rng(29);
    for (int d = 2; d <= 5; ++d) {
      const SchmidtCoeffs xi = test::random_schmidt(d, rng, true);
      const SchmidtCoeffs eta = test::random_schmidt(d, rng, true);
      for (int p = 0; p < d; ++p) {
        const BellIndex idx(p, 0, QuditDim(d));
        if (outcome_probability(xi, eta, idx) <= kDegenerateTol) continue;
        CHECK(std::abs(post_bbm_entanglement(xi, eta, idx) -
                       entanglement_l1(post_bbm_state(xi, eta, idx), 0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("average_entanglement") {
  SUBCASE("x = y = 0.4 gives 0.96") {
    const SchmidtCoeffs xi = qubit_family(0.4);
    CHECK(average_entanglement(xi, xi) == doctest::Approx(0.96).epsilon(1e-12));
  }
  SUBCASE("qubit identity: average equals the product") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
      const SchmidtCoeffs xi = test::random_schmidt(2, rng, true);
      const SchmidtCoeffs eta = test::random_schmidt(2, rng, true);
      CHECK(std::abs(average_entanglement(xi, eta) -
                     xi.entanglement_l1() * eta.entanglement_l1()) < 1e-12);
    }
  }
  SUBCASE("qutrit identity: average equals half the product") {
    std::mt19937_64 rng(38);
    for (int trial = 0; trial < 500; ++trial) {
      const SchmidtCoeffs xi = test::random_schmidt(3, rng, true);
      const SchmidtCoeffs eta = test::random_schmidt(3, rng, true);
      CHECK(std::abs(average_entanglement(xi, eta) -
                     xi.entanglement_l1() * eta.entanglement_l1() / 2.0) < 1e-12);
    }
  }
  SUBCASE("equals the probability-weighted outcome sum") {
    std::mt19937_64 rng(39);
    for (int d = 2; d <= 5; ++d) {
      const SchmidtCoeffs xi = test::random_schmidt(d, rng);
      const SchmidtCoeffs eta = test::random_schmidt(d, rng);
      double weighted = 0.0;
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
          const BellIndex idx(p, q, QuditDim(d));
          weighted += outcome_probability(xi, eta, idx) * post_bbm_entanglement(xi, eta, idx);
        }
      }
      CHECK(std::abs(average_entanglement(xi, eta) - weighted) < 1e-12);
    }
  }
}

TEST_CASE("evaluate_bounds") {
  SUBCASE("maximally entangled inputs saturate the single-pair and improved bounds") {
    for (int d = 2; d <= 6; ++d) {
      const SchmidtCoeffs u = uniform_coeffs(d);
      const BoundReport bounds = evaluate_bounds(u, u);
      CHECK(bounds.avg_entanglement == doctest::Approx(d - 1.0).epsilon(1e-12));
      CHECK(bounds.bound_eta == doctest::Approx(d - 1.0));
      CHECK(bounds.bound_xi == doctest::Approx(d - 1.0));
      CHECK(bounds.bound_conjecture == doctest::Approx(d - 1.0));
      CHECK(bounds.eta_bound_holds);
      CHECK(bounds.xi_bound_holds);
      CHECK(bounds.product_bound_holds);
      CHECK(bounds.conjecture_holds);
      CHECK(bounds.per_outcome_bounds_hold);
    }
  }
  SUBCASE("qubits: the average equals the product bound") {
    std::mt19937_64 rng(43);
    const SchmidtCoeffs xi = test::random_schmidt(2, rng);
    const SchmidtCoeffs eta = test::random_schmidt(2, rng);
    const BoundReport bounds = evaluate_bounds(xi, eta);
    CHECK(std::abs(bounds.avg_entanglement - bounds.bound_product) < 1e-12);
    CHECK(bounds.bound_product ==
          doctest::Approx(bounds.bound_xi * bounds.bound_eta).epsilon(1e-12));
  }
  SUBCASE("structured d = 4 input violates only the improved-bound hypothesis") {
    const BoundReport bounds = evaluate_bounds(kStructured4, kStructured4);
    CHECK(bounds.avg_entanglement == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bounds.bound_conjecture == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_FALSE(bounds.conjecture_holds);
    CHECK(bounds.eta_bound_holds);
    CHECK(bounds.xi_bound_holds);
    CHECK(bounds.product_bound_holds);
    CHECK(bounds.per_outcome_bounds_hold);
  }
  SUBCASE("zero initial entanglement marks per-outcome bounds not applicable") {
    const BoundReport bounds = evaluate_bounds(coeffs({1.0, 0.0}), coeffs({1.0, 0.0}));
    CHECK_FALSE(bounds.per_outcome_applicable);
    for (const auto& b : bounds.per_outcome_bound) CHECK_FALSE(b.has_value());
  }
}

TEST_CASE("run_protocol") {
  SUBCASE("x = y = 1/2: four outcomes of probability 1/4 and entanglement 1") {
    const SwapReport report = run_protocol(qubit_family(0.5), qubit_family(0.5));
    REQUIRE(report.outcomes.size() == 4);
    for (const BBMOutcome& o : report.outcomes) {
      CHECK(o.probability == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(o.entanglement == doctest::Approx(1.0).epsilon(1e-12));
      CHECK_FALSE(o.degenerate);
      CHECK(o.post_state.has_value());
    }
  }
  SUBCASE("uniform qutrits: nine outcomes of probability 1/9 and entanglement 2") {
    const SwapReport report = run_protocol(uniform_coeffs(3), uniform_coeffs(3));
    REQUIRE(report.outcomes.size() == 9);
    for (const BBMOutcome& o : report.outcomes) {
      CHECK(o.probability == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
      CHECK(o.entanglement == doctest::Approx(2.0).epsilon(1e-12));
    }
    CHECK(report.bounds.avg_entanglement == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("x = y = 0.4 reproduces every red-dot number") {
    const SwapReport report = run_protocol(qubit_family(0.4), qubit_family(0.4));
    CHECK(report.outcomes[0].probability == doctest::Approx(0.26).epsilon(1e-12));
    CHECK(report.outcomes[2].probability == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(report.outcomes[0].entanglement == doctest::Approx(0.92307692307692313).epsilon(1e-12));
    CHECK(report.outcomes[2].entanglement == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.initial_ccr_xi.entanglement ==
          doctest::Approx(0.97979589711327120).epsilon(1e-12));
    CHECK(report.initial_ccr_eta.entanglement ==
          doctest::Approx(0.97979589711327120).epsilon(1e-12));
    CHECK(report.bounds.avg_entanglement == doctest::Approx(0.96).epsilon(1e-12));
  }
  SUBCASE("report invariants") {
    std::mt19937_64 rng(47);
    for (int d = 2; d <= 6; ++d) {
      const SwapReport report =
          run_protocol(test::random_schmidt(d, rng, true), test::random_schmidt(d, rng, true));
      double total = 0.0;
      for (const BBMOutcome& o : report.outcomes) {
        total += o.probability;
        CHECK(o.probability >= 0.0);
        CHECK(o.post_state.has_value() != o.degenerate);
        // same p, different q: identical probability and entanglement
        const BBMOutcome& rep = report.outcomes[static_cast<std::size_t>(o.p) * d];
        CHECK(std::abs(o.probability - rep.probability) < 1e-12);
        CHECK(std::abs(o.entanglement - rep.entanglement) < 1e-12);
      }
      CHECK(std::abs(total - 1.0) < 1e-9);
      // the average is capped by the complementarity budget of pair B
      const double budget = d - 1.0 - report.initial_ccr_eta.predictability;
      CHECK(report.bounds.avg_entanglement <= budget + 1e-9);
    }
  }
  SUBCASE("bound chain on random inputs") {
    std::mt19937_64 rng(53);
    for (int d = 2; d <= 6; ++d) {
      for (int trial = 0; trial < 100; ++trial) {
        const SwapReport report =
            run_protocol(test::random_schmidt(d, rng, true), test::random_schmidt(d, rng, true));
        CHECK(report.bounds.eta_bound_holds);
        CHECK(report.bounds.xi_bound_holds);
        CHECK(report.bounds.product_bound_holds);
        CHECK(report.bounds.per_outcome_bounds_hold);
      }
    }
  }
  SUBCASE("full phase invariance of probabilities, entanglements and bounds") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (int d : {2, 4}) {
      const SchmidtCoeffs xi = test::random_schmidt(d, rng);
      const SchmidtCoeffs eta = test::random_schmidt(d, rng);
      std::vector<Complex> xp, ep;
      for (int j = 0; j < d; ++j) {
        xp.push_back(xi.coeffs()[static_cast<std::size_t>(j)] * std::polar(1.0, angle(rng)));
        ep.push_back(eta.coeffs()[static_cast<std::size_t>(j)] * std::polar(1.0, angle(rng)));
      }
      const SwapReport plain = run_protocol(xi, eta);
      const SwapReport phased =
          run_protocol(SchmidtCoeffs::make(xp, SchmidtCoeffs::Normalize::kAuto),
                       SchmidtCoeffs::make(ep, SchmidtCoeffs::Normalize::kAuto));
      for (std::size_t i = 0; i < plain.outcomes.size(); ++i) {
        CHECK(std::abs(plain.outcomes[i].probability - phased.outcomes[i].probability) < 1e-12);
        CHECK(std::abs(plain.outcomes[i].entanglement - phased.outcomes[i].entanglement) < 1e-12);
      }
      CHECK(std::abs(plain.bounds.avg_entanglement - phased.bounds.avg_entanglement) < 1e-12);
      CHECK(std::abs(plain.bounds.bound_product - phased.bounds.bound_product) < 1e-12);
    }
  }
}

TEST_CASE("qubit_scan") {
  SUBCASE("center point: balanced probabilities, maximal entanglement") {
    const auto points = qubit_scan({0.5}, {0.5});
    REQUIRE(points.size() == 1);
    CHECK(points[0].pr_p0 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(points[0].pr_p0 + points[0].pr_p1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(points[0].ent_p0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(points[0].ent_p1 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("along x = y toward 0: p = 0 dominates, its entanglement dies") {
    double prev_pr = 0.25;
    double prev_ent = 1.0;
    for (double t : {0.4, 0.2, 0.05, 0.01}) {
      const auto points = qubit_scan({t}, {t});
      CHECK(points[0].pr_p0 > prev_pr);
      CHECK(points[0].ent_p0 < prev_ent);
      CHECK(points[0].ent_p1 == doctest::Approx(1.0).epsilon(1e-12));
      prev_pr = points[0].pr_p0;
      prev_ent = points[0].ent_p0;
    }
    CHECK(prev_pr == doctest::Approx(0.4901).epsilon(1e-12));
    CHECK(prev_ent < 0.05);
  }
  SUBCASE("red dot row") {
    const auto points = qubit_scan({0.4}, {0.4});
    CHECK(points[0].pr_p0 == doctest::Approx(0.26).epsilon(1e-12));
    CHECK(points[0].pr_p1 == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(points[0].ent_p0 == doctest::Approx(0.92307692307692313).epsilon(1e-12));
    CHECK(points[0].ent_p1 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("boundary points degenerate cleanly") {
    const auto points = qubit_scan({0.0}, {0.0});
    CHECK(points[0].pr_p0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(points[0].pr_p1 == doctest::Approx(0.0));
    CHECK(points[0].degenerate_p1);
    CHECK_FALSE(points[0].degenerate_p0);
    CHECK(points[0].ent_p0 == doctest::Approx(0.0));
    CHECK(points[0].ent_p1 == 0.0);
  }
  SUBCASE("grid ordering and validation") {
    const auto points = qubit_scan(unit_grid(3), unit_grid(2));
    REQUIRE(points.size() == 6);
    CHECK(points[1].x == doctest::Approx(0.0));
    CHECK(points[1].y == doctest::Approx(1.0));
    CHECK(points[2].x == doctest::Approx(0.5));
    CHECK_THROWS_AS(qubit_scan({1.5}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(unit_grid(1), std::invalid_argument);
  }
}
