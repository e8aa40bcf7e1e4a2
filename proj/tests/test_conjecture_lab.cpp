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
#include <set>

#include "qswap/conjecture_lab.hpp"
#include "qswap/report_io.hpp"
#include "test_util.hpp"

using namespace qswap;

TEST_CASE("sample_coeffs distributions") {
  SUBCASE("uniform simplex: normalized, full-length, deterministic per index") {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const SchmidtCoeffs c = sample_coeffs(QuditDim(3), 7, i, SampleDistribution::kUniformSimplex);
      double n2 = 0.0;
      for (int j = 0; j < 3; ++j) n2 += c.modulus2(j);
      CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    const SchmidtCoeffs a = sample_coeffs(QuditDim(3), 7, 5, SampleDistribution::kUniformSimplex);
    const SchmidtCoeffs b = sample_coeffs(QuditDim(3), 7, 5, SampleDistribution::kUniformSimplex);
    CHECK(a.coeffs() == b.coeffs());
    const SchmidtCoeffs other = sample_coeffs(QuditDim(3), 7, 6, SampleDistribution::kUniformSimplex);
    CHECK(a.coeffs() != other.coeffs());
  }
  SUBCASE("uniform simplex: squared moduli are simplex-flat for d = 2") {
    // the first squared modulus should look uniform on [0, 1]
    double mean = 0.0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) {
      mean += sample_coeffs(QuditDim(2), 99, static_cast<std::uint64_t>(i),
                            SampleDistribution::kUniformSimplex)
                  .modulus2(0);
    }
    mean /= n;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.05));
  }
  SUBCASE("sparse support") {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const SchmidtCoeffs c =
          sample_coeffs(QuditDim(6), 11, i, SampleDistribution::kSparseSupport, 3);
      int support = 0;
      for (int j = 0; j < 6; ++j) {
        if (c.modulus(j) > 0.0) ++support;
      }
      CHECK(support <= 3);
      CHECK(support >= 1);
    }
    CHECK_THROWS_AS(sample_coeffs(QuditDim(4), 0, 0, SampleDistribution::kSparseSupport, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_coeffs(QuditDim(4), 0, 0, SampleDistribution::kSparseSupport, 5),
                    std::invalid_argument);
  }
  SUBCASE("structured periodic family for d = 4") {
    const std::vector<SchmidtCoeffs> family = structured_periodic_family(QuditDim(4));
    REQUIRE(family.size() == 3);  // strides 1, 2, 4
    // stride 1: uniform
    for (int j = 0; j < 4; ++j) CHECK(family[0].modulus(j) == doctest::Approx(0.5));
    // stride 2: weight on {0, 2}
    CHECK(family[1].modulus(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(family[1].modulus(1) == 0.0);
    CHECK(family[1].modulus(2) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(family[1].modulus(3) == 0.0);
    // stride 4: basis vector
    CHECK(family[2].modulus(0) == doctest::Approx(1.0));
    // sample_coeffs cycles through the family
    CHECK(sample_coeffs(QuditDim(4), 0, 1, SampleDistribution::kStructuredPeriodic).coeffs() ==
          family[1].coeffs());
  }
}

TEST_CASE("ratio") {
  SUBCASE("d = 2 and d = 3 are identities") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(std::abs(ratio(test::random_schmidt(2, rng, true), test::random_schmidt(2, rng, true)) -
                     1.0) < 1e-12);
      CHECK(std::abs(ratio(test::random_schmidt(3, rng, true), test::random_schmidt(3, rng, true)) -
                     1.0) < 1e-12);
    }
  }
  SUBCASE("structured d = 4 counterexample reaches 3") {
    const SchmidtCoeffs c = structured_periodic_family(QuditDim(4))[1];
    CHECK(ratio(c, c) == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("not applicable on zero entanglement") {
    const SchmidtCoeffs basis = SchmidtCoeffs::make({Complex{1.0, 0.0}, Complex{0.0, 0.0}});
    std::mt19937_64 rng(73);
    CHECK_THROWS_AS(ratio(basis, test::random_schmidt(2, rng)), std::domain_error);
  }
}

TEST_CASE("scan") {
  SUBCASE("qubit scan: all saturated, none violated") {
    ScanConfig config;
    config.d = 2;
    config.n_samples = 500;
    config.seed = 1;
    const ScanResult result = scan(config);
    CHECK(result.violations.empty());
    CHECK(result.saturation_count == 500);
    CHECK(result.evaluated == 500);
    CHECK(std::abs(result.max_ratio - 1.0) < 1e-12);
    CHECK(result.status() == "CONFIRMED-ON-SAMPLE");
  }
  SUBCASE("d = 4 with the structured family reports the oracle-confirmed violation") {
    ScanConfig config;
    config.d = 4;
    config.n_samples = 50;
    config.seed = 3;
    const ScanResult result = scan(config);  // structured included by default at d >= 4
    REQUIRE_FALSE(result.violations.empty());
    CHECK(result.status() == "VIOLATED");
    CHECK(result.max_ratio == doctest::Approx(3.0).epsilon(1e-9));
    bool found = false;
    for (const ScanViolation& v : result.violations) {
      if (std::abs(v.ratio - 3.0) < 1e-9) {
        found = true;
        CHECK(v.oracle_confirmed);
        CHECK(v.oracle_deviation < 1e-9);
        CHECK(v.source.rfind("structured:", 0) == 0);
        CHECK(v.xi.modulus(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(v.xi.modulus(1) == 0.0);
      }
    }
    CHECK(found);
  }
  SUBCASE("deterministic across repetition and thread counts") {
    ScanConfig config;
    config.d = 3;
    config.n_samples = 200;
    config.seed = 42;
    config.threads = 1;
    const ScanResult serial = scan(config);
    config.threads = 4;
    const ScanResult parallel = scan(config);
    CHECK(serial.max_ratio == parallel.max_ratio);
    CHECK(serial.saturation_count == parallel.saturation_count);
    CHECK(serial.evaluated == parallel.evaluated);
    REQUIRE(serial.argmax_xi.has_value());
    REQUIRE(parallel.argmax_xi.has_value());
    CHECK(serial.argmax_xi->coeffs() == parallel.argmax_xi->coeffs());
    Json a = to_json(serial);
    Json b = to_json(parallel);
    a.erase("config");  // the echoed config records the differing thread counts
    b.erase("config");
    CHECK(dump_json(a, -1) == dump_json(b, -1));
  }
  SUBCASE("structured policy defaults") {
    ScanConfig config;
    config.d = 2;
    config.n_samples = 10;
    config.seed = 5;
    CHECK(scan(config).evaluated == 10);  // no structured pairs below d = 4
    config.include_structured = true;
    // family {uniform, basis}: only the all-entangled pairs are applicable
    const ScanResult with_structured = scan(config);
    CHECK(with_structured.evaluated == 10 + 1);
    CHECK(with_structured.skipped_not_applicable == 3);
  }
  SUBCASE("config validation") {
    ScanConfig config;
    config.d = 1;
    CHECK_THROWS_AS(scan(config), std::invalid_argument);
    config.d = 40;  // 40^4 exceeds the register cap, violations could not be verified
    CHECK_THROWS_AS(scan(config), std::invalid_argument);
  }
}

TEST_CASE("per_index_inequality_check") {
  SUBCASE("uniform qutrits: equality at every offset") {
    const SchmidtCoeffs c = SchmidtCoeffs::make(
        std::vector<Complex>(3, 1.0 / std::sqrt(3.0)), SchmidtCoeffs::Normalize::kAuto);
    for (const PerIndexRow& row : per_index_inequality_check(c)) {
      CHECK(row.lhs == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(row.rhs == doctest::Approx(1.0).epsilon(1e-12));
      CHECK_FALSE(row.flagged);
    }
  }
  SUBCASE("qubits always sit at equality") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
      const auto rows = per_index_inequality_check(test::random_schmidt(2, rng, true));
      REQUIRE(rows.size() == 1);
      CHECK(rows[0].lhs == doctest::Approx(rows[0].rhs).epsilon(1e-12));
      CHECK_FALSE(rows[0].flagged);
    }
  }
  SUBCASE("structured d = 4 vector is flagged at offset 2") {
    const SchmidtCoeffs c = structured_periodic_family(QuditDim(4))[1];
    const auto rows = per_index_inequality_check(c);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].delta == 2);
    CHECK(rows[1].lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[1].rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rows[1].flagged);
    CHECK_FALSE(rows[0].flagged);  // offsets 1 and 3 carry lhs 0
    CHECK(rows[0].lhs == doctest::Approx(0.0));
  }
  SUBCASE("lhs depends on (j, k) only through the offset") {
    std::mt19937_64 rng(83);
    const SchmidtCoeffs c = test::random_schmidt(5, rng, true);
    const auto rows = per_index_inequality_check(c);
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        if (j == k) continue;
        double lhs = 0.0;
        for (int p = 0; p < 5; ++p) lhs += c.modulus((p + j) % 5) * c.modulus((p + k) % 5);
        const int delta = ((k - j) % 5 + 5) % 5;
        CHECK(std::abs(lhs - rows[static_cast<std::size_t>(delta - 1)].lhs) < 1e-12);
      }
    }
  }
  SUBCASE("the ratio never exceeds the worst per-offset quotient") {
    std::mt19937_64 rng(89);
    for (int d : {3, 4, 5, 6}) {
      for (int trial = 0; trial < 50; ++trial) {
        const SchmidtCoeffs xi = test::random_schmidt(d, rng, true);
        const SchmidtCoeffs eta = test::random_schmidt(d, rng, true);
        double worst = 0.0;
        for (const PerIndexRow& row : per_index_inequality_check(xi)) {
          worst = std::max(worst, row.lhs / row.rhs);
        }
        CHECK(ratio(xi, eta) <= worst + 1e-9);
      }
    }
  }
}

TEST_CASE("violations satisfy the proven bounds even when the hypothesis fails") {
  const SchmidtCoeffs c = structured_periodic_family(QuditDim(4))[1];
  const BoundReport bounds = evaluate_bounds(c, c);
  CHECK_FALSE(bounds.conjecture_holds);
  CHECK(bounds.eta_bound_holds);
  CHECK(bounds.xi_bound_holds);
  CHECK(bounds.product_bound_holds);
  CHECK(bounds.per_outcome_bounds_hold);
}
