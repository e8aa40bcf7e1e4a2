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

#include "qswap/conjecture_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qswap/oracle.hpp"

namespace qswap {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QSWAP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SchmidtCoeffs simplex_coeffs(std::mt19937_64& rng, const std::vector<int>& support, int d) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> weights(support.size());
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& w : weights) {
      // -log(1 - u) is a standard exponential; flat Dirichlet after scaling
      w = -std::log1p(-uniform(rng));
      sum += w;
    }
  } while (sum <= 0.0);

  std::vector<Complex> coeffs(static_cast<std::size_t>(d), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < support.size(); ++i) {
    coeffs[static_cast<std::size_t>(support[i])] = std::sqrt(weights[i] / sum);
  }
  return SchmidtCoeffs::make(std::move(coeffs), SchmidtCoeffs::Normalize::kAuto);
}

struct SampleOutcome {
  std::optional<double> ratio;  // nullopt: not applicable
  std::optional<SchmidtCoeffs> xi;
  std::optional<SchmidtCoeffs> eta;
  std::string source;
};

}  // namespace

std::string ScanResult::status() const {
  return violations.empty() ? "CONFIRMED-ON-SAMPLE" : "VIOLATED";
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  const std::uint64_t a = splitmix64_next(x);
  const std::uint64_t b = splitmix64_next(x);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

std::vector<SchmidtCoeffs> structured_periodic_family(QuditDim d) {
  const int n = d.value();
  std::vector<SchmidtCoeffs> family;
  for (int stride = 1; stride <= n; ++stride) {
    if (n % stride != 0) continue;
    const int k = n / stride;
    std::vector<Complex> coeffs(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    const double w = 1.0 / std::sqrt(static_cast<double>(k));
    for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i * stride)] = w;
    family.push_back(SchmidtCoeffs::make(std::move(coeffs), SchmidtCoeffs::Normalize::kAuto));
  }
  return family;
}

SchmidtCoeffs sample_coeffs(QuditDim d, std::uint64_t seed, std::uint64_t index,
                            SampleDistribution distribution, int sparse_k) {
  const int n = d.value();
  switch (distribution) {
    case SampleDistribution::kUniformSimplex: {
      std::mt19937_64 rng = sample_stream(seed, index);
      std::vector<int> support(static_cast<std::size_t>(n));
      std::iota(support.begin(), support.end(), 0);
      return simplex_coeffs(rng, support, n);
    }
    case SampleDistribution::kSparseSupport: {
      if (sparse_k < 2 || sparse_k > n) {
        throw std::invalid_argument("sparse support size must satisfy 2 <= k <= d");
      }
      std::mt19937_64 rng = sample_stream(seed, index);
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      std::vector<int> support;
      std::sample(all.begin(), all.end(), std::back_inserter(support), sparse_k, rng);
      return simplex_coeffs(rng, support, n);
    }
    case SampleDistribution::kStructuredPeriodic: {
      const std::vector<SchmidtCoeffs> family = structured_periodic_family(d);
      return family[static_cast<std::size_t>(index % family.size())];
    }
  }
  throw std::invalid_argument("unknown sample distribution");
}

double ratio(const SchmidtCoeffs& xi, const SchmidtCoeffs& eta) {
  if (xi.dim() != eta.dim()) {
    throw std::invalid_argument("both inputs must have the same qudit dimension");
  }
  const double product = xi.entanglement_l1() * eta.entanglement_l1();
  if (product <= 1e-12) {
    throw std::domain_error("ratio not applicable: initial entanglement product is zero");
  }
  return average_entanglement(xi, eta) * (xi.dim() - 1) / product;
}

ScanResult scan(const ScanConfig& config) {
  if (config.d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (config.n_samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const std::int64_t total_dim = static_cast<std::int64_t>(config.d) * config.d * config.d * config.d;
  if (total_dim > kMaxRegisterDim) {
    throw std::invalid_argument("dimension too large: violations could not be re-verified");
  }
  const QuditDim d(config.d);
  const bool with_structured = config.include_structured.value_or(config.d >= 4);

  // Evaluation list: structured cross product first, then random samples.
  std::vector<SampleOutcome> outcomes;
  std::int64_t structured_pairs = 0;
  if (with_structured) {
    const std::vector<SchmidtCoeffs> family = structured_periodic_family(d);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        SampleOutcome out;
        out.source = "structured:" + std::to_string(i) + "," + std::to_string(j);
        out.xi = family[i];
        out.eta = family[j];
        outcomes.push_back(std::move(out));
      }
    }
    structured_pairs = static_cast<std::int64_t>(outcomes.size());
  }
  outcomes.resize(static_cast<std::size_t>(structured_pairs + config.n_samples));

  auto evaluate_one = [](SampleOutcome& out) {
    try {
      out.ratio = ratio(*out.xi, *out.eta);
    } catch (const std::domain_error&) {
      out.ratio = std::nullopt;
    }
  };
  for (std::int64_t i = 0; i < structured_pairs; ++i) {
    evaluate_one(outcomes[static_cast<std::size_t>(i)]);
  }

  const int threads = static_cast<int>(std::min<std::int64_t>(
      resolve_threads(config.threads), std::max<std::int64_t>(config.n_samples, 1)));
  auto evaluate_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      SampleOutcome& out = outcomes[static_cast<std::size_t>(structured_pairs + i)];
      out.source = "sample:" + std::to_string(i);
      out.xi = sample_coeffs(d, config.seed, static_cast<std::uint64_t>(2 * i),
                             config.distribution, config.sparse_k);
      out.eta = sample_coeffs(d, config.seed, static_cast<std::uint64_t>(2 * i + 1),
                              config.distribution, config.sparse_k);
      evaluate_one(out);
    }
  };
  if (threads <= 1 || config.n_samples < 2) {
    evaluate_range(0, config.n_samples);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (config.n_samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, config.n_samples);
      if (begin >= end) break;
      pool.emplace_back(evaluate_range, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  // Aggregate in index order so reductions (argmax tie-breaking in
  // particular) cannot depend on thread scheduling.
  ScanResult result;
  result.config = config;
  for (SampleOutcome& out : outcomes) {
    if (!out.ratio) {
      ++result.skipped_not_applicable;
      continue;
    }
    ++result.evaluated;
    if (*out.ratio > result.max_ratio) {
      result.max_ratio = *out.ratio;
      result.argmax_xi = *out.xi;
      result.argmax_eta = *out.eta;
    }
    if (std::abs(*out.ratio - 1.0) <= config.tol) ++result.saturation_count;
    if (*out.ratio > 1.0 + config.tol) {
      const double deviation = compare(*out.xi, *out.eta);
      result.violations.push_back(ScanViolation{*out.xi, *out.eta, *out.ratio, out.source,
                                                deviation < 1e-9, deviation});
    }
  }
  return result;
}

std::vector<PerIndexRow> per_index_inequality_check(const SchmidtCoeffs& c, double tol) {
  const int d = c.dim();
  const double rhs = c.entanglement_l1() / (d - 1);
  std::vector<PerIndexRow> rows;
  rows.reserve(static_cast<std::size_t>(d) - 1);
  for (int delta = 1; delta < d; ++delta) {
    double lhs = 0.0;
    for (int p = 0; p < d; ++p) {
      lhs += c.modulus(p) * c.modulus((p + delta) % d);
    }
    rows.push_back(PerIndexRow{delta, lhs, rhs, lhs > rhs + tol});
  }
  return rows;
}

}  // namespace qswap
