// Copyright 2026 The cgp Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cgp/channels.hpp"
#include "cgp/sampling.hpp"

namespace cgp {

/// Result of a Monte Carlo run. Sample i always draws from
/// `RngStream(seed, stream_id).substream(i)`, so the estimate is a function of
/// (seed, stream_id, n_samples) alone.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n_samples)
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double min_sample = 0.0;
  double max_sample = 0.0;
  double wall_time = 0.0;  // seconds

  double variance() const {
    return std_error * std_error * static_cast<double>(n_samples);
  }
};

/// Threads change wall time only. Chunks have a fixed size and are merged in
/// index order, so results are bit-identical for any thread count.
struct ExecutionPolicy {
  unsigned threads = 1;
  std::size_t chunk_size = 2048;
};

inline constexpr std::size_t kMinMcSamples = 100;

/// One Monte Carlo draw of C_S(phi(Lambda)) with Lambda ~ sample_incoherent_hs.
double sample_generated_coherence(const Channel& phi, RngStream& rng);

/// Monte Carlo CGP. Unitary channels skip the eigensolve; Kraus and
/// mixed-unitary channels take the principal square root of each output.
McEstimate mc_cgp(const Channel& phi, std::size_t n_samples, const RngStream& rng,
                  const ExecutionPolicy& policy = {});

/// C_S of a qubit state via the closed-form 2x2 square root
/// sqrt(rho) = (rho + sqrt(det rho) I) / sqrt(1 + 2 sqrt(det rho)).
double qubit_coherence(const ComplexMatrix& rho);

inline constexpr std::size_t kDefaultQuadraturePoints = 256;

/// Deterministic CGP of a qubit channel:
///   int_0^1 3 (2 lambda - 1)^2 C_S(phi(diag(lambda, 1 - lambda))) d lambda,
/// by Gauss-Legendre after lambda = (1 - cos u) / 2, which removes the
/// square-root endpoint behaviour of the integrand. Uses no eigensolver.
double quadrature_cgp_n2(const Channel& phi, std::size_t n_points = kDefaultQuadraturePoints);

/// Haar average of cgp_unitary, one closed-form evaluation per draw.
McEstimate mc_mean_cgp(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                       const ExecutionPolicy& policy = {});

/// Haar average of normalized_cgp.
McEstimate mc_mean_normalized_cgp(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                                  const ExecutionPolicy& policy = {});

/// Haar average of |U_00|^4.
McEstimate mc_haar_fourth_moment(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                                 const ExecutionPolicy& policy = {});

struct TypicalityResult {
  std::size_t n = 0;
  std::size_t n_unitaries = 0;
  double threshold = 0.0;        // 1 - 2 / n^{1/3}
  double fraction_above_threshold = 0.0;
  double probability_bound = 0.0;  // 1 - exp(-n^{1/3} / 256)
  double mean = 0.0;             // of normalized_cgp
  double variance = 0.0;         // of normalized_cgp
  bool holds = false;            // fraction >= probability_bound
};

/// Empirical concentration of normalized_cgp over Haar unitaries.
TypicalityResult typicality_experiment(std::size_t n, std::size_t n_unitaries,
                                       const RngStream& rng, const ExecutionPolicy& policy = {});

struct MixedBoundCheck {
  McEstimate mc;
  double bound = 0.0;
  bool holds = false;  // mc.mean - 3 mc.std_error <= bound
};

MixedBoundCheck verify_mixed_unitary_bound(const Channel& phi, std::size_t n_samples,
                                           const RngStream& rng,
                                           const ExecutionPolicy& policy = {});

enum class Figure { kMaxCgpVsDimension, kRotation, kPartialSwap };

struct FigureParams {
  unsigned max_exponent = 10;  // kMaxCgpVsDimension: N = 2^1 .. 2^max_exponent
  std::size_t points = 0;      // grid size; 0 picks 181 (rotation) or 101 (partial swap)
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// kMaxCgpVsDimension: (N, cgp_max(N)); kRotation: (theta, CGP) on [0, pi];
/// kPartialSwap: (t, CGP) on [0, 1].
Table figure_data(Figure which, const FigureParams& params = {});

}  // namespace cgp
