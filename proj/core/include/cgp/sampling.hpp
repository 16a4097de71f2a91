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
#include <optional>
#include <span>
#include <vector>

#include "cgp/linalg.hpp"

namespace cgp {

/// Counter-based SplitMix64 stream keyed by (seed, stream_id).
///
/// The i-th output depends only on the key and i, so a stream can be split
/// into per-sample substreams without coordination between threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t position() const noexcept { return counter_; }

  /// Independent stream for sample `index`; shares the seed.
  RngStream substream(std::uint64_t index) const;

  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double next_uniform() noexcept;
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept;
  /// Standard complex Gaussian (real and imaginary parts each of variance 1/2).
  /// Consumes exactly two uniforms via Box-Muller.
  Complex next_complex_gaussian() noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Diagonal of an incoherent state: nonnegative, summing to one.
class IncoherentState {
 public:
  static constexpr double kTol = 1e-12;

  explicit IncoherentState(std::vector<double> lambdas);

  std::size_t dim() const noexcept { return lambdas_.size(); }
  std::span<const double> lambdas() const noexcept { return lambdas_; }
  DensityOperator to_density() const { return DensityOperator::diagonal(lambdas_); }

 private:
  std::vector<double> lambdas_;
};

/// n x n matrix of i.i.d. standard complex Gaussians, row-major draw order.
ComplexMatrix sample_ginibre(std::size_t n, RngStream& rng);

/// Haar-distributed unitary: Gram-Schmidt QR of a Ginibre draw with the
/// diagonal of R taken real positive.
ComplexMatrix sample_haar_unitary(std::size_t n, RngStream& rng);

/// G G^dagger / Tr(G G^dagger), Hilbert-Schmidt distributed.
DensityOperator sample_hs_density(std::size_t n, RngStream& rng);

/// Spectrum of a sample_hs_density draw taken from the same stream position,
/// then uniformly permuted with further draws from `rng`.
IncoherentState sample_incoherent_hs(std::size_t n, RngStream& rng);

struct HsNormalization {
  double log_value;
  std::optional<double> value;  // empty if exp(log_value) overflows
};

/// C_N = Gamma(N^2) / (Gamma(N + 1) prod_{j=1}^{N} Gamma(j)^2), via lgamma.
HsNormalization hs_normalization(std::size_t n);

}  // namespace cgp
