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

#include "cgp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "cgp/coherence.hpp"
#include "cgp/error.hpp"

namespace cgp {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_positive(std::size_t n) {
  if (n == 0) throw Error(Errc::kInvalidParameter, "dimension must be positive");
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(mix64(seed ^ mix64(stream_id + kGolden))) {}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(seed_, mix64(stream_id_ + kGolden) + index);
}

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_uniform() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) noexcept {
  // Rejection keeps the result exactly uniform; the loop almost never repeats.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = next_u64();
  while (x < threshold) x = next_u64();
  return x % bound;
}

Complex RngStream::next_complex_gaussian() noexcept {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

IncoherentState::IncoherentState(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw Error(Errc::kInvalidParameter, "incoherent state needs dim >= 1");
  require_distribution(lambdas_, kTol);
}

ComplexMatrix sample_ginibre(std::size_t n, RngStream& rng) {
  require_positive(n);
  ComplexMatrix g(n, n);
  for (Complex& z : g.entries()) z = rng.next_complex_gaussian();
  return g;
}

ComplexMatrix sample_haar_unitary(std::size_t n, RngStream& rng) {
  ComplexMatrix q = sample_ginibre(n, rng);
  // Modified Gram-Schmidt over columns, two passes per column. Normalizing by
  // the positive column norm is what fixes the phase of R's diagonal.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, i)) * q(r, j);
        for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, j));
    const double inv = 1.0 / std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) q(r, j) *= inv;
  }
  return q;
}

namespace {

ComplexMatrix normalized_wishart(std::size_t n, RngStream& rng) {
  const ComplexMatrix g = sample_ginibre(n, rng);
  ComplexMatrix w(n, n);
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += g(i, k) * std::conj(g(j, k));
      if (i == j) {
        w(i, i) = sum.real();
        trace += sum.real();
      } else {
        w(i, j) = sum;
        w(j, i) = std::conj(sum);
      }
    }
  }
  w *= 1.0 / trace;
  return w;
}

}  // namespace

DensityOperator sample_hs_density(std::size_t n, RngStream& rng) {
  return DensityOperator::from_psd_matrix(normalized_wishart(n, rng), 1e-12);
}

IncoherentState sample_incoherent_hs(std::size_t n, RngStream& rng) {
  const ComplexMatrix w = normalized_wishart(n, rng);
  std::vector<double> lambdas = hermitian_eig(w).eigenvalues;
  double total = 0.0;
  for (double& x : lambdas) {
    x = std::max(x, 0.0);
    total += x;
  }
  for (double& x : lambdas) x /= total;
  // Fisher-Yates; the symmetric spectral measure needs an exchangeable order.
  for (std::size_t i = n; i > 1; --i) {
    std::swap(lambdas[i - 1], lambdas[rng.next_below(i)]);
  }
  return IncoherentState(std::move(lambdas));
}

HsNormalization hs_normalization(std::size_t n) {
  if (n < 2) throw Error(Errc::kInvalidParameter, "normalization needs n >= 2");
  const double nd = static_cast<double>(n);
  double log_value = std::lgamma(nd * nd) - std::lgamma(nd + 1.0);
  for (std::size_t j = 1; j <= n; ++j) log_value -= 2.0 * std::lgamma(static_cast<double>(j));
  HsNormalization out{log_value, std::nullopt};
  if (log_value < std::log(std::numeric_limits<double>::max())) out.value = std::exp(log_value);
  return out;
}

}  // namespace cgp
