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
#include <memory>
#include <vector>

#include "cgp/channels.hpp"
#include "cgp/linalg.hpp"

// Closed-form coherence generating power (CGP) of unitary channels under the
// skew-information coherence, averaged over Hilbert-Schmidt incoherent states:
//
//   CGP(U) = F_N * (1 - (1/N) sum_{k,i} |U_ki|^4),
//   F_N    = 1 - B_N / (N^2 (N - 1)),
//   B_N    = (sum_k I_kk)^2 - sum_{k,l} I_kl^2,
//   I_kl   = (-1)^{k+l} sum_{r=0}^{min(k,l)} C(1/2, k-r) C(1/2, l-r) Gamma(3/2 + r) / r!
//
// with zero-based k, l in [0, N).

namespace cgp {

/// Generalized binomial C(1/2, m) by its finite product.
double half_binomial(unsigned m);

struct CoefficientTable {
  std::size_t n = 0;
  std::vector<double> table;  // row-major N x N, symmetric
  double bracket = 0.0;       // B_N
  double factor = 0.0;        // F_N

  double at(std::size_t k, std::size_t l) const { return table[k * n + l]; }
};

/// Builds the table from scratch. Requires n >= 2.
CoefficientTable compute_coefficient_table(std::size_t n);

/// Cached per dimension; safe for concurrent callers.
std::shared_ptr<const CoefficientTable> coefficient_table(std::size_t n);

/// F_N.
double dimension_factor(std::size_t n);

inline constexpr double kCgpUnitaryTol = 1e-10;

/// sum_{k,i} |U_ki|^4, in [1, N] for unitary U.
double purity_sum(const ComplexMatrix& u);

double cgp_unitary(const ComplexMatrix& u);
double cgp_unitary(const Channel& phi);

/// Upper bound CGP_N = (1 - 1/N) F_N, attained by unitaries with |U_ki|^2 = 1/N.
double cgp_max(std::size_t n);

/// Haar average of cgp_unitary over U(N): ((N - 1)/(N + 1)) F_N.
double mean_cgp(std::size_t n);

/// cgp_unitary(u) / cgp_max(N), in [0, 1].
double normalized_cgp(const ComplexMatrix& u);

/// sum_m p_m CGP(U_m); an upper bound on the CGP of a mixed-unitary channel by
/// convexity of C_S. Throws Errc::kWrongChannelVariant for other channels.
double mixed_unitary_bound(const Channel& phi);

}  // namespace cgp
