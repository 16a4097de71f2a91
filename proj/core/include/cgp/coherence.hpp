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
#include <span>
#include <vector>

#include "cgp/linalg.hpp"

// Skew-information coherence with respect to the computational basis {|k>}.

namespace cgp {

struct BasisIndex {
  std::size_t k;
};

/// I(rho, |k><k|) = -1/2 Tr [sqrt(rho), |k><k|]^2.
///
/// Evaluated as sum_{j != k} |<k|sqrt(rho)|j>|^2, which equals
/// <k|rho|k> - <k|sqrt(rho)|k>^2 and is nonnegative term by term.
double skew_information(const DensityOperator& rho, BasisIndex k);

/// All N skew informations from a single eigendecomposition.
std::vector<double> skew_informations(const DensityOperator& rho);

/// C_S(rho) = 1 - sum_k <k|sqrt(rho)|k>^2, in [0, 1 - 1/N].
double c_s(const DensityOperator& rho);

/// C_S of a state given its principal square root.
double c_s_from_sqrt(const ComplexMatrix& sqrt_rho);

/// Precomputed |U_ki|^2 for repeated evaluation of C_S(U diag(lambda) U^dagger)
/// without an eigensolve.
class ConjugationWeights {
 public:
  static constexpr double kUnitaryTol = 1e-10;

  /// Throws Errc::kNotUnitary if `u` fails is_unitary at kUnitaryTol.
  static ConjugationWeights from_unitary(const ComplexMatrix& u);

  std::size_t dim() const noexcept { return n_; }

  /// `lambdas` must already be a valid distribution of length dim(); only the
  /// length is checked here.
  double c_s(std::span<const double> lambdas) const;

 private:
  ConjugationWeights(std::size_t n, std::vector<double> w) : n_(n), weights_(std::move(w)) {}
  std::size_t n_;
  std::vector<double> weights_;  // row-major |U_ki|^2
};

/// C_S(U diag(lambdas) U^dagger) = 1 - sum_k (sum_i |U_ki|^2 sqrt(lambda_i))^2.
///
/// Throws Errc::kNotUnitary or Errc::kInvalidDistribution on bad input.
double c_s_diagonal_conjugated(const ComplexMatrix& u, std::span<const double> lambdas);

/// Throws Errc::kInvalidDistribution unless entries are >= 0 and sum to 1 within tol.
void require_distribution(std::span<const double> p, double tol = 1e-10);

}  // namespace cgp
