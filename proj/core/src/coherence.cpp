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

#include "cgp/coherence.hpp"

#include <cmath>
#include <string>

#include "cgp/error.hpp"

namespace cgp {

void require_distribution(std::span<const double> p, double tol) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw Error(Errc::kInvalidDistribution, "distribution has a negative entry");
    total += x;
  }
  if (!(std::abs(total - 1.0) <= tol)) {
    throw Error(Errc::kInvalidDistribution,
                "distribution sums to " + std::to_string(total) + ", not 1");
  }
}

namespace {

double off_diagonal_row_mass(const ComplexMatrix& s, std::size_t k) {
  double mass = 0.0;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    if (j != k) mass += std::norm(s(k, j));
  }
  return mass;
}

}  // namespace

double skew_information(const DensityOperator& rho, BasisIndex k) {
  if (k.k >= rho.dim()) {
    throw Error(Errc::kInvalidParameter, "basis index " + std::to_string(k.k) +
                                             " out of range for dimension " +
                                             std::to_string(rho.dim()));
  }
  return off_diagonal_row_mass(principal_sqrt(rho), k.k);
}

std::vector<double> skew_informations(const DensityOperator& rho) {
  const ComplexMatrix s = principal_sqrt(rho);
  std::vector<double> out(rho.dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = off_diagonal_row_mass(s, k);
  return out;
}

double c_s_from_sqrt(const ComplexMatrix& sqrt_rho) {
  double total = 0.0;
  for (std::size_t k = 0; k < sqrt_rho.rows(); ++k) total += off_diagonal_row_mass(sqrt_rho, k);
  return total;
}

double c_s(const DensityOperator& rho) { return c_s_from_sqrt(principal_sqrt(rho)); }

ConjugationWeights ConjugationWeights::from_unitary(const ComplexMatrix& u) {
  if (!is_unitary(u, kUnitaryTol)) {
    throw Error(Errc::kNotUnitary, "matrix is not unitary within " + std::to_string(kUnitaryTol));
  }
  std::vector<double> w(u.rows() * u.cols());
  for (std::size_t k = 0; k < u.rows(); ++k) {
    for (std::size_t i = 0; i < u.cols(); ++i) w[k * u.cols() + i] = std::norm(u(k, i));
  }
  return ConjugationWeights(u.rows(), std::move(w));
}

double ConjugationWeights::c_s(std::span<const double> lambdas) const {
  if (lambdas.size() != n_) {
    throw Error(Errc::kDimensionMismatch, "spectrum length does not match unitary dimension");
  }
  // Row k of |U|^2 is a probability vector, so sum_k [<k|rho|k> - <k|sqrt(rho)|k>^2]
  // is a sum of variances of sqrt(lambda) under those rows. The variance form is
  // nonnegative by construction and exactly zero for monomial unitaries.
  thread_local std::vector<double> roots;
  roots.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) roots[i] = std::sqrt(lambdas[i]);
  double total = 0.0;
  for (std::size_t k = 0; k < n_; ++k) {
    const double* row = weights_.data() + k * n_;
    double mean = 0.0;
    for (std::size_t i = 0; i < n_; ++i) mean += row[i] * roots[i];
    double var = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = roots[i] - mean;
      var += row[i] * d * d;
    }
    total += var;
  }
  return total;
}

double c_s_diagonal_conjugated(const ComplexMatrix& u, std::span<const double> lambdas) {
  const ConjugationWeights weights = ConjugationWeights::from_unitary(u);
  require_distribution(lambdas);
  return weights.c_s(lambdas);
}

}  // namespace cgp
