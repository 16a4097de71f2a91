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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cgp {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Construction from external data rejects
/// empty shapes and non-finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

double frobenius_norm(const ComplexMatrix& m);
/// Largest entry modulus.
double max_abs(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol);
/// True iff `m` is square and max |(M†M − I)_ij| <= tol.
bool is_unitary(const ComplexMatrix& m, double tol);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Throws Errc::kNotHermitian when max |M − M†| exceeds `tol`, and
/// Errc::kNoConvergence if the off-diagonal mass has not vanished after
/// kMaxJacobiSweeps sweeps. The input is symmetrized before iterating.
HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol = kHermitianTol);

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityOperator {
 public:
  static constexpr double kTol = 1e-10;

  /// Full validation, including an eigensolve for the PSD check.
  static DensityOperator from_matrix(ComplexMatrix m);

  /// For matrices that are PSD by construction (G G†, channel outputs):
  /// only Hermiticity and trace are checked, at `tol`.
  static DensityOperator from_psd_matrix(ComplexMatrix m, double tol = kTol);

  static DensityOperator diagonal(std::span<const double> probabilities);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Eigenvalues in [−1e-10, 0) are clamped to zero before the square root;
/// anything more negative is rejected as Errc::kNotDensityOperator. Positive
/// eigenvalues at rounding level (8·n·eps·λ_max) are also taken as zero.
inline constexpr double kPsdClampTol = 1e-10;

ComplexMatrix principal_sqrt(const DensityOperator& rho);

}  // namespace cgp
