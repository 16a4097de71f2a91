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

#include "cgp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cgp/error.hpp"

namespace cgp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kNonFinite: return "NonFinite";
    case Errc::kNotHermitian: return "NotHermitian";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kNotUnitary: return "NotUnitary";
    case Errc::kNotDensityOperator: return "NotDensityOperator";
    case Errc::kInvalidDistribution: return "InvalidDistribution";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidParameter: return "InvalidParameter";
    case Errc::kWrongChannelVariant: return "WrongChannelVariant";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(Errc::kInvalidParameter, "matrix dimensions must be positive");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::kDimensionMismatch,
                "shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

double max_hermitian_defect(const ComplexMatrix& m) {
  double defect = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return defect;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_((require_shape(rows, cols), rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_shape(rows, cols);
  if (data_.size() != rows * cols) {
    throw Error(Errc::kDimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                              " does not match " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(Errc::kNonFinite, "matrix entry is not finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::kDimensionMismatch, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(Errc::kDimensionMismatch, "inner dimensions differ in matrix product");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && max_hermitian_defect(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // (M†M)_ij is the inner product of columns i and j.
      Complex dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += std::conj(m(k, i)) * m(k, j);
      if (i == j) dot -= 1.0;
      if (!(std::abs(dot) <= tol)) return false;
    }
  }
  return true;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw Error(Errc::kDimensionMismatch, "eigensolve needs a square matrix");
  const double defect = max_hermitian_defect(m);
  if (!(defect <= tol)) {
    throw Error(Errc::kNotHermitian,
                "matrix is not Hermitian: max |M - M^dagger| = " + std::to_string(defect) +
                    " exceeds tolerance " + std::to_string(tol));
  }

  const std::size_t n = m.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double negligible = 1e-18 * frobenius_norm(a);

  bool converged = n == 1;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (mag <= negligible || mag <= eps * std::sqrt(std::abs(app * aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;

        // Reduce the 2x2 block to a real symmetric one via the phase of g,
        // then apply the classical Jacobi rotation.
        const Complex phase = g / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex s_conj_phase = s * std::conj(phase);
        const Complex c_conj_phase = c * std::conj(phase);

        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - s_conj_phase * aiq;
          a(i, q) = s * aip + c_conj_phase * aiq;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s_conj_phase * viq;
          v(i, q) = s * vip + c_conj_phase * viq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * apj + c * phase * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw Error(Errc::kNoConvergence, "Jacobi eigensolver did not converge within " +
                                          std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

DensityOperator DensityOperator::from_psd_matrix(ComplexMatrix m, double tol) {
  if (!m.is_square()) throw Error(Errc::kNotDensityOperator, "density operator must be square");
  const double defect = max_hermitian_defect(m);
  if (!(defect <= tol)) {
    throw Error(Errc::kNotHermitian, "density operator not Hermitian: max |M - M^dagger| = " +
                                         std::to_string(defect));
  }
  const Complex tr = m.trace();
  if (!(std::abs(tr - 1.0) <= tol)) {
    throw Error(Errc::kNotDensityOperator,
                "density operator trace " + std::to_string(tr.real()) + " differs from 1");
  }
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::from_matrix(ComplexMatrix m) {
  DensityOperator rho = from_psd_matrix(std::move(m));
  const HermitianEigen eig = hermitian_eig(rho.matrix_);
  if (eig.eigenvalues.front() < -kTol) {
    throw Error(Errc::kNotDensityOperator,
                "density operator has eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  return rho;
}

DensityOperator DensityOperator::diagonal(std::span<const double> probabilities) {
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw Error(Errc::kInvalidDistribution, "negative probability");
    total += p;
  }
  if (!(std::abs(total - 1.0) <= kTol)) {
    throw Error(Errc::kInvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  return DensityOperator(ComplexMatrix::diagonal(probabilities));
}

ComplexMatrix principal_sqrt(const DensityOperator& rho) {
  const HermitianEigen eig = hermitian_eig(rho.matrix());
  const std::size_t n = rho.dim();
  // Eigenvalues at the solver's rounding level carry no information, yet the
  // square root would amplify them to ~1e-8. Treat them as exact zeros.
  const double noise = 8.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                       std::max(eig.eigenvalues.back(), 0.0);
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -kPsdClampTol) {
      throw Error(Errc::kNotDensityOperator,
                  "eigenvalue " + std::to_string(lambda) + " below PSD clamp tolerance");
    }
    roots[k] = lambda <= noise ? 0.0 : std::sqrt(lambda);
  }
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * roots[k] * std::conj(v(j, k));
      if (i == j) {
        out(i, i) = sum.real();
      } else {
        out(i, j) = sum;
        out(j, i) = std::conj(sum);
      }
    }
  }
  return out;
}

}  // namespace cgp
