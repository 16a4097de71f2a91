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

#include "cgp/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cgp/coherence.hpp"
#include "cgp/error.hpp"

namespace cgp {

namespace {

void require_unitary(const ComplexMatrix& u, double tol) {
  if (!is_unitary(u, tol)) {
    throw Error(Errc::kNotUnitary, "matrix is not unitary within " + std::to_string(tol));
  }
}

// U rho U^dagger accumulated into `out` with weight w.
void accumulate_conjugation(const ComplexMatrix& k, const ComplexMatrix& rho, double w,
                            ComplexMatrix& out) {
  const ComplexMatrix term = k * rho * k.adjoint();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += w * term(i, j);
  }
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(Errc::kInvalidParameter, std::string(name) + " must lie in [0, 1], got " +
                                             std::to_string(x));
  }
}

}  // namespace

Channel Channel::unitary(ComplexMatrix u) {
  require_unitary(u, kUnitaryTol);
  const std::size_t n = u.rows();
  return Channel(n, UnitaryChannel{std::move(u)});
}

Channel Channel::kraus(std::vector<ComplexMatrix> ops) {
  if (ops.empty()) throw Error(Errc::kInvalidParameter, "Kraus channel needs at least one operator");
  const std::size_t n = ops.front().rows();
  ComplexMatrix completeness(n, n);
  for (const ComplexMatrix& k : ops) {
    if (k.rows() != n || k.cols() != n) {
      throw Error(Errc::kDimensionMismatch, "Kraus operators must share one square shape");
    }
    completeness += k.adjoint() * k;
  }
  const double defect = max_abs(completeness - ComplexMatrix::identity(n));
  if (!(defect <= kKrausTol)) {
    throw Error(Errc::kInvalidParameter,
                "Kraus operators are not trace preserving: max |sum K^dagger K - I| = " +
                    std::to_string(defect));
  }
  return Channel(n, KrausChannel{std::move(ops)});
}

Channel Channel::mixed_unitary(std::vector<double> weights, std::vector<ComplexMatrix> unitaries) {
  if (unitaries.empty() || weights.size() != unitaries.size()) {
    throw Error(Errc::kInvalidParameter, "mixed-unitary channel needs one weight per unitary");
  }
  require_distribution(weights, kWeightTol);
  const std::size_t n = unitaries.front().rows();
  for (const ComplexMatrix& u : unitaries) {
    if (u.rows() != n || u.cols() != n) {
      throw Error(Errc::kDimensionMismatch, "unitaries must share one square shape");
    }
    require_unitary(u, kUnitaryTol);
  }
  return Channel(n, MixedUnitaryChannel{std::move(weights), std::move(unitaries)});
}

std::string_view Channel::kind() const noexcept {
  switch (repr_.index()) {
    case 0: return "unitary";
    case 1: return "kraus";
    default: return "mixed_unitary";
  }
}

const ComplexMatrix& Channel::unitary_matrix() const {
  if (const auto* u = std::get_if<UnitaryChannel>(&repr_)) return u->u;
  throw Error(Errc::kWrongChannelVariant, "channel is " + std::string(kind()) + ", not unitary");
}

DensityOperator Channel::apply(const DensityOperator& rho) const {
  if (rho.dim() != dim_) {
    throw Error(Errc::kDimensionMismatch, "channel dimension " + std::to_string(dim_) +
                                              " does not match state dimension " +
                                              std::to_string(rho.dim()));
  }
  ComplexMatrix out(dim_, dim_);
  if (const auto* u = std::get_if<UnitaryChannel>(&repr_)) {
    out = u->u * rho.matrix() * u->u.adjoint();
  } else if (const auto* k = std::get_if<KrausChannel>(&repr_)) {
    for (const ComplexMatrix& op : k->ops) accumulate_conjugation(op, rho.matrix(), 1.0, out);
  } else {
    const auto& mix = std::get<MixedUnitaryChannel>(repr_);
    for (std::size_t m = 0; m < mix.unitaries.size(); ++m) {
      if (mix.weights[m] == 0.0) continue;
      accumulate_conjugation(mix.unitaries[m], rho.matrix(), mix.weights[m], out);
    }
  }
  return DensityOperator::from_psd_matrix(std::move(out), kOutputTol);
}

Channel identity(std::size_t n) {
  if (n == 0) throw Error(Errc::kInvalidParameter, "identity dimension must be positive");
  return Channel::unitary(ComplexMatrix::identity(n));
}

Channel hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return Channel::unitary(ComplexMatrix::from_rows({{h, h}, {h, -h}}));
}

Channel rotation(double theta) {
  if (!std::isfinite(theta)) throw Error(Errc::kInvalidParameter, "rotation angle must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Channel::unitary(ComplexMatrix::from_rows({{c, s}, {-s, c}}));
}

Channel sqrt_swap() {
  const Complex a{0.5, 0.5};
  const Complex b{0.5, -0.5};
  return Channel::unitary(ComplexMatrix::from_rows(
      {{1.0, 0.0, 0.0, 0.0}, {0.0, a, b, 0.0}, {0.0, b, a, 0.0}, {0.0, 0.0, 0.0, 1.0}}));
}

Channel partial_swap(double t) {
  require_unit_interval(t, "partial swap parameter t");
  const Complex d{std::sqrt(t), std::sqrt(1.0 - t)};
  const Complex r = std::sqrt(t);
  const Complex x{0.0, std::sqrt(1.0 - t)};
  return Channel::unitary(ComplexMatrix::from_rows(
      {{d, 0.0, 0.0, 0.0}, {0.0, r, x, 0.0}, {0.0, x, r, 0.0}, {0.0, 0.0, 0.0, d}}));
}

Channel fourier(std::size_t n) {
  if (n < 2) throw Error(Errc::kInvalidParameter, "Fourier dimension must be at least 2");
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t t = 1; t <= n; ++t) {
      // Reduce s*t mod n first so the angle stays exact for large n.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((s * t) % n) /
                           static_cast<double>(n);
      f(s - 1, t - 1) = std::polar(scale, angle);
    }
  }
  return Channel::unitary(std::move(f));
}

ComplexMatrix pauli(int m) {
  const Complex i{0.0, 1.0};
  switch (m) {
    case 0: return ComplexMatrix::identity(2);
    case 1: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 2: return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case 3: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    default: throw Error(Errc::kInvalidParameter, "Pauli index must be 0..3");
  }
}

Channel pauli_channel(std::array<double, 4> p) {
  std::vector<ComplexMatrix> sigmas;
  for (int m = 0; m < 4; ++m) sigmas.push_back(pauli(m));
  return Channel::mixed_unitary(std::vector<double>(p.begin(), p.end()), std::move(sigmas));
}

Channel bit_flip(double p) {
  require_unit_interval(p, "flip probability");
  return pauli_channel({1.0 - p, p, 0.0, 0.0});
}

Channel phase_flip(double p) {
  require_unit_interval(p, "flip probability");
  return pauli_channel({1.0 - p, 0.0, 0.0, p});
}

Channel bit_phase_flip(double p) {
  require_unit_interval(p, "flip probability");
  return pauli_channel({1.0 - p, 0.0, p, 0.0});
}

Channel depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0 / 3.0)) {
    throw Error(Errc::kInvalidParameter, "depolarizing p must lie in [0, 1/3]");
  }
  return pauli_channel({1.0 - 3.0 * p, p, p, p});
}

Channel amplitude_damping(double gamma, bool unital) {
  require_unit_interval(gamma, "damping gamma");
  const double keep = std::sqrt(1.0 - gamma);
  const double decay = std::sqrt(gamma);
  ComplexMatrix e1 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, keep}});
  ComplexMatrix e2 = unital ? ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, decay}})
                            : ComplexMatrix::from_rows({{0.0, decay}, {0.0, 0.0}});
  return Channel::kraus({std::move(e1), std::move(e2)});
}

}  // namespace cgp
