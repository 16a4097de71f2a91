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

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "cgp/linalg.hpp"

namespace cgp {

struct UnitaryChannel {
  ComplexMatrix u;
};

struct KrausChannel {
  std::vector<ComplexMatrix> ops;
};

struct MixedUnitaryChannel {
  std::vector<double> weights;
  std::vector<ComplexMatrix> unitaries;
};

/// A quantum channel in one of three representations. Instances can only be
/// built through the validating factories, so every Channel satisfies its
/// representation's invariant.
class Channel {
 public:
  using Variant = std::variant<UnitaryChannel, KrausChannel, MixedUnitaryChannel>;

  static constexpr double kUnitaryTol = 1e-10;
  static constexpr double kKrausTol = 1e-9;
  static constexpr double kWeightTol = 1e-10;
  static constexpr double kOutputTol = 1e-9;

  static Channel unitary(ComplexMatrix u);
  static Channel kraus(std::vector<ComplexMatrix> ops);
  static Channel mixed_unitary(std::vector<double> weights, std::vector<ComplexMatrix> unitaries);

  std::size_t dim() const noexcept { return dim_; }
  const Variant& variant() const noexcept { return repr_; }
  std::string_view kind() const noexcept;

  /// The matrix of a Unitary channel; Errc::kWrongChannelVariant otherwise.
  const ComplexMatrix& unitary_matrix() const;

  DensityOperator apply(const DensityOperator& rho) const;

 private:
  Channel(std::size_t dim, Variant repr) : dim_(dim), repr_(std::move(repr)) {}
  std::size_t dim_;
  Variant repr_;
};

inline DensityOperator apply(const Channel& phi, const DensityOperator& rho) {
  return phi.apply(rho);
}

// Named gates. Entries follow the standard printed forms, including global phase.

Channel identity(std::size_t n);
Channel hadamard();
/// [[cos t, sin t], [-sin t, cos t]].
Channel rotation(double theta);
Channel sqrt_swap();
/// sqrt(t) I + i sqrt(1 - t) SWAP on two qubits, t in [0, 1].
Channel partial_swap(double t);
/// <s|F|t> = exp(2 pi i s t / n) / sqrt(n) with s, t = 1..n.
Channel fourier(std::size_t n);

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
ComplexMatrix pauli(int m);

/// rho -> sum_m p_m sigma_m rho sigma_m, stored as a mixed-unitary channel.
Channel pauli_channel(std::array<double, 4> p);
Channel bit_flip(double p);
Channel phase_flip(double p);
Channel bit_phase_flip(double p);
/// p_1 = p_2 = p_3 = p, p_0 = 1 - 3p; requires p in [0, 1/3].
Channel depolarizing(double p);

/// Kraus pair E1 = diag(1, sqrt(1 - gamma)) with E2 = diag(0, sqrt(gamma)) when
/// `unital`, else E2 = sqrt(gamma) |0><1| (decay |1> -> |0>).
Channel amplitude_damping(double gamma, bool unital);

}  // namespace cgp
