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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cgp/error.hpp"
#include "support/test_support.hpp"

namespace cgp {
namespace {

using testing::random_density;
using testing::random_distribution;
using testing::random_unitary;

constexpr Complex kI{0.0, 1.0};

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected cgp::Error";
  return Errc::kParseError;
}

void expect_matrix_near(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      EXPECT_LE(std::abs(a(i, j) - b(i, j)), tol) << "(" << i << "," << j << ")";
    }
  }
}

TEST(Channel, UnitaryRejectsNonUnitary) {
  const std::vector<double> d{1.0, 1.0 + 1e-8};
  EXPECT_EQ(code_of([&] { Channel::unitary(ComplexMatrix::diagonal(d)); }), Errc::kNotUnitary);
  EXPECT_EQ(code_of([] { Channel::unitary(ComplexMatrix(2, 3)); }), Errc::kNotUnitary);
}

TEST(Channel, KrausRequiresCompleteness) {
  const std::vector<double> half{std::sqrt(0.5), std::sqrt(0.5)};
  const ComplexMatrix k = ComplexMatrix::diagonal(half);
  EXPECT_NO_THROW(Channel::kraus({k, k}));
  EXPECT_EQ(code_of([&] { Channel::kraus({k}); }), Errc::kInvalidParameter);
  EXPECT_EQ(code_of([&] { Channel::kraus({k, ComplexMatrix::identity(3)}); }),
            Errc::kDimensionMismatch);
  EXPECT_EQ(code_of([] { Channel::kraus({}); }), Errc::kInvalidParameter);
}

TEST(Channel, MixedUnitaryValidatesWeights) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  EXPECT_EQ(code_of([&] { Channel::mixed_unitary({0.5, 0.6}, {id, id}); }),
            Errc::kInvalidDistribution);
  EXPECT_EQ(code_of([&] { Channel::mixed_unitary({1.2, -0.2}, {id, id}); }),
            Errc::kInvalidDistribution);
  EXPECT_EQ(code_of([&] { Channel::mixed_unitary({1.0}, {id, id}); }), Errc::kInvalidParameter);
  const std::vector<double> d{1.0, 2.0};
  EXPECT_EQ(code_of([&] { Channel::mixed_unitary({0.5, 0.5}, {id, ComplexMatrix::diagonal(d)}); }),
            Errc::kNotUnitary);
}

TEST(Channel, KindAndVariantAccess) {
  EXPECT_EQ(hadamard().kind(), "unitary");
  EXPECT_EQ(amplitude_damping(0.2, true).kind(), "kraus");
  EXPECT_EQ(bit_flip(0.2).kind(), "mixed_unitary");
  EXPECT_EQ(code_of([] { (void)bit_flip(0.2).unitary_matrix(); }), Errc::kWrongChannelVariant);
}

TEST(Apply, IdentityLeavesStateUnchanged) {
  std::mt19937_64 gen(1);
  const ComplexMatrix rho = random_density(3, gen);
  const auto out = apply(identity(3), DensityOperator::from_matrix(rho));
  expect_matrix_near(out.matrix(), rho, 1e-15);
}

TEST(Apply, HadamardOnGroundStateGivesPlus) {
  const std::vector<double> ground{1.0, 0.0};
  const auto out = apply(hadamard(), DensityOperator::diagonal(ground));
  const auto plus = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  expect_matrix_near(out.matrix(), plus, 1e-15);
}

TEST(Apply, DimensionMismatch) {
  const std::vector<double> p{0.5, 0.25, 0.25};
  EXPECT_EQ(code_of([&] { apply(hadamard(), DensityOperator::diagonal(p)); }),
            Errc::kDimensionMismatch);
}

TEST(Apply, FullyDepolarizingPauliChannelGivesMaximallyMixed) {
  std::mt19937_64 gen(2);
  const auto out = apply(pauli_channel({0.25, 0.25, 0.25, 0.25}),
                         DensityOperator::from_matrix(random_density(2, gen)));
  expect_matrix_near(out.matrix(), 0.5 * ComplexMatrix::identity(2), 1e-14);
}

// Property: trace and Hermiticity survive every channel type.
TEST(Apply, PreservesTraceAndHermiticity) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    Channel phi = identity(n);
    switch (trial % 4) {
      case 0:
        phi = Channel::unitary(random_unitary(n, gen));
        break;
      case 1: {
        std::vector<ComplexMatrix> us{random_unitary(n, gen), random_unitary(n, gen),
                                      random_unitary(n, gen)};
        phi = Channel::mixed_unitary(random_distribution(3, gen), std::move(us));
        break;
      }
      case 2: {
        // Kraus set from a random isometry split into blocks.
        const ComplexMatrix big = random_unitary(2 * n, gen);
        std::vector<ComplexMatrix> ops(2, ComplexMatrix(n, n));
        for (std::size_t b = 0; b < 2; ++b) {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) ops[b](i, j) = big(b * n + i, j);
          }
        }
        phi = Channel::kraus(std::move(ops));
        break;
      }
      default:
        phi = amplitude_damping(unit(gen), trial % 8 == 3);
        break;
    }
    const std::size_t d = phi.dim();
    const ComplexMatrix rho = random_density(d, gen);
    const ComplexMatrix out = phi.apply(DensityOperator::from_matrix(rho)).matrix();
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-9);
    EXPECT_TRUE(is_hermitian(out, 1e-9));
  }
}

TEST(Apply, UnitaryPreservesSpectrum) {
  std::mt19937_64 gen(4);
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
    std::vector<double> p = random_distribution(n, gen);
    const auto out =
        apply(Channel::unitary(random_unitary(n, gen)), DensityOperator::diagonal(p));
    const std::vector<double> spectrum = hermitian_eig(out.matrix()).eigenvalues;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(spectrum[i], p[i], 1e-9);
  }
}

TEST(Gates, AllUnitaryToTightTolerance) {
  for (const Channel& g : {hadamard(), rotation(0.3), sqrt_swap(), partial_swap(0.37),
                           fourier(2), fourier(5), fourier(16), identity(4)}) {
    EXPECT_TRUE(is_unitary(g.unitary_matrix(), 1e-12));
  }
}

TEST(Gates, RotationEntries) {
  const double theta = 0.4;
  const ComplexMatrix u = rotation(theta).unitary_matrix();
  EXPECT_DOUBLE_EQ(u(0, 0).real(), std::cos(theta));
  EXPECT_DOUBLE_EQ(u(0, 1).real(), std::sin(theta));
  EXPECT_DOUBLE_EQ(u(1, 0).real(), -std::sin(theta));
  EXPECT_DOUBLE_EQ(u(1, 1).real(), std::cos(theta));
}

TEST(Gates, PartialSwapAtOneIsDiagonalPhase) {
  const ComplexMatrix u = partial_swap(1.0).unitary_matrix();
  expect_matrix_near(u, ComplexMatrix::identity(4), 1e-15);
}

TEST(Gates, PartialSwapAtZeroIsISwapTimesI) {
  const ComplexMatrix u = partial_swap(0.0).unitary_matrix();
  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  expect_matrix_near(u, kI * swap, 1e-15);
}

TEST(Gates, PartialSwapRejectsOutOfRange) {
  EXPECT_EQ(code_of([] { partial_swap(-0.1); }), Errc::kInvalidParameter);
  EXPECT_EQ(code_of([] { partial_swap(1.1); }), Errc::kInvalidParameter);
}

TEST(Gates, SqrtSwapSquaresToSwap) {
  const ComplexMatrix u = sqrt_swap().unitary_matrix();
  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  expect_matrix_near(u * u, swap, 1e-15);
}

TEST(Gates, FourierTwoHasUniformModuli) {
  const ComplexMatrix f = fourier(2).unitary_matrix();
  for (const Complex& z : f.entries()) EXPECT_NEAR(std::norm(z), 0.5, 1e-15);
  const double h = 1.0 / std::numbers::sqrt2;
  // s,t in {1,2}: phase exp(i pi s t) gives [[-1, 1], [1, 1]] / sqrt2.
  expect_matrix_near(f, ComplexMatrix::from_rows({{-h, h}, {h, h}}), 1e-15);
}

TEST(Gates, FourierEntriesFollowPhaseFormula) {
  const std::size_t n = 7;
  const ComplexMatrix f = fourier(n).unitary_matrix();
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t t = 1; t <= n; ++t) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(s * t) / 7.0;
      EXPECT_LE(std::abs(f(s - 1, t - 1) - std::polar(1.0 / std::sqrt(7.0), angle)), 1e-14);
    }
  }
  EXPECT_EQ(code_of([] { fourier(1); }), Errc::kInvalidParameter);
}

TEST(Pauli, MatricesSquareToIdentity) {
  for (int m = 0; m < 4; ++m) {
    expect_matrix_near(pauli(m) * pauli(m), ComplexMatrix::identity(2), 0.0);
  }
  EXPECT_THROW(pauli(4), Error);
}

TEST(PauliChannel, TrivialWeightsGiveIdentityAction) {
  std::mt19937_64 gen(5);
  const ComplexMatrix rho = random_density(2, gen);
  const auto out = apply(pauli_channel({1.0, 0.0, 0.0, 0.0}), DensityOperator::from_matrix(rho));
  expect_matrix_near(out.matrix(), rho, 1e-15);
  EXPECT_EQ(code_of([] { pauli_channel({0.5, 0.5, 0.5, 0.0}); }), Errc::kInvalidDistribution);
}

TEST(PauliChannel, NamedFamiliesMapDiagonalToDiagonal) {
  const std::vector<double> p{0.7, 0.3};
  for (const Channel& phi : {bit_flip(0.2), phase_flip(0.4), bit_phase_flip(0.1),
                             depolarizing(0.3)}) {
    const ComplexMatrix out = apply(phi, DensityOperator::diagonal(p)).matrix();
    EXPECT_EQ(std::abs(out(0, 1)), 0.0);
    EXPECT_EQ(std::abs(out(1, 0)), 0.0);
  }
  EXPECT_EQ(code_of([] { depolarizing(0.4); }), Errc::kInvalidParameter);
}

TEST(AmplitudeDamping, UnitalFixesDiagonalStates) {
  const std::vector<double> p{0.35, 0.65};
  const auto out = apply(amplitude_damping(0.6, true), DensityOperator::diagonal(p));
  expect_matrix_near(out.matrix(), ComplexMatrix::diagonal(p), 1e-15);
}

TEST(AmplitudeDamping, NonunitalMovesPopulationDown) {
  const double gamma = 0.3;
  const std::vector<double> p{0.35, 0.65};
  const auto out = apply(amplitude_damping(gamma, false), DensityOperator::diagonal(p));
  const std::vector<double> expected{0.35 + gamma * 0.65, (1.0 - gamma) * 0.65};
  expect_matrix_near(out.matrix(), ComplexMatrix::diagonal(expected), 1e-15);
}

TEST(AmplitudeDamping, RejectsGammaOutsideUnitInterval) {
  EXPECT_EQ(code_of([] { amplitude_damping(-0.01, true); }), Errc::kInvalidParameter);
  EXPECT_EQ(code_of([] { amplitude_damping(1.01, false); }), Errc::kInvalidParameter);
}

}  // namespace
}  // namespace cgp
