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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cgp/channels.hpp"
#include "cgp/linalg.hpp"

namespace cgp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Matrices read from files are accepted at this tolerance and then polished
/// to full unitarity before evaluation.
inline constexpr double kFileUnitaryTol = 1e-8;

/// hadamard, sqrt_swap, rotation:THETA, partial_swap:T, fourier:N, identity:N.
Channel parse_gate(std::string_view spec);

/// Any gate, plus bit_flip:P, phase_flip:P, bit_phase_flip:P, depolarizing:P,
/// pauli:P0,P1,P2,P3, amplitude_damping:G and amplitude_damping_unital:G.
Channel parse_named_channel(std::string_view spec);

/// Newton-Schulz iteration toward the nearest unitary; input must already be
/// unitary within kFileUnitaryTol.
ComplexMatrix polish_unitary(const ComplexMatrix& m);

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics and logs to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgp::cli
