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

#include <filesystem>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "cgp/channels.hpp"
#include "cgp/experiments.hpp"
#include "cgp/linalg.hpp"

// File formats.
//
// Matrix:  {"rows": R, "cols": C, "data": [[re, im], ...]}   row-major, R*C pairs
// Channel: {"type": "unitary" | "kraus" | "mixed_unitary",
//           "matrices": [<matrix>, ...],
//           "weights": [p, ...]}                               mixed_unitary only

namespace cgp {

/// Errc::kParseError on malformed input.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Errc::kParseError on malformed input; channel invariants are enforced by
/// the Channel factories and raise their own codes.
Channel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const Channel& phi);

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Header row, then one line per row. Values use 17 significant digits.
void write_csv(std::ostream& out, const Table& table);

/// Omits wall_time so that reports are reproducible byte for byte.
nlohmann::json to_json(const McEstimate& estimate);

}  // namespace cgp
