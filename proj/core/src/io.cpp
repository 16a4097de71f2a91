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

#include "cgp/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "cgp/error.hpp"

namespace cgp {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::kParseError, what); }

std::size_t read_dimension(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    parse_error(std::string("matrix field '") + key + "' must be a positive integer");
  }
  const auto value = j[key].get<std::size_t>();
  if (value == 0) parse_error(std::string("matrix field '") + key + "' must be positive");
  return value;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("matrix must be a JSON object");
  const std::size_t rows = read_dimension(j, "rows");
  const std::size_t cols = read_dimension(j, "cols");
  if (!j.contains("data") || !j["data"].is_array()) parse_error("matrix field 'data' must be an array");
  const auto& data = j["data"];
  if (data.size() != rows * cols) {
    parse_error("matrix 'data' has " + std::to_string(data.size()) + " entries, expected " +
                std::to_string(rows * cols));
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const auto& z : data) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      parse_error("matrix entries must be [re, im] number pairs");
    }
    entries.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (const Complex& z : m.entries()) data.push_back({z.real(), z.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Channel channel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_error("channel must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) parse_error("channel field 'type' missing");
  if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].empty()) {
    parse_error("channel field 'matrices' must be a nonempty array");
  }
  std::vector<ComplexMatrix> mats;
  for (const auto& m : j["matrices"]) mats.push_back(matrix_from_json(m));

  const auto type = j["type"].get<std::string>();
  if (type == "unitary") {
    if (mats.size() != 1) parse_error("unitary channel takes exactly one matrix");
    return Channel::unitary(std::move(mats.front()));
  }
  if (type == "kraus") return Channel::kraus(std::move(mats));
  if (type == "mixed_unitary") {
    if (!j.contains("weights") || !j["weights"].is_array()) {
      parse_error("mixed_unitary channel needs a 'weights' array");
    }
    std::vector<double> weights;
    for (const auto& w : j["weights"]) {
      if (!w.is_number()) parse_error("weights must be numbers");
      weights.push_back(w.get<double>());
    }
    return Channel::mixed_unitary(std::move(weights), std::move(mats));
  }
  parse_error("unknown channel type '" + type + "'");
}

nlohmann::json channel_to_json(const Channel& phi) {
  nlohmann::json out;
  out["type"] = std::string(phi.kind());
  nlohmann::json mats = nlohmann::json::array();
  std::visit(
      [&](const auto& repr) {
        using T = std::decay_t<decltype(repr)>;
        if constexpr (std::is_same_v<T, UnitaryChannel>) {
          mats.push_back(matrix_to_json(repr.u));
        } else if constexpr (std::is_same_v<T, KrausChannel>) {
          for (const auto& k : repr.ops) mats.push_back(matrix_to_json(k));
        } else {
          for (const auto& u : repr.unitaries) mats.push_back(matrix_to_json(u));
          out["weights"] = repr.weights;
        }
      },
      phi.variant());
  out["matrices"] = std::move(mats);
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  const auto old_precision = out.precision(17);
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
  out.precision(old_precision);
}

nlohmann::json to_json(const McEstimate& e) {
  return {{"mean", e.mean},
          {"std_error", e.std_error},
          {"n_samples", e.n_samples},
          {"seed", e.seed},
          {"stream_id", e.stream_id},
          {"min_sample", e.min_sample},
          {"max_sample", e.max_sample}};
}

}  // namespace cgp
