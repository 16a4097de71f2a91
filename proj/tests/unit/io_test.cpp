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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgp/error.hpp"

namespace cgp {
namespace {

using nlohmann::json;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected cgp::Error";
  return Errc::kNonFinite;
}

TEST(MatrixJson, RoundTrip) {
  const auto m = ComplexMatrix::from_rows({{Complex{1.0, 2.0}, 3.0}, {0.0, Complex{0.0, -1.5}}});
  const json j = matrix_to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["data"][1][0], 3.0);
  EXPECT_EQ(matrix_from_json(j), m);
}

TEST(MatrixJson, MalformedInputs) {
  EXPECT_EQ(code_of([] { matrix_from_json(json::array()); }), Errc::kParseError);
  EXPECT_EQ(code_of([] { matrix_from_json(json::parse(R"({"rows":1,"cols":1})")); }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              matrix_from_json(json::parse(R"({"rows":2,"cols":1,"data":[[1,0]]})"));
            }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[[1]]})"));
            }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              matrix_from_json(json::parse(R"({"rows":-1,"cols":1,"data":[]})"));
            }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[["a",0]]})"));
            }),
            Errc::kParseError);
}

TEST(ChannelJson, RoundTripAllKinds) {
  for (const Channel& phi : {hadamard(), amplitude_damping(0.4, false), depolarizing(0.2)}) {
    const Channel back = channel_from_json(channel_to_json(phi));
    EXPECT_EQ(back.kind(), phi.kind());
    EXPECT_EQ(channel_to_json(back), channel_to_json(phi));
  }
}

TEST(ChannelJson, Errors) {
  EXPECT_EQ(code_of([] { channel_from_json(json::parse(R"({"matrices":[]})")); }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              channel_from_json(json::parse(
                  R"({"type":"teleport","matrices":[{"rows":1,"cols":1,"data":[[1,0]]}]})"));
            }),
            Errc::kParseError);
  EXPECT_EQ(code_of([] {
              channel_from_json(json::parse(
                  R"({"type":"mixed_unitary","matrices":[{"rows":1,"cols":1,"data":[[1,0]]}]})"));
            }),
            Errc::kParseError);
  // Structurally valid but not unitary: the channel factory reports it.
  EXPECT_EQ(code_of([] {
              channel_from_json(json::parse(
                  R"({"type":"unitary","matrices":[{"rows":1,"cols":1,"data":[[2,0]]}]})"));
            }),
            Errc::kNotUnitary);
}

TEST(ReadJsonFile, MissingAndInvalidFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  EXPECT_EQ(code_of([&] { read_json_file(dir / "cgp_does_not_exist.json"); }), Errc::kParseError);
  const auto bad = dir / "cgp_io_test_bad.json";
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(code_of([&] { read_json_file(bad); }), Errc::kParseError);
  const auto good = dir / "cgp_io_test_good.json";
  std::ofstream(good) << R"({"x": 1})";
  EXPECT_EQ(read_json_file(good)["x"], 1);
  std::filesystem::remove(bad);
  std::filesystem::remove(good);
}

TEST(Csv, HeaderAndPrecision) {
  Table t{{"a", "b"}, {{1.0, 0.1}, {2.0, 1.0 / 3.0}}};
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_EQ(out.str(), "a,b\n1,0.10000000000000001\n2,0.33333333333333331\n");
}

TEST(McEstimateJson, OmitsWallTime) {
  McEstimate e;
  e.mean = 0.25;
  e.wall_time = 3.0;
  const json j = to_json(e);
  EXPECT_EQ(j["mean"], 0.25);
  EXPECT_FALSE(j.contains("wall_time"));
}

}  // namespace
}  // namespace cgp
