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

#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cgp/coherence.hpp"
#include "cgp/error.hpp"
#include "cgp/experiments.hpp"
#include "cgp/generating_power.hpp"
#include "cgp/io.hpp"
#include "cgp/sampling.hpp"

namespace cgp::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

[[noreturn]] void bad_input(const std::string& what) { throw Error(Errc::kInvalidParameter, what); }

double parse_double(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    bad_input("cannot parse '" + std::string(text) + "' as a number in '" + std::string(context) +
              "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    bad_input("cannot parse '" + std::string(text) + "' as a count in '" + std::string(context) +
              "'");
  }
  return value;
}

struct Spec {
  std::string name;
  std::optional<std::string> arg;
};

Spec split_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {std::string(spec), std::nullopt};
  return {std::string(spec.substr(0, colon)), std::string(spec.substr(colon + 1))};
}

std::string require_arg(const Spec& s) {
  if (!s.arg || s.arg->empty()) bad_input("'" + s.name + "' needs a parameter, e.g. " + s.name + ":0.5");
  return *s.arg;
}

void forbid_arg(const Spec& s) {
  if (s.arg) bad_input("'" + s.name + "' takes no parameter");
}

std::optional<Channel> try_gate(const Spec& s, std::string_view full) {
  if (s.name == "hadamard") {
    forbid_arg(s);
    return hadamard();
  }
  if (s.name == "sqrt_swap") {
    forbid_arg(s);
    return sqrt_swap();
  }
  if (s.name == "rotation") return rotation(parse_double(require_arg(s), full));
  if (s.name == "partial_swap") return partial_swap(parse_double(require_arg(s), full));
  if (s.name == "fourier") return fourier(parse_count(require_arg(s), full));
  if (s.name == "identity") return identity(parse_count(require_arg(s), full));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Output helpers

struct Sink {
  std::ostream& stdout_stream;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      stdout_stream << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) bad_input("cannot open '" + path + "' for writing");
    file << text;
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Verification suites

struct Check {
  std::string name;
  double value;
  double expected;
  double tolerance;
  bool passed;
};

json to_json(const Check& c) {
  return {{"name", c.name},
          {"value", c.value},
          {"expected", c.expected},
          {"tolerance", c.tolerance},
          {"passed", c.passed}};
}

Check near(std::string name, double value, double expected, double tolerance) {
  return {std::move(name), value, expected, tolerance, std::abs(value - expected) <= tolerance};
}

Check mc_near(std::string name, const McEstimate& est, double expected) {
  return near(std::move(name), est.mean, expected, std::max(3.0 * est.std_error, 1e-4));
}

struct SuiteContext {
  std::uint64_t seed;
  std::size_t samples;
  std::size_t points;
  ExecutionPolicy policy;
};

std::vector<Check> suite_constants() {
  const double f2 = 1.0 - 3.0 * kPi / 16.0;
  const double f3 = 1.0 - 103.0 * kPi / 512.0;
  const double f4 = 1.0 - 54545.0 * kPi / 262144.0;
  return {
      near("F2", dimension_factor(2), f2, 1e-12),
      near("F3", dimension_factor(3), f3, 1e-12),
      near("F4", dimension_factor(4), f4, 1e-12),
      near("cgp_hadamard", cgp_unitary(hadamard()), 0.5 * f2, 1e-12),
      near("cgp_sqrt_swap", cgp_unitary(sqrt_swap()), 0.25 * f4, 1e-12),
      near("cgp_max_3", cgp_max(3), (2.0 / 3.0) * f3, 1e-12),
      near("cgp_max_1024_in_[0.27,0.285]", cgp_max(1024), 0.2775, 0.0075),
  };
}

std::vector<Check> suite_oracles(const SuiteContext& ctx) {
  const double f2 = 1.0 - 3.0 * kPi / 16.0;
  std::vector<Check> out;
  out.push_back(near("quadrature_hadamard", quadrature_cgp_n2(hadamard(), ctx.points), 0.5 * f2,
                     1e-8));
  const double s = std::sin(kPi / 4.0);
  out.push_back(near("quadrature_rotation_pi/8", quadrature_cgp_n2(rotation(kPi / 8.0), ctx.points),
                     0.5 * f2 * s * s, 1e-8));
  out.push_back(near("quadrature_node_halving", quadrature_cgp_n2(hadamard(), ctx.points / 2),
                     quadrature_cgp_n2(hadamard(), ctx.points), 1e-9));
  const RngStream root(ctx.seed);
  for (std::uint64_t i = 0; i < 20; ++i) {
    RngStream rs = root.substream(i);
    const Channel phi = Channel::unitary(sample_haar_unitary(2, rs));
    out.push_back(near("quadrature_haar_" + std::to_string(i), quadrature_cgp_n2(phi, ctx.points),
                       cgp_unitary(phi), 1e-8));
  }
  std::uint64_t stream = 1000;
  for (const char* name : {"hadamard", "fourier:3", "sqrt_swap"}) {
    const Channel phi = parse_gate(name);
    const McEstimate est = mc_cgp(phi, ctx.samples, root.substream(stream++), ctx.policy);
    out.push_back(mc_near(std::string("mc_") + name, est, cgp_unitary(phi)));
  }
  return out;
}

std::vector<Check> suite_mean(const SuiteContext& ctx) {
  const RngStream root(ctx.seed);
  std::vector<Check> out;
  out.push_back(mc_near("mean_cgp_2", mc_mean_cgp(2, ctx.samples, root.substream(0), ctx.policy),
                        mean_cgp(2)));
  out.push_back(mc_near("mean_cgp_4", mc_mean_cgp(4, ctx.samples, root.substream(1), ctx.policy),
                        mean_cgp(4)));
  for (std::size_t n : {2u, 4u, 8u}) {
    const double nd = static_cast<double>(n);
    out.push_back(mc_near("normalized_mean_" + std::to_string(n),
                          mc_mean_normalized_cgp(n, ctx.samples, root.substream(10 + n), ctx.policy),
                          nd / (nd + 1.0)));
  }
  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    const double nd = static_cast<double>(n);
    out.push_back(mc_near("haar_fourth_moment_" + std::to_string(n),
                          mc_haar_fourth_moment(n, ctx.samples, root.substream(20 + n), ctx.policy),
                          2.0 / (nd * (nd + 1.0))));
  }
  return out;
}

std::vector<Check> suite_typicality(const SuiteContext& ctx, json& curve) {
  const RngStream root(ctx.seed);
  std::vector<Check> out;
  double previous_variance = std::numeric_limits<double>::infinity();
  bool monotone = true;
  curve = json::array();
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
    const TypicalityResult r = typicality_experiment(n, ctx.samples, root.substream(n), ctx.policy);
    curve.push_back({{"n", r.n},
                     {"threshold", r.threshold},
                     {"fraction_above_threshold", r.fraction_above_threshold},
                     {"probability_bound", r.probability_bound},
                     {"mean", r.mean},
                     {"variance", r.variance}});
    out.push_back({"fraction_above_bound_" + std::to_string(n), r.fraction_above_threshold,
                   r.probability_bound, 0.0, r.holds});
    monotone = monotone && r.variance < previous_variance;
    previous_variance = r.variance;
  }
  out.push_back({"variance_decreasing", monotone ? 1.0 : 0.0, 1.0, 0.0, monotone});
  return out;
}

std::vector<Check> suite_mixed(const SuiteContext& ctx) {
  const RngStream root(ctx.seed);
  std::vector<Check> out;
  std::uint64_t stream = 0;
  auto check = [&](const std::string& name, const Channel& phi) {
    const MixedBoundCheck c = verify_mixed_unitary_bound(phi, ctx.samples, root.substream(stream++),
                                                         ctx.policy);
    // Reported as value = lower 3-sigma edge, expected = bound.
    out.push_back({name, c.mc.mean - 3.0 * c.mc.std_error, c.bound, 0.0, c.holds});
  };
  check("pauli_uniform", pauli_channel({0.25, 0.25, 0.25, 0.25}));
  check("bit_flip", bit_flip(0.3));
  check("phase_flip", phase_flip(0.3));
  check("bit_phase_flip", bit_phase_flip(0.3));
  check("depolarizing", depolarizing(0.2));
  check("hadamard_identity",
        Channel::mixed_unitary({0.5, 0.5}, {hadamard().unitary_matrix(), ComplexMatrix::identity(2)}));
  for (std::size_t n : {2u, 4u}) {
    for (std::uint64_t i = 0; i < 5; ++i) {
      RngStream rs = root.substream(1000000 + 100 * n + i);
      std::vector<double> w(3);
      double total = 0.0;
      for (double& x : w) {
        x = -std::log(rs.next_uniform());
        total += x;
      }
      for (double& x : w) x /= total;
      std::vector<ComplexMatrix> us;
      for (int m = 0; m < 3; ++m) us.push_back(sample_haar_unitary(n, rs));
      check("random_" + std::to_string(n) + "_" + std::to_string(i),
            Channel::mixed_unitary(std::move(w), std::move(us)));
    }
  }
  return out;
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("cgp", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CGP_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only honor it when asked for.
    if (level != spdlog::level::off || std::string_view(env) == "off") logger->set_level(level);
  }
  return logger;
}

}  // namespace

Channel parse_gate(std::string_view spec) {
  const Spec s = split_spec(spec);
  if (auto gate = try_gate(s, spec)) return *std::move(gate);
  bad_input("unknown gate '" + std::string(spec) +
            "'; expected hadamard, sqrt_swap, rotation:THETA, partial_swap:T, fourier:N or "
            "identity:N");
}

Channel parse_named_channel(std::string_view spec) {
  const Spec s = split_spec(spec);
  if (auto gate = try_gate(s, spec)) return *std::move(gate);
  if (s.name == "bit_flip") return bit_flip(parse_double(require_arg(s), spec));
  if (s.name == "phase_flip") return phase_flip(parse_double(require_arg(s), spec));
  if (s.name == "bit_phase_flip") return bit_phase_flip(parse_double(require_arg(s), spec));
  if (s.name == "depolarizing") return depolarizing(parse_double(require_arg(s), spec));
  if (s.name == "amplitude_damping") {
    return amplitude_damping(parse_double(require_arg(s), spec), false);
  }
  if (s.name == "amplitude_damping_unital") {
    return amplitude_damping(parse_double(require_arg(s), spec), true);
  }
  if (s.name == "pauli") {
    const std::string arg = require_arg(s);
    std::array<double, 4> p{};
    std::size_t count = 0;
    std::stringstream parts(arg);
    for (std::string item; std::getline(parts, item, ',');) {
      if (count == 4) bad_input("pauli takes exactly four probabilities");
      p[count++] = parse_double(item, spec);
    }
    if (count != 4) bad_input("pauli takes exactly four probabilities");
    return pauli_channel(p);
  }
  bad_input("unknown channel '" + std::string(spec) + "'");
}

ComplexMatrix polish_unitary(const ComplexMatrix& m) {
  if (!is_unitary(m, kFileUnitaryTol)) {
    throw Error(Errc::kNotUnitary, "matrix is not unitary within 1e-8 (max |U^dag U - I| entry)");
  }
  ComplexMatrix u = m;
  const ComplexMatrix three = 3.0 * ComplexMatrix::identity(m.rows());
  for (int iter = 0; iter < 8 && !is_unitary(u, 1e-14); ++iter) {
    u = 0.5 * (u * (three - u.adjoint() * u));
  }
  return u;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto log = make_logger(err);

  CLI::App app{"Coherence generating power of quantum channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cgp 0.1.0");

  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::string out_path;
  std::string format = "csv";
  unsigned threads = 0;
  std::optional<std::size_t> points;

  auto add_common = [&](CLI::App* cmd, bool randomized) {
    cmd->add_option("--out", out_path, "Write the result to this file instead of stdout");
    // Deterministic commands accept a seed too, so every JSON output can echo one.
    cmd->add_option("--seed", seed, "Random seed (default 0)");
    if (randomized) {
      cmd->add_option("--samples", samples, "Number of Monte Carlo samples")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--threads", threads, "Worker threads (0 = all cores); never changes results");
    }
  };

  // unitary
  auto* unitary_cmd = app.add_subcommand("unitary", "Closed-form CGP of a unitary channel");
  std::string gate;
  std::string matrix_file;
  auto* gate_opt = unitary_cmd->add_option(
      "--gate", gate, "hadamard | sqrt_swap | rotation:THETA | partial_swap:T | fourier:N | identity:N");
  auto* matrix_opt =
      unitary_cmd->add_option("--matrix", matrix_file, "Matrix JSON file {rows, cols, data}");
  gate_opt->excludes(matrix_opt);
  add_common(unitary_cmd, false);

  // mc
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo CGP over Hilbert-Schmidt incoherent states");
  std::string channel_file;
  std::string channel_name;
  auto* file_opt = mc_cmd->add_option("--channel", channel_file, "Channel JSON file");
  auto* name_opt = mc_cmd->add_option(
      "--named", channel_name,
      "Named gate or channel, e.g. hadamard, bit_flip:0.2, pauli:0.7,0.1,0.1,0.1, "
      "amplitude_damping:0.3");
  file_opt->excludes(name_opt);
  add_common(mc_cmd, true);

  // figure
  auto* figure_cmd = app.add_subcommand("figure", "Emit figure data as CSV or JSON");
  std::string figure_name;
  unsigned max_exponent = 10;
  figure_cmd->add_option("which", figure_name, "fig1 | fig2 | fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  figure_cmd->add_option("--max-exponent", max_exponent, "fig1: largest m in N = 2^m");
  figure_cmd->add_option("--points", points, "fig2/fig3: grid size");
  figure_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  add_common(figure_cmd, false);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "constants | oracles | mean | typicality | mixed")
      ->required()
      ->check(CLI::IsMember({"constants", "oracles", "mean", "typicality", "mixed"}));
  verify_cmd->add_option("--points", points, "Quadrature nodes for the oracles suite");
  add_common(verify_cmd, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const ExecutionPolicy policy{.threads = resolve_threads(threads)};
  const Sink sink{out, out_path};

  try {
    if (unitary_cmd->parsed()) {
      if (gate.empty() == matrix_file.empty()) bad_input("give exactly one of --gate or --matrix");
      ComplexMatrix u = gate.empty() ? polish_unitary(matrix_from_json(read_json_file(matrix_file)))
                                     : parse_gate(gate).unitary_matrix();
      const std::size_t n = u.rows();
      if (n < 2) bad_input("CGP needs dimension >= 2");
      json j{{"seed", seed},
             {"source", gate.empty() ? matrix_file : gate},
             {"dimension", n},
             {"purity_sum", purity_sum(u)},
             {"cgp", cgp_unitary(u)},
             {"cgp_max", cgp_max(n)},
             {"normalized_cgp", normalized_cgp(u)},
             {"mean_cgp", mean_cgp(n)}};
      sink.write(dump(j));
      return kExitOk;
    }

    if (mc_cmd->parsed()) {
      if (channel_file.empty() == channel_name.empty()) {
        bad_input("give exactly one of --channel or --named");
      }
      const Channel phi = channel_file.empty() ? parse_named_channel(channel_name)
                                               : channel_from_json(read_json_file(channel_file));
      const std::size_t n_samples = samples.value_or(100000);
      log->info("mc: {} channel, dim {}, {} samples, seed {}, {} threads", phi.kind(), phi.dim(),
                n_samples, seed, policy.threads);
      const McEstimate est = mc_cgp(phi, n_samples, RngStream(seed), policy);
      log->info("mc: finished in {:.3f} s", est.wall_time);
      json j{{"channel", channel_file.empty() ? channel_name : channel_file},
             {"kind", std::string(phi.kind())},
             {"dimension", phi.dim()}};
      j.update(cgp::to_json(est));
      if (phi.kind() == "unitary") {
        const double exact = cgp_unitary(phi);
        j["analytic"] = exact;
        j["z_score"] = est.std_error > 0.0 ? (est.mean - exact) / est.std_error : 0.0;
      } else if (phi.kind() == "mixed_unitary") {
        j["mixed_unitary_bound"] = mixed_unitary_bound(phi);
      }
      sink.write(dump(j));
      return kExitOk;
    }

    if (figure_cmd->parsed()) {
      const Figure which = figure_name == "fig1"   ? Figure::kMaxCgpVsDimension
                           : figure_name == "fig2" ? Figure::kRotation
                                                   : Figure::kPartialSwap;
      const Table table = figure_data(which, {.max_exponent = max_exponent,
                                              .points = points.value_or(0)});
      if (format == "json") {
        sink.write(dump({{"figure", figure_name},
                         {"seed", seed},
                         {"columns", table.columns},
                         {"rows", table.rows}}));
      } else {
        std::ostringstream csv;
        write_csv(csv, table);
        sink.write(csv.str());
      }
      return kExitOk;
    }

    // verify
    const std::size_t default_samples =
        suite == "typicality" ? 2000 : (suite == "mixed" ? 20000 : 100000);
    const SuiteContext ctx{seed, samples.value_or(default_samples),
                           points.value_or(kDefaultQuadraturePoints), policy};
    if (suite != "constants" && ctx.samples < kMinMcSamples) {
      bad_input("--samples must be at least " + std::to_string(kMinMcSamples));
    }
    log->info("verify {}: seed {}, {} samples", suite, ctx.seed, ctx.samples);
    json extra;
    std::vector<Check> checks;
    if (suite == "constants") {
      checks = suite_constants();
    } else if (suite == "oracles") {
      checks = suite_oracles(ctx);
    } else if (suite == "mean") {
      checks = suite_mean(ctx);
    } else if (suite == "typicality") {
      checks = suite_typicality(ctx, extra);
    } else {
      checks = suite_mixed(ctx);
    }
    const bool all_passed =
        std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    json report{{"suite", suite}, {"seed", seed}, {"passed", all_passed}, {"checks", json::array()}};
    if (suite != "constants") report["samples"] = ctx.samples;
    for (const Check& c : checks) {
      report["checks"].push_back(to_json(c));
      if (!c.passed) log->error("check {} failed: {} vs {}", c.name, c.value, c.expected);
    }
    if (!extra.is_null()) report["curve"] = extra;
    sink.write(dump(report));
    return all_passed ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace cgp::cli
