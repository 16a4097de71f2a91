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

#include "cgp/experiments.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "cgp/coherence.hpp"
#include "cgp/error.hpp"
#include "cgp/generating_power.hpp"

namespace cgp {

namespace {

struct RunningStats {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
    min = std::min(min, x);
    max = std::max(max, x);
  }

  void merge(const RunningStats& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double delta = other.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    count += other.count;
    min = std::min(min, other.min);
    max = std::max(max, other.max);
  }
};

// Runs chunk_fn(chunk_index, begin, end) over fixed-size chunks of [0, n).
template <class ChunkFn>
void for_each_chunk(std::size_t n, const ExecutionPolicy& policy, ChunkFn&& chunk_fn) {
  const std::size_t chunk = std::max<std::size_t>(policy.chunk_size, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(policy.threads, 1u), chunks));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        chunk_fn(c, c * chunk, std::min(n, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

template <class SampleFn>
McEstimate run_estimate(std::size_t n, const RngStream& rng, const ExecutionPolicy& policy,
                        SampleFn&& sample) {
  if (n < kMinMcSamples) {
    throw Error(Errc::kInvalidParameter, "Monte Carlo runs need at least " +
                                             std::to_string(kMinMcSamples) + " samples");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t chunk = std::max<std::size_t>(policy.chunk_size, 1);
  std::vector<RunningStats> partial((n + chunk - 1) / chunk);
  for_each_chunk(n, policy, [&](std::size_t c, std::size_t begin, std::size_t end) {
    RunningStats stats;
    for (std::size_t i = begin; i < end; ++i) {
      RngStream stream = rng.substream(i);
      stats.add(sample(stream));
    }
    partial[c] = stats;
  });
  RunningStats total;
  for (const RunningStats& s : partial) total.merge(s);

  McEstimate out;
  out.mean = total.mean;
  out.n_samples = total.count;
  out.std_error = std::sqrt(total.m2 / static_cast<double>(total.count - 1)) /
                  std::sqrt(static_cast<double>(total.count));
  out.seed = rng.seed();
  out.stream_id = rng.stream_id();
  out.min_sample = total.min;
  out.max_sample = total.max;
  out.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double fourth_power_sum(const ComplexMatrix& u) {
  double total = 0.0;
  for (const Complex& z : u.entries()) {
    const double p = std::norm(z);
    total += p * p;
  }
  return total;
}

void require_mc_dimension(std::size_t n) {
  if (n < 2) throw Error(Errc::kInvalidParameter, "dimension must be at least 2");
}

}  // namespace

double sample_generated_coherence(const Channel& phi, RngStream& rng) {
  const IncoherentState lambda = sample_incoherent_hs(phi.dim(), rng);
  if (const auto* u = std::get_if<UnitaryChannel>(&phi.variant())) {
    return c_s_diagonal_conjugated(u->u, lambda.lambdas());
  }
  return c_s(phi.apply(lambda.to_density()));
}

McEstimate mc_cgp(const Channel& phi, std::size_t n_samples, const RngStream& rng,
                  const ExecutionPolicy& policy) {
  const std::size_t n = phi.dim();
  if (const auto* u = std::get_if<UnitaryChannel>(&phi.variant())) {
    const ConjugationWeights weights = ConjugationWeights::from_unitary(u->u);
    return run_estimate(n_samples, rng, policy, [&](RngStream& s) {
      return weights.c_s(sample_incoherent_hs(n, s).lambdas());
    });
  }
  return run_estimate(n_samples, rng, policy, [&](RngStream& s) {
    return c_s(phi.apply(sample_incoherent_hs(n, s).to_density()));
  });
}

double qubit_coherence(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw Error(Errc::kDimensionMismatch, "qubit_coherence needs a 2x2 matrix");
  }
  const double off = std::norm(rho(0, 1));
  const double det = rho(0, 0).real() * rho(1, 1).real() - off;
  const double trace = rho(0, 0).real() + rho(1, 1).real();
  // Off-diagonal mass of sqrt(rho) = (rho + s I) / sqrt(Tr rho + 2 s), s = sqrt(det).
  return 2.0 * off / (trace + 2.0 * std::sqrt(std::max(det, 0.0)));
}

double quadrature_cgp_n2(const Channel& phi, std::size_t n_points) {
  if (phi.dim() != 2) {
    throw Error(Errc::kDimensionMismatch, "quadrature oracle is defined for qubit channels");
  }
  if (n_points < 64) throw Error(Errc::kInvalidParameter, "quadrature needs at least 64 points");

  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(n_points), &gsl_integration_glfixed_table_free);
  if (!table) throw Error(Errc::kInvalidParameter, "could not build Gauss-Legendre table");

  double total = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    double u = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(0.0, std::numbers::pi, i, &u, &w, table.get());
    const double s = std::sin(0.5 * u);
    const double c = std::cos(0.5 * u);
    const std::vector<double> lambdas{s * s, c * c};
    const double cos_u = std::cos(u);
    // 3 (2 lambda - 1)^2 d lambda = 3 cos^2 u * (sin u / 2) du
    const double density = 3.0 * cos_u * cos_u * 0.5 * std::sin(u);
    const DensityOperator out = phi.apply(DensityOperator::diagonal(lambdas));
    total += w * density * qubit_coherence(out.matrix());
  }
  return total;
}

McEstimate mc_mean_cgp(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                       const ExecutionPolicy& policy) {
  require_mc_dimension(n);
  const double factor = dimension_factor(n);
  const double nd = static_cast<double>(n);
  return run_estimate(n_unitaries, rng, policy, [&](RngStream& s) {
    return factor * (1.0 - fourth_power_sum(sample_haar_unitary(n, s)) / nd);
  });
}

McEstimate mc_mean_normalized_cgp(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                                  const ExecutionPolicy& policy) {
  require_mc_dimension(n);
  const double nd = static_cast<double>(n);
  // CGP / CGP_N = (1 - S/N) / (1 - 1/N) = (N - S) / (N - 1)
  return run_estimate(n_unitaries, rng, policy, [&](RngStream& s) {
    return (nd - fourth_power_sum(sample_haar_unitary(n, s))) / (nd - 1.0);
  });
}

McEstimate mc_haar_fourth_moment(std::size_t n, std::size_t n_unitaries, const RngStream& rng,
                                 const ExecutionPolicy& policy) {
  if (n == 0) throw Error(Errc::kInvalidParameter, "dimension must be positive");
  return run_estimate(n_unitaries, rng, policy, [&](RngStream& s) {
    const double p = std::norm(sample_haar_unitary(n, s)(0, 0));
    return p * p;
  });
}

TypicalityResult typicality_experiment(std::size_t n, std::size_t n_unitaries,
                                       const RngStream& rng, const ExecutionPolicy& policy) {
  require_mc_dimension(n);
  if (n_unitaries < kMinMcSamples) {
    throw Error(Errc::kInvalidParameter, "typicality needs at least " +
                                             std::to_string(kMinMcSamples) + " unitaries");
  }
  const double nd = static_cast<double>(n);
  std::vector<double> values(n_unitaries);
  for_each_chunk(n_unitaries, policy, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RngStream s = rng.substream(i);
      values[i] = (nd - fourth_power_sum(sample_haar_unitary(n, s))) / (nd - 1.0);
    }
  });

  TypicalityResult out;
  out.n = n;
  out.n_unitaries = n_unitaries;
  out.threshold = 1.0 - 2.0 / std::cbrt(nd);
  out.probability_bound = 1.0 - std::exp(-std::cbrt(nd) / 256.0);
  RunningStats stats;
  std::size_t above = 0;
  for (double v : values) {
    stats.add(v);
    if (v >= out.threshold) ++above;
  }
  out.fraction_above_threshold = static_cast<double>(above) / static_cast<double>(n_unitaries);
  out.mean = stats.mean;
  out.variance = stats.m2 / static_cast<double>(stats.count - 1);
  out.holds = out.fraction_above_threshold >= out.probability_bound;
  return out;
}

MixedBoundCheck verify_mixed_unitary_bound(const Channel& phi, std::size_t n_samples,
                                           const RngStream& rng, const ExecutionPolicy& policy) {
  MixedBoundCheck out;
  out.bound = mixed_unitary_bound(phi);
  out.mc = mc_cgp(phi, n_samples, rng, policy);
  out.holds = out.mc.mean - 3.0 * out.mc.std_error <= out.bound;
  return out;
}

Table figure_data(Figure which, const FigureParams& params) {
  Table out;
  switch (which) {
    case Figure::kMaxCgpVsDimension: {
      if (params.max_exponent < 1 || params.max_exponent > 11) {
        throw Error(Errc::kInvalidParameter, "max exponent must lie in [1, 11]");
      }
      out.columns = {"N", "cgp_max"};
      for (unsigned m = 1; m <= params.max_exponent; ++m) {
        const std::size_t n = std::size_t{1} << m;
        out.rows.push_back({static_cast<double>(n), cgp_max(n)});
      }
      break;
    }
    case Figure::kRotation:
    case Figure::kPartialSwap: {
      const bool rot = which == Figure::kRotation;
      const std::size_t points = params.points == 0 ? (rot ? 181 : 101) : params.points;
      if (points < 2) throw Error(Errc::kInvalidParameter, "figure grid needs at least 2 points");
      out.columns = {rot ? "theta" : "t", "cgp"};
      const double span = rot ? std::numbers::pi : 1.0;
      for (std::size_t i = 0; i < points; ++i) {
        const double x = i + 1 == points
                             ? span
                             : span * static_cast<double>(i) / static_cast<double>(points - 1);
        const double y = cgp_unitary(rot ? rotation(x) : partial_swap(x));
        out.rows.push_back({x, y});
      }
      break;
    }
  }
  return out;
}

}  // namespace cgp
