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

#include "cgp/generating_power.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>

#include "cgp/error.hpp"

namespace cgp {

namespace {

void require_dimension(std::size_t n) {
  if (n < 2) {
    throw Error(Errc::kInvalidParameter,
                "dimension must be at least 2, got " + std::to_string(n));
  }
}

void require_unitary(const ComplexMatrix& u) {
  if (!is_unitary(u, kCgpUnitaryTol)) {
    throw Error(Errc::kNotUnitary,
                "matrix is not unitary within " + std::to_string(kCgpUnitaryTol));
  }
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double purity_sum_unchecked(const ComplexMatrix& u) {
  CompensatedSum total;
  for (const Complex& z : u.entries()) {
    const double p = std::norm(z);
    total.add(p * p);
  }
  return total.value();
}

}  // namespace

double half_binomial(unsigned m) {
  double value = 1.0;
  for (unsigned j = 1; j <= m; ++j) value *= (0.5 - static_cast<double>(j - 1)) / j;
  return value;
}

CoefficientTable compute_coefficient_table(std::size_t n) {
  require_dimension(n);

  // binom[m] = C(1/2, m); gamma_ratio[r] = Gamma(3/2 + r) / r!, both by recurrence.
  std::vector<double> binom(n);
  std::vector<double> gamma_ratio(n);
  binom[0] = 1.0;
  gamma_ratio[0] = std::sqrt(std::numbers::pi) / 2.0;
  for (std::size_t m = 1; m < n; ++m) {
    const double md = static_cast<double>(m);
    binom[m] = binom[m - 1] * (1.5 - md) / md;
    gamma_ratio[m] = gamma_ratio[m - 1] * (md + 0.5) / md;
  }

  CoefficientTable out;
  out.n = n;
  out.table.assign(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      CompensatedSum sum;
      for (std::size_t r = 0; r <= k; ++r) {
        sum.add(binom[k - r] * binom[l - r] * gamma_ratio[r]);
      }
      const double value = ((k + l) % 2 == 0 ? 1.0 : -1.0) * sum.value();
      out.table[k * n + l] = value;
      out.table[l * n + k] = value;
    }
  }

  CompensatedSum diag;
  CompensatedSum squares;
  for (std::size_t k = 0; k < n; ++k) {
    diag.add(out.at(k, k));
    for (std::size_t l = 0; l < n; ++l) squares.add(out.at(k, l) * out.at(k, l));
  }
  const double nd = static_cast<double>(n);
  out.bracket = diag.value() * diag.value() - squares.value();
  out.factor = 1.0 - out.bracket / (nd * nd * (nd - 1.0));
  return out;
}

std::shared_ptr<const CoefficientTable> coefficient_table(std::size_t n) {
  static std::shared_mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const CoefficientTable>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const CoefficientTable>(compute_coefficient_table(n));
  std::unique_lock lock(mutex);
  return cache.try_emplace(n, std::move(table)).first->second;
}

double dimension_factor(std::size_t n) { return coefficient_table(n)->factor; }

double purity_sum(const ComplexMatrix& u) {
  require_unitary(u);
  return purity_sum_unchecked(u);
}

double cgp_unitary(const ComplexMatrix& u) {
  require_unitary(u);
  require_dimension(u.rows());
  const double n = static_cast<double>(u.rows());
  return dimension_factor(u.rows()) * (1.0 - purity_sum_unchecked(u) / n);
}

double cgp_unitary(const Channel& phi) { return cgp_unitary(phi.unitary_matrix()); }

double cgp_max(std::size_t n) {
  require_dimension(n);
  return (1.0 - 1.0 / static_cast<double>(n)) * dimension_factor(n);
}

double mean_cgp(std::size_t n) {
  require_dimension(n);
  const double nd = static_cast<double>(n);
  return (nd - 1.0) / (nd + 1.0) * dimension_factor(n);
}

double normalized_cgp(const ComplexMatrix& u) { return cgp_unitary(u) / cgp_max(u.rows()); }

double mixed_unitary_bound(const Channel& phi) {
  const auto* mix = std::get_if<MixedUnitaryChannel>(&phi.variant());
  if (mix == nullptr) {
    throw Error(Errc::kWrongChannelVariant,
                "mixed-unitary bound needs a mixed_unitary channel, got " +
                    std::string(phi.kind()));
  }
  double bound = 0.0;
  for (std::size_t m = 0; m < mix->unitaries.size(); ++m) {
    bound += mix->weights[m] * cgp_unitary(mix->unitaries[m]);
  }
  return bound;
}

}  // namespace cgp
