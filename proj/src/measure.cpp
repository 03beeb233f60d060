// src/measure.cpp

// Copyright 2026  The jacscat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jacscat/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jacscat/errors.hpp"

namespace jacscat {

namespace {
constexpr double kPi = std::numbers::pi;
}

cplx joukowski(cplx z) {
  if (std::abs(z) < 1e-300)
    throw error(errc::domain, "joukowski: z must be nonzero");
  return z + 1.0 / z;
}

double inverse_joukowski(double lambda) {
  if (std::abs(lambda) <= 2.0)
    throw error(errc::domain, "inverse_joukowski: |lambda| must exceed 2");
  const double s = lambda > 0.0 ? 1.0 : -1.0;
  // the root of z^2 - lambda z + 1 inside the unit interval
  return (lambda - s * std::sqrt(lambda * lambda - 4.0)) / 2.0;
}

blaschke_product::blaschke_product(std::vector<double> zeros)
    : zeros_(std::move(zeros)) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    const double z = zeros_[i];
    if (z <= -1.0 || z >= 1.0 || z == 0.0)
      throw error(errc::domain,
                  "blaschke_product: zeros must lie in (-1,1)\\{0}");
    for (std::size_t j = i + 1; j < zeros_.size(); ++j)
      if (zeros_[j] == z)
        throw error(errc::domain, "blaschke_product: zeros must be distinct");
  }
}

cplx blaschke_product::eval(cplx z) const {
  cplx prod = 1.0;
  for (double zk : zeros_)
    prod *= (zk / std::abs(zk)) * (z - zk) / (1.0 - zk * z);
  return prod;
}

cplx blaschke_product::derivative_at_zero(int k) const {
  if (k < 0 || k >= degree())
    throw error(errc::domain, "blaschke_product: zero index out of range");
  const double zk = zeros_[static_cast<std::size_t>(k)];
  cplx prod = (zk / std::abs(zk)) / (1.0 - zk * zk);
  for (int j = 0; j < degree(); ++j) {
    if (j == k) continue;
    const double zj = zeros_[static_cast<std::size_t>(j)];
    prod *= (zj / std::abs(zj)) * (zk - zj) / (1.0 - zj * zk);
  }
  return prod;
}

circle_function blaschke_product::boundary(int grid_log2) const {
  const int m = 1 << grid_log2;
  std::vector<cplx> samples(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    samples[static_cast<std::size_t>(j)] =
        eval(std::polar(1.0, 2.0 * kPi * j / m));
  return circle_function::analyze(std::move(samples), grid_log2);
}

spectral_measure::spectral_measure(int gamma1, int gamma2,
                                   circle_function log_rho0,
                                   std::vector<mass_point> masses,
                                   bool normalized)
    : gamma1_(gamma1),
      gamma2_(gamma2),
      log_rho0_(std::move(log_rho0)),
      masses_(std::move(masses)),
      normalized_(normalized) {
  if ((gamma1_ != 0 && gamma1_ != 1) || (gamma2_ != 0 && gamma2_ != 1))
    throw error(errc::domain, "spectral_measure: gamma flags must be 0 or 1");
  if (!log_rho0_.real_valued())
    throw error(errc::domain, "spectral_measure: log rho0 must be real");
  if (!is_symmetric(log_rho0_))
    throw error(errc::domain, "spectral_measure: log rho0 must be symmetric");
  if (!besov_admissible(log_rho0_))
    throw error(errc::domain,
                "spectral_measure: log rho0 fails the Besov truncation test");
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    const auto& mp = masses_[i];
    if (mp.z <= -1.0 || mp.z >= 1.0 || mp.z == 0.0)
      throw error(errc::domain,
                  "spectral_measure: mass parameters must lie in (-1,1)\\{0}");
    if (!(mp.sigma > 0.0))
      throw error(errc::domain, "spectral_measure: masses must be positive");
    for (std::size_t j = i + 1; j < masses_.size(); ++j)
      if (masses_[j].z == mp.z)
        throw error(errc::domain, "spectral_measure: mass parameters must be distinct");
  }
}

std::vector<double> spectral_measure::mass_zeros() const {
  std::vector<double> zs;
  zs.reserve(masses_.size());
  for (const auto& mp : masses_) zs.push_back(mp.z);
  return zs;
}

cplx outer_d0(const spectral_measure& measure, cplx z) {
  return herglotz_outer_eval(measure.log_rho0(), z);
}

cplx outer_d(const spectral_measure& measure, cplx z) {
  if (std::abs(z) >= 1.0)
    throw error(errc::domain, "outer_d: point must be inside the disk");
  cplx den = 1.0;
  if (measure.gamma1() == 1) den *= (1.0 - z);
  if (measure.gamma2() == 1) den *= (1.0 + z);
  return outer_d0(measure, z) / den;
}

circle_function outer_d0_boundary(const spectral_measure& measure) {
  const auto& u0 = measure.log_rho0();
  const auto v0 = conjugate(u0);
  const int m = u0.size();
  std::vector<cplx> samples(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    samples[static_cast<std::size_t>(j)] = std::exp(
        cplx(0.5 * u0.sample(j).real(), 0.5 * v0.sample(j).real()));
  return circle_function::analyze(std::move(samples), u0.grid_log2());
}

double density_f(const spectral_measure& measure, double x) {
  if (std::abs(x) >= 2.0)
    throw error(errc::domain, "density_f: x must lie in (-2,2)");
  const double theta = std::acos(x / 2.0);
  const cplx t = std::polar(1.0, theta);
  const double rho0 = std::exp(measure.log_rho0().eval(t).real());
  double rho = rho0;
  if (measure.gamma1() == 1) rho /= (2.0 - x);
  if (measure.gamma2() == 1) rho /= (2.0 + x);
  return rho * std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

namespace {

// Grid integrand of the a.c. mass in theta: the gamma endpoint factors are
// cancelled analytically against 2 sin^2(theta) = (4 sin^2 half)(4 cos^2
// half)/2, so the quadrature never touches a singular quotient.
double ac_mass(const spectral_measure& measure) {
  const auto& lr = measure.log_rho0();
  const int m = lr.size();
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double half = lr.theta(j) / 2.0;
    const double sin2 = 4.0 * std::sin(half) * std::sin(half);
    const double cos2 = 4.0 * std::cos(half) * std::cos(half);
    double w = 0.5 * std::exp(lr.sample(j).real());
    w *= measure.gamma1() == 1 ? 1.0 : sin2;
    w *= measure.gamma2() == 1 ? 1.0 : cos2;
    total += w;
  }
  return total / m;
}

}  // namespace

double total_mass(const spectral_measure& measure) {
  double total = ac_mass(measure);
  for (const auto& mp : measure.masses()) total += mp.sigma;
  return total;
}

spectral_measure normalize(const spectral_measure& measure) {
  const double t = total_mass(measure);
  if (!(t > 0.0))
    throw error(errc::domain, "normalize: total mass must be positive");
  if (std::abs(t - 1.0) < 1e-15 && measure.normalized()) return measure;
  auto masses = measure.masses();
  for (auto& mp : masses) mp.sigma /= t;
  return spectral_measure(measure.gamma1(), measure.gamma2(),
                          measure.log_rho0().plus_constant(-std::log(t)),
                          std::move(masses), /*normalized=*/true);
}

namespace {

double mass_conversion_factor(int gamma1, int gamma2,
                              const circle_function& log_rho0,
                              const blaschke_product& b, int k) {
  const double zk = b.zeros()[static_cast<std::size_t>(k)];
  cplx den = 1.0;
  if (gamma1 == 1) den *= (1.0 - zk);
  if (gamma2 == 1) den *= (1.0 + zk);
  const cplx d = herglotz_outer_eval(log_rho0, zk) / den;
  const double ratio = std::norm(b.derivative_at_zero(k) / d);
  const double edge = 1.0 - 1.0 / (zk * zk);
  return ratio / (edge * edge);  // mu_k = sigma_k * factor
}

}  // namespace

std::vector<double> masses_to_mus(const spectral_measure& measure) {
  const blaschke_product b(measure.mass_zeros());
  std::vector<double> mus;
  mus.reserve(measure.masses().size());
  for (int k = 0; k < b.degree(); ++k) {
    const double factor = mass_conversion_factor(
        measure.gamma1(), measure.gamma2(), measure.log_rho0(), b, k);
    mus.push_back(measure.masses()[static_cast<std::size_t>(k)].sigma * factor);
  }
  return mus;
}

std::vector<double> mus_to_masses(int gamma1, int gamma2,
                                  const circle_function& log_rho0,
                                  const std::vector<double>& zeros,
                                  const std::vector<double>& mus) {
  if (zeros.size() != mus.size())
    throw error(errc::size_mismatch,
                "mus_to_masses: zeros and weights must have equal length");
  const blaschke_product b(zeros);
  std::vector<double> sigmas;
  sigmas.reserve(mus.size());
  for (int k = 0; k < b.degree(); ++k) {
    if (!(mus[static_cast<std::size_t>(k)] > 0.0))
      throw error(errc::domain, "mus_to_masses: weights must be positive");
    const double factor =
        mass_conversion_factor(gamma1, gamma2, log_rho0, b, k);
    sigmas.push_back(mus[static_cast<std::size_t>(k)] / factor);
  }
  return sigmas;
}

}  // namespace jacscat
