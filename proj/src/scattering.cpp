// src/scattering.cpp

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

#include "jacscat/scattering.hpp"

#include <cmath>
#include <string>

#include "jacscat/errors.hpp"

namespace jacscat {

scattering_data::scattering_data(int g1, int g2, std::vector<double> zeros_,
                                 std::vector<double> mus_, circle_function s_)
    : gamma1(g1), gamma2(g2), zeros(std::move(zeros_)), mus(std::move(mus_)),
      s(std::move(s_)) {
  if (zeros.size() != mus.size())
    throw error(errc::size_mismatch,
                "scattering_data: zeros and mus must have equal length");
}

circle_function scattering_function(const spectral_measure& measure) {
  const auto v0 = conjugate(measure.log_rho0());
  const blaschke_product blas(measure.mass_zeros());
  const int m = v0.size();
  const int power = measure.gamma1() + measure.gamma2();
  const double sign = measure.gamma1() == 1 ? -1.0 : 1.0;
  std::vector<cplx> samples(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double th = v0.theta(j);
    const cplx b = blas.eval(std::polar(1.0, th));
    samples[static_cast<std::size_t>(j)] =
        sign * std::polar(1.0, power * th - v0.sample(j).real()) * b * b;
  }
  return circle_function::analyze(std::move(samples), v0.grid_log2());
}

scattering_data forward(const spectral_measure& measure) {
  // class membership of log rho0 is a construction invariant of the measure
  return scattering_data(measure.gamma1(), measure.gamma2(),
                         measure.mass_zeros(), masses_to_mus(measure),
                         scattering_function(measure));
}

index_decomposition decompose_index(const circle_function& s, int n_masses) {
  // symmetry invariant s(conj t) = conj(s(t)) on the grid
  const int m = s.size();
  for (int j = 1; j < m; ++j) {
    if (std::abs(s.sample(m - j) - std::conj(s.sample(j))) > 1e-8)
      throw error(errc::domain,
                  "decompose_index: s(conj t) = conj(s(t)) fails on the grid");
  }

  const int winding = winding_number(s);

  // at t = 1 the monomial factor is 1 and the phase vanishes by
  // antisymmetry, so the sign of s(1) is (-1)^gamma1
  const cplx s1 = s.sample(0);
  if (std::abs(s1.imag()) > 1e-8 || std::abs(std::abs(s1.real()) - 1.0) > 1e-8)
    throw error(errc::inconsistent_data,
                "decompose_index: s(1) is not +-1");
  const int gamma1 = s1.real() > 0.0 ? 0 : 1;

  const int excess = winding - 2 * n_masses;
  if (excess < 0 || excess > 2)
    throw error(errc::inconsistent_data,
                "decompose_index: winding " + std::to_string(winding) +
                    " is incompatible with " + std::to_string(n_masses) +
                    " mass points");
  const int gamma2 = excess - gamma1;
  if (gamma2 != 0 && gamma2 != 1)
    throw error(errc::inconsistent_data,
                "decompose_index: index parity contradicts the sign at t = 1");

  const double sign = gamma1 == 1 ? -1.0 : 1.0;
  std::vector<cplx> remainder(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    remainder[static_cast<std::size_t>(j)] =
        sign * s.sample(j) * std::polar(1.0, -winding * s.theta(j));
  const auto phase = unwrap_phase(
      circle_function::analyze(std::move(remainder), s.grid_log2()));

  std::vector<cplx> neg(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    neg[static_cast<std::size_t>(j)] = -phase.sample(j).real();
  auto v = circle_function::analyze(std::move(neg), s.grid_log2());

  if (!v.real_valued() || !is_antisymmetric(v))
    throw error(errc::inconsistent_data,
                "decompose_index: extracted phase is not real antisymmetric");
  if (!besov_admissible(v))
    throw error(errc::inadmissible,
                "decompose_index: extracted phase fails the Besov test");
  return index_decomposition{gamma1, winding, std::move(v)};
}

proposition_check verify_normalizer_match(const jacobi_params& params,
                                          const spectral_measure& measure,
                                          int k, int n_max) {
  if (k < 0 || k >= static_cast<int>(measure.masses().size()))
    throw error(errc::domain, "verify_normalizer_match: index out of range");
  proposition_check out;
  out.mu_k = masses_to_mus(measure)[static_cast<std::size_t>(k)];
  out.m_k = jost_normalizer(
                params, measure.masses()[static_cast<std::size_t>(k)].z, n_max)
                .value();
  return out;
}

}  // namespace jacscat
