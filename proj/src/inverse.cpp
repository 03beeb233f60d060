// src/inverse.cpp

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

#include "jacscat/inverse.hpp"

#include <cmath>
#include <string>

#include "jacscat/errors.hpp"

namespace jacscat {

std::string admissibility_report::first_failure() const {
  for (const auto& item : items)
    if (!item.ok) return item.name + ": " + item.detail;
  return {};
}

namespace {

void push(admissibility_report& rep, std::string name, bool ok,
          std::string detail) {
  rep.items.push_back({std::move(name), ok, std::move(detail)});
}

}  // namespace

admissibility_report validate_data(const scattering_data& data) {
  admissibility_report rep;

  const bool gamma_ok = (data.gamma1 == 0 || data.gamma1 == 1) &&
                        (data.gamma2 == 0 || data.gamma2 == 1);
  push(rep, "gamma_pair", gamma_ok,
       gamma_ok ? "" : "gamma flags must be 0 or 1");

  bool zeros_ok = true;
  std::string zeros_msg;
  for (std::size_t i = 0; i < data.zeros.size() && zeros_ok; ++i) {
    const double z = data.zeros[i];
    if (z <= -1.0 || z >= 1.0 || z == 0.0) {
      zeros_ok = false;
      zeros_msg = "zero " + std::to_string(i) + " outside (-1,1)\\{0}";
    }
    for (std::size_t j = i + 1; j < data.zeros.size() && zeros_ok; ++j)
      if (data.zeros[j] == z) {
        zeros_ok = false;
        zeros_msg = "zeros must be distinct";
      }
  }
  push(rep, "zero_set", zeros_ok, zeros_msg);

  bool mus_ok = data.mus.size() == data.zeros.size();
  std::string mus_msg = mus_ok ? "" : "weight count differs from zero count";
  for (std::size_t i = 0; i < data.mus.size() && mus_ok; ++i)
    if (!(data.mus[i] > 0.0)) {
      mus_ok = false;
      mus_msg = "weight " + std::to_string(i) + " is not positive";
    }
  push(rep, "weights", mus_ok, mus_msg);

  bool unimod_ok = true;
  double worst = 0.0;
  for (int j = 0; j < data.s.size(); ++j)
    worst = std::max(worst, std::abs(std::abs(data.s.sample(j)) - 1.0));
  unimod_ok = worst <= 1e-8;
  push(rep, "unimodular", unimod_ok,
       unimod_ok ? "" : "max | |s|-1 | = " + std::to_string(worst));

  bool symm_ok = true;
  if (unimod_ok) {
    const int m = data.s.size();
    double dev = 0.0;
    for (int j = 1; j < m; ++j)
      dev = std::max(dev,
                     std::abs(data.s.sample(m - j) - std::conj(data.s.sample(j))));
    symm_ok = dev <= 1e-8;
    push(rep, "conjugation_symmetry", symm_ok,
         symm_ok ? "" : "max |s(conj t) - conj(s(t))| = " + std::to_string(dev));
  } else {
    push(rep, "conjugation_symmetry", false, "skipped: s not unimodular");
  }

  bool index_ok = false;
  bool phase_ok = false;
  std::string index_msg, phase_msg;
  if (gamma_ok && unimod_ok && symm_ok) {
    try {
      const auto dec = decompose_index(data.s, static_cast<int>(data.zeros.size()));
      const int expected = 2 * static_cast<int>(data.zeros.size()) +
                           data.gamma1 + data.gamma2;
      if (dec.winding != expected)
        index_msg = "winding " + std::to_string(dec.winding) +
                    ", expected " + std::to_string(expected);
      else if (dec.gamma1 != data.gamma1)
        index_msg = "sign at t = 1 contradicts gamma1";
      else
        index_ok = true;
      phase_ok = index_ok;  // decompose_index already vetted v
    } catch (const error& e) {
      index_msg = e.what();
      phase_msg = "skipped: index extraction failed";
    }
  } else {
    index_msg = "skipped: prerequisites failed";
    phase_msg = index_msg;
  }
  push(rep, "index", index_ok, index_msg);
  push(rep, "phase_class", phase_ok, phase_msg);

  rep.admissible = true;
  for (const auto& item : rep.items) rep.admissible = rep.admissible && item.ok;
  return rep;
}

circle_function extract_v0(const scattering_data& data) {
  const blaschke_product blas(data.zeros);
  const int m = data.s.size();
  const int power = data.gamma1 + data.gamma2;
  const double sign = data.gamma1 == 1 ? -1.0 : 1.0;
  std::vector<cplx> remainder(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double th = data.s.theta(j);
    const cplx b = blas.eval(std::polar(1.0, th));
    remainder[static_cast<std::size_t>(j)] =
        sign * data.s.sample(j) * std::polar(1.0, -power * th) / (b * b);
  }
  const auto rem =
      circle_function::analyze(std::move(remainder), data.s.grid_log2());
  if (winding_number(rem) != 0)
    throw error(errc::inconsistent_data,
                "extract_v0: residual winding after removing the Blaschke "
                "factor is nonzero");
  const auto phase = unwrap_phase(rem);
  std::vector<cplx> neg(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    neg[static_cast<std::size_t>(j)] = -phase.sample(j).real();
  return circle_function::analyze(std::move(neg), data.s.grid_log2());
}

spectral_measure inverse(const scattering_data& data) {
  const auto rep = validate_data(data);
  if (!rep.admissible)
    throw error(errc::inadmissible, "inverse: " + rep.first_failure());

  const auto v0 = extract_v0(data);
  const auto u0 = inverse_conjugate(v0);  // free constant held at zero

  std::vector<mass_point> masses;
  if (!data.zeros.empty()) {
    const auto sigmas = mus_to_masses(data.gamma1, data.gamma2, u0,
                                      data.zeros, data.mus);
    for (std::size_t k = 0; k < sigmas.size(); ++k)
      masses.push_back({data.zeros[k], sigmas[k]});
  }
  // The provisional measure is correct up to one global factor; a single
  // rescaling enforces unit total mass for the density and the masses at
  // once.
  return normalize(
      spectral_measure(data.gamma1, data.gamma2, u0, std::move(masses)));
}

}  // namespace jacscat
