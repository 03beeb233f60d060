// include/jacscat/scattering.hpp

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

#ifndef JACSCAT_SCATTERING_HPP
#define JACSCAT_SCATTERING_HPP

#include <vector>

#include "jacscat/jacobi.hpp"
#include "jacscat/measure.hpp"

namespace jacscat {

/// Scattering data: the gamma pair, the eigenvalue parameters (zeros of the
/// Blaschke product), the positive weights mu_k, and the unimodular
/// scattering function s on the grid.
struct scattering_data {
  int gamma1 = 0, gamma2 = 0;
  std::vector<double> zeros;
  std::vector<double> mus;
  circle_function s;

  scattering_data(int g1, int g2, std::vector<double> zeros_,
                  std::vector<double> mus_, circle_function s_);
};

/// Grid evaluation of
///   s(t) = (-1)^{gamma1} t^{gamma1+gamma2} e^{-i v0(t)} B^2(t),
/// v0 the harmonic conjugate of log rho0.  Scale invariant: the additive
/// constant of log rho0 cancels in the ratio, so normalized and
/// unnormalized versions of a measure produce the same function.
circle_function scattering_function(const spectral_measure& measure);

/// Assembles the full scattering data of a measure.
scattering_data forward(const spectral_measure& measure);

/// Index representation s(t) = (-1)^{gamma1} t^M e^{-i v(t)}:
/// M is the winding number, gamma1 the sign of s at t = 1 (where t^M = 1 and
/// v vanishes by antisymmetry), v the negated unwrapped phase of the
/// remainder.  Consistency with the given number of mass points is
/// enforced: M - 2N must lie in {0,1,2} and match gamma1.
struct index_decomposition {
  int gamma1 = 0;
  int winding = 0;  // M = 2N + gamma1 + gamma2
  circle_function v;
};
index_decomposition decompose_index(const circle_function& s, int n_masses);

/// Two independent routes to the k-th normalizing constant: mu_k from the
/// spectral side and the squared-norm sum of the Jost solution.
struct proposition_check {
  double mu_k = 0.0;
  double m_k = 0.0;
  double gap() const { return std::abs(mu_k - m_k); }
};
proposition_check verify_normalizer_match(const jacobi_params& params,
                                          const spectral_measure& measure,
                                          int k, int n_max);

}  // namespace jacscat

#endif  // JACSCAT_SCATTERING_HPP
