// include/jacscat/measure.hpp

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

#ifndef JACSCAT_MEASURE_HPP
#define JACSCAT_MEASURE_HPP

#include <vector>

#include "jacscat/circle.hpp"

namespace jacscat {

/// Joukowski map lambda = z + 1/z and its inverse branch with |z| < 1,
/// sign(z) = sign(lambda), defined for |lambda| > 2.
cplx joukowski(cplx z);
double inverse_joukowski(double lambda);

/// Finite Blaschke product with distinct real zeros in (-1,1)\{0}:
///   B(z) = prod_k (z_k/|z_k|) (z - z_k)/(1 - z_k z).
/// Unimodular on the circle with B(conj t) = conj(B(t)) = 1/B(t).
class blaschke_product {
 public:
  explicit blaschke_product(std::vector<double> zeros);

  const std::vector<double>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx eval(cplx z) const;

  /// B'(z_k) at the k-th zero: the factor derivative (z_k/|z_k|)/(1-z_k^2)
  /// times the remaining factors evaluated at z_k.
  cplx derivative_at_zero(int k) const;

  /// Grid samples of B on the circle.
  circle_function boundary(int grid_log2) const;

 private:
  std::vector<double> zeros_;
};

struct mass_point {
  double z = 0.0;      // disk parameter, lambda = z + 1/z
  double sigma = 0.0;  // weight, > 0
};

/// Spectral measure: absolutely continuous density
///   f(x) = rho(x) sqrt(4-x^2) / (2 pi),
///   rho(x) = rho0(x) / ((2-x)^{gamma1} (2+x)^{gamma2}),
/// on [-2,2], stored through log rho0 on the circle (x = t + 1/t), plus
/// finitely many point masses outside [-2,2] held in disk coordinates.
class spectral_measure {
 public:
  spectral_measure(int gamma1, int gamma2, circle_function log_rho0,
                   std::vector<mass_point> masses, bool normalized = false);

  int gamma1() const { return gamma1_; }
  int gamma2() const { return gamma2_; }
  const circle_function& log_rho0() const { return log_rho0_; }
  const std::vector<mass_point>& masses() const { return masses_; }
  bool normalized() const { return normalized_; }

  std::vector<double> mass_zeros() const;

 private:
  int gamma1_ = 0, gamma2_ = 0;
  circle_function log_rho0_;
  std::vector<mass_point> masses_;
  bool normalized_ = false;
};

/// Outer function D0 with boundary modulus |D0(t)|^2 = rho0(t), via the
/// Herglotz integral of log rho0; D carries the extra gamma factors
/// D(z) = D0(z) / ((1-z)^{gamma1} (1+z)^{gamma2}).
cplx outer_d0(const spectral_measure& measure, cplx z);
cplx outer_d(const spectral_measure& measure, cplx z);

/// Boundary samples exp((u0 + i v0)/2) of D0, u0 = log rho0, v0 its
/// harmonic conjugate.
circle_function outer_d0_boundary(const spectral_measure& measure);

/// Absolutely continuous density at x in (-2,2).
double density_f(const spectral_measure& measure, double x);

/// Total mass: theta-grid quadrature of the a.c. part (the gamma endpoint
/// factors cancel analytically against the semicircle weight, so the
/// integrand stays smooth) plus the point masses.
double total_mass(const spectral_measure& measure);

/// Rescales rho0 and every sigma_k by a common factor so the total mass is
/// one.  Idempotent.
spectral_measure normalize(const spectral_measure& measure);

/// Weights mu_k = sigma_k |B'(z_k)/D(z_k)|^2 |1 - z_k^{-2}|^{-2} attached to
/// the mass points, and the inverse map
/// sigma_k = mu_k |D(z_k)/B'(z_k)|^2 |1 - z_k^{-2}|^{+2}.
std::vector<double> masses_to_mus(const spectral_measure& measure);
std::vector<double> mus_to_masses(int gamma1, int gamma2,
                                  const circle_function& log_rho0,
                                  const std::vector<double>& zeros,
                                  const std::vector<double>& mus);

}  // namespace jacscat

#endif  // JACSCAT_MEASURE_HPP
