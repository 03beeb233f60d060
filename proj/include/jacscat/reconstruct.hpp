// include/jacscat/reconstruct.hpp

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

#ifndef JACSCAT_RECONSTRUCT_HPP
#define JACSCAT_RECONSTRUCT_HPP

#include <vector>

#include "jacscat/jacobi.hpp"
#include "jacscat/measure.hpp"

namespace jacscat {

/// Probability measure on the circle, mu(dt) = w(t) m(dt), with a real
/// nonnegative symmetric weight.
class circle_measure {
 public:
  explicit circle_measure(circle_function weight, bool normalized = false);

  const circle_function& weight() const { return weight_; }
  bool normalized() const { return normalized_; }

  /// Trigonometric moment integral t^{-n} dmu by grid quadrature.
  double moment(int n) const;

 private:
  circle_function weight_;
  bool normalized_ = false;
};

/// Verblunsky coefficients of a symmetric measure; real with |alpha_n| < 1.
struct verblunsky_seq {
  std::vector<double> alphas;
};

/// Modified inverse Szegő transform for gamma1 = gamma2 = 0, no masses:
/// w(t) = c f(t + 1/t) / |1 - t^2|.  The singular quotient reduces
/// analytically to w = c rho(t) / (2 pi) because sqrt(4 - x^2) = |1 - t^2|
/// on the circle, so no singular division is performed; c fixes unit mass.
circle_measure szego_transform_o(const spectral_measure& measure);

/// Szegő/Levinson recursion on the Toeplitz moment forms, producing
/// alpha_0..alpha_{n_max-1}.  Throws a degeneracy error when |alpha_n|
/// reaches 1 within 1e-12.
verblunsky_seq verblunsky(const circle_measure& mu, int n_max);

/// Geronimus relations, n = 0,1,...:
///   b_{n+1} = alpha_{2n}(1 - alpha_{2n+1}) - alpha_{2n+2}(1 + alpha_{2n+1})
///   a^2_{n+1} = (1 - alpha_{2n+3})(1 - alpha^2_{2n+2})(1 + alpha_{2n+1})
/// Coefficients beyond the sequence are taken as zero (free tail).
jacobi_params geronimus(const verblunsky_seq& alphas, int n_rows);

/// Christoffel kernel K_n(lambda1) = sum_{k=0}^{n-1} p_k(lambda1)^2, K_0 = 0,
/// for |lambda1| > 2.
double christoffel_kernel(const jacobi_params& params, double lambda1, int n);

/// Jacobi parameters of (sigma0 + eps * delta(lambda1)) / (1 + eps):
///   a^2_n <- a^2_n (1 + eps K_{n-1})(1 + eps K_{n+1}) / (1 + eps K_n)^2
///   b_n   <- b_n - a_{n-1} V_{n-1} + a_n V_n,
///   V_n = eps p_{n-1} p_n / (1 + eps K_n), V_0 = 0.
/// Computed with joint rescaling of (p, 1 + eps K) so the geometric growth
/// of the kernel never overflows.  eps = 0 returns the input unchanged.
jacobi_params nevai_insert(const jacobi_params& params0, double lambda1,
                           double eps, int n_max);

/// Full measure -> Jacobi parameters (gamma1 = gamma2 = 0 only): transform
/// to the circle, Verblunsky coefficients, Geronimus relations; when masses
/// are present the a.c. part is renormalized, reconstructed, and the masses
/// inserted one by one in decreasing |lambda| order with the insertion
/// weight recomputed from the remaining mass ratios at each step.
jacobi_params jacobi_from_spectral(const spectral_measure& measure, int n_rows,
                                   int n_work = 256);

}  // namespace jacscat

#endif  // JACSCAT_RECONSTRUCT_HPP
