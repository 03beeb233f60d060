// include/jacscat/circle.hpp

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

#ifndef JACSCAT_CIRCLE_HPP
#define JACSCAT_CIRCLE_HPP

#include <complex>
#include <vector>

namespace jacscat {

using cplx = std::complex<double>;

enum class spin_symmetry { none, symmetric, antisymmetric };

/// A function on the unit circle held as uniform grid samples together with
/// its discrete Fourier coefficients.
///
/// Grid convention: M = 2^grid_log2 nodes t_j = exp(2*pi*i*j/M).  The two
/// representations are tied by the discrete pair
///     coeff(n) = (1/M) sum_j g(t_j) t_j^{-n},
/// kept mutually consistent by construction (one side is always derived from
/// the other by FFT).  coeff(n) is addressable for |n| <= M/2 - 1; the
/// ambiguous Nyquist bin is retained internally for exact invertibility but
/// is not part of the public coefficient range.
class circle_function {
 public:
  /// Builds from grid samples; detects reality/symmetry flags within 1e-10.
  static circle_function analyze(std::vector<cplx> samples, int grid_log2);

  /// Builds from coefficients indexed by FFT bin (bin k holds n = k for
  /// k < M/2 and n = k - M otherwise); synthesizes the samples.
  static circle_function from_bins(std::vector<cplx> bins, int grid_log2);

  static circle_function zero(int grid_log2);
  static circle_function constant(double value, int grid_log2);

  int grid_log2() const { return grid_log2_; }
  int size() const { return static_cast<int>(samples_.size()); }
  int max_order() const { return size() / 2 - 1; }

  const std::vector<cplx>& samples() const { return samples_; }
  const std::vector<cplx>& bins() const { return bins_; }

  /// Fourier coefficient for |n| <= M/2 - 1.
  cplx coeff(int n) const;

  double theta(int j) const;   // angle of node j
  cplx node(int j) const;      // t_j on the circle
  cplx sample(int j) const { return samples_[static_cast<std::size_t>(j)]; }

  /// Trigonometric interpolation sum_n coeff(n) t^n at an arbitrary point of
  /// the closed unit circle (Nyquist energy split evenly between +-M/2).
  cplx eval(cplx t) const;

  bool real_valued() const { return real_; }
  spin_symmetry symmetry() const { return symmetry_; }

  /// Returns a copy with the given real constant added (only bin 0 moves).
  circle_function plus_constant(double c) const;

 private:
  circle_function() = default;
  void detect_flags();

  int grid_log2_ = 0;
  std::vector<cplx> samples_;
  std::vector<cplx> bins_;
  spin_symmetry symmetry_ = spin_symmetry::none;
  bool real_ = false;
};

/// Numeric symmetry tests on the coefficients (scale-relative).  The zero
/// function passes both; the enum flag reports symmetric in that case.
bool is_symmetric(const circle_function& f, double tol = 1e-10);
bool is_antisymmetric(const circle_function& f, double tol = 1e-10);

/// sqrt(sum_{|n| <= M/2-1} |n| |g_n|^2); zero iff the function is constant.
double besov_seminorm(const circle_function& f);

/// Truncation criterion for membership in the half-order Besov class: the
/// tail sum over |n| > M/4 must be below rel_tol of the total weighted
/// energy.  Constant functions are trivially admissible.
bool besov_admissible(const circle_function& f, double rel_tol = 1e-8);

/// Harmonic conjugate: v_n = -i*sgn(n)*u_n, v_0 = 0.  Requires real input.
/// Symmetric input yields antisymmetric output; the weighted seminorm is
/// preserved exactly at the coefficient level.
circle_function conjugate(const circle_function& u);

/// Inverse of conjugate: u_n = i*sgn(n)*v_n and u_0 = 0 (the free additive
/// constant belongs to the caller).  Requires real antisymmetric input with
/// vanishing mean.
circle_function inverse_conjugate(const circle_function& v);

/// Herglotz-integral evaluation of the outer function with boundary
/// log-modulus h:  exp{ (h_0 + 2 sum_{n>=1} h_n z^n) / 2 },  |z| < 1.
cplx herglotz_outer_eval(const circle_function& log_modulus, cplx z);

/// Total phase increment / 2pi of a unimodular grid function, via
/// principal-branch increments between adjacent nodes.  Every increment must
/// stay strictly below pi in magnitude, otherwise the grid cannot resolve
/// the phase and a resolution error is thrown.
int winding_number(const circle_function& s);

/// Continuous phase phi with s(t_j) = exp(i*phi_j), for unimodular s of
/// winding zero.  Normalization: the mean of phi lies in (-pi, pi].
circle_function unwrap_phase(const circle_function& s);

}  // namespace jacscat

#endif  // JACSCAT_CIRCLE_HPP
