// include/jacscat/jacobi.hpp

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

#ifndef JACSCAT_JACOBI_HPP
#define JACSCAT_JACOBI_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "jacscat/circle.hpp"

namespace jacscat {

/// Semi-infinite Jacobi matrix J({a_n},{b_n}) stored as finite heads plus a
/// declared tail rule.  Indexing is 1-based to match the recurrence
///   a_{n-1} y_{n-1} + b_n y_n + a_n y_{n+1} = (z + 1/z) y_n,  a_0 = 1.
/// A free tail means a_n = 1, b_n = 0 beyond the heads; a generator tail is
/// a closed-form rule n -> (a_n, b_n).
class jacobi_params {
 public:
  using tail_rule = std::function<std::pair<double, double>(int)>;

  jacobi_params() = default;  // free matrix
  jacobi_params(std::vector<double> a_head, std::vector<double> b_head,
                int n_max = 256);
  static jacobi_params free_matrix(int n_max = 256);
  static jacobi_params with_tail(std::vector<double> a_head,
                                 std::vector<double> b_head, tail_rule tail,
                                 int n_max = 256);

  double a(int n) const;  // n >= 1
  double b(int n) const;  // n >= 1

  const std::vector<double>& a_head() const { return a_head_; }
  const std::vector<double>& b_head() const { return b_head_; }
  bool has_generator_tail() const { return static_cast<bool>(tail_); }
  int head_size() const;
  int n_max() const { return n_max_; }

  /// Smallest n0 <= limit such that |a_n - 1| + |b_n| < tol for all
  /// n0 <= n <= limit; the matrix is treated as free from n0 on.  Returns
  /// limit + 1 when no such index exists.
  int first_free_index(int limit, double tol = 1e-14) const;

 private:
  std::vector<double> a_head_, b_head_;
  tail_rule tail_;  // empty => free
  int n_max_ = 256;
};

enum class solution_kind { sine, jost };

/// Values y_0..y_n of a solution of the three-term recurrence at spectral
/// parameter z.
struct solution_sequence {
  std::vector<cplx> values;
  cplx z{};
  solution_kind kind = solution_kind::sine;

  /// max over interior n of |a_{n-1}y_{n-1} + b_n y_n + a_n y_{n+1} -
  /// (z+1/z) y_n| / max(1, local scale).
  double max_residual(const jacobi_params& params) const;
};

/// Tail sums xi_n = -sum_{k>n} b_k and eta_n = -sum_{k>n} (a_k - 1) for
/// n = 0..n_max, with their weighted-square norms sum_{n>=1} n*xi_n^2 and
/// sum_{n>=1} n*eta_n^2.  Generator tails are accumulated backward from
/// `cutoff` terms; a conditional-summability check rejects tails whose
/// partial sums have not settled.
struct tail_sums {
  std::vector<double> xi, eta;
  double xi_norm = 0.0, eta_norm = 0.0;
};
tail_sums weighted_tail_sums(const jacobi_params& params, int n_max,
                             int cutoff = 100000);

/// Partial first moment sum_{n<=n_max} n(|a_n-1| + |b_n|) with a
/// dyadic-increment divergence heuristic for generator tails.
struct first_moment {
  double partial = 0.0;
  bool divergent = false;
};
first_moment first_moment_sum(const jacobi_params& params, int n_max);

/// Forward recurrence from y_0 = 0, y_1 = 1; y_{n+1}(z) equals the degree-n
/// orthonormal polynomial of the spectral measure evaluated at z + 1/z.
solution_sequence sine_solution(const jacobi_params& params, cplx z, int n_max);

/// Backward recurrence seeded by y_n = z^n in the free region, 0 < |z| < 1.
/// Generator tails are truncated at the first index where |a_n-1| + |b_n|
/// drops below 1e-14; if no such index exists within n_max a truncation
/// error carrying the residual tail bound is thrown.
solution_sequence jost_solution(const jacobi_params& params, cplx z, int n_max);

/// sum_{n=1}^{n_max} |phi_n(z_k)|^2 plus the geometric free-region tail
/// |z_k|^{2 n_max + 2} / (1 - z_k^2).  Requires phi_0(z_k) ~ 0, i.e. z_k is
/// an eigenvalue parameter; the zero tolerance scales with the size of
/// phi_0 on a small circle around z_k.
struct jost_normalizer_result {
  double partial = 0.0;
  double tail = 0.0;
  double value() const { return partial + tail; }
};
jost_normalizer_result jost_normalizer(const jacobi_params& params, double z_k,
                                       int n_max);

/// Weyl function M(z) = ((z + 1/z - J)^{-1} e_1, e_1) by the finite
/// continued fraction terminating in the free-tail value M_free = z.
/// Equals phi_1(z)/phi_0(z).  Throws a pole error when a continued-fraction
/// denominator vanishes.
cplx weyl_function(const jacobi_params& params, cplx z, int n_max);

struct szego_limit {
  cplx computed;   // z^{n_max} p_{n_max}(z + 1/z) from the recurrence
  cplx predicted;  // B(z) / ((1 - z^2) D(z)) from the spectral side
  double gap() const { return std::abs(computed - predicted); }
};

class spectral_measure;  // defined in measure.hpp

/// Both sides of the polynomial asymptotics at a point of the open disk:
/// the recurrence route and the Blaschke/outer prediction.
szego_limit szego_limit_check(const jacobi_params& params,
                              const spectral_measure& measure, cplx z,
                              int n_max);

}  // namespace jacscat

#endif  // JACSCAT_JACOBI_HPP
