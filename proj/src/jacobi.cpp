// src/jacobi.cpp

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

#include "jacscat/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jacscat/errors.hpp"
#include "jacscat/measure.hpp"

namespace jacscat {

namespace {
constexpr double kFreeTol = 1e-14;
}

jacobi_params::jacobi_params(std::vector<double> a_head,
                             std::vector<double> b_head, int n_max)
    : a_head_(std::move(a_head)), b_head_(std::move(b_head)), n_max_(n_max) {
  for (double a : a_head_)
    if (!(a > 0.0))
      throw error(errc::domain, "jacobi_params: off-diagonal entries must be positive");
  if (n_max_ < 2) throw error(errc::domain, "jacobi_params: n_max too small");
}

jacobi_params jacobi_params::free_matrix(int n_max) {
  return jacobi_params({}, {}, n_max);
}

jacobi_params jacobi_params::with_tail(std::vector<double> a_head,
                                       std::vector<double> b_head,
                                       tail_rule tail, int n_max) {
  jacobi_params p(std::move(a_head), std::move(b_head), n_max);
  p.tail_ = std::move(tail);
  return p;
}

double jacobi_params::a(int n) const {
  if (n < 1) throw error(errc::domain, "jacobi_params: index must be >= 1");
  if (n <= static_cast<int>(a_head_.size()))
    return a_head_[static_cast<std::size_t>(n - 1)];
  if (tail_) {
    const double v = tail_(n).first;
    if (!(v > 0.0))
      throw error(errc::domain, "jacobi_params: generator produced a_n <= 0");
    return v;
  }
  return 1.0;
}

double jacobi_params::b(int n) const {
  if (n < 1) throw error(errc::domain, "jacobi_params: index must be >= 1");
  if (n <= static_cast<int>(b_head_.size()))
    return b_head_[static_cast<std::size_t>(n - 1)];
  if (tail_) return tail_(n).second;
  return 0.0;
}

int jacobi_params::head_size() const {
  return static_cast<int>(std::max(a_head_.size(), b_head_.size()));
}

int jacobi_params::first_free_index(int limit, double tol) const {
  // With a free tail the matrix is known free beyond the head, so the scan
  // must cover the whole head even when it extends past `limit`; with a
  // generator tail nothing beyond `limit` is certified.
  const int top = tail_ ? limit : std::max(limit, head_size());
  int n0 = top + 1;
  for (int n = top; n >= 1; --n) {
    if (std::abs(a(n) - 1.0) + std::abs(b(n)) < tol)
      n0 = n;
    else
      break;
  }
  return std::max(n0, 1);
}

double solution_sequence::max_residual(const jacobi_params& params) const {
  const cplx zeta = z + 1.0 / z;
  double worst = 0.0;
  for (int n = 1; n + 1 < static_cast<int>(values.size()); ++n) {
    const cplx ym = values[static_cast<std::size_t>(n - 1)];
    const cplx y0 = values[static_cast<std::size_t>(n)];
    const cplx yp = values[static_cast<std::size_t>(n + 1)];
    const double am = n == 1 ? 1.0 : params.a(n - 1);
    const cplx res = am * ym + params.b(n) * y0 + params.a(n) * yp - zeta * y0;
    const double scale = std::max(
        {std::abs(ym), std::abs(y0), std::abs(yp), 1.0});
    worst = std::max(worst, std::abs(res) / scale);
  }
  return worst;
}

tail_sums weighted_tail_sums(const jacobi_params& params, int n_max,
                             int cutoff) {
  tail_sums out;
  out.xi.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  out.eta.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

  const int top = params.has_generator_tail()
                      ? std::max(cutoff, 4 * n_max + 16)
                      : std::max(params.head_size(), n_max + 1);

  if (params.has_generator_tail()) {
    // Conditional-summability check: the partial sums over [n_max, top] and
    // [n_max, top/2] must agree once the tail has settled.
    double full = 0.0, half = 0.0, full_e = 0.0, half_e = 0.0;
    for (int k = top; k > n_max; --k) {
      full += params.b(k);
      full_e += params.a(k) - 1.0;
      if (k <= top / 2) {
        half += params.b(k);
        half_e += params.a(k) - 1.0;
      }
    }
    if (std::abs(full - half) > 1e-6 * (1.0 + std::abs(full)) ||
        std::abs(full_e - half_e) > 1e-6 * (1.0 + std::abs(full_e)))
      throw error(errc::domain,
                  "weighted_tail_sums: generator tail is not summable");
  }

  double sb = 0.0, sa = 0.0;  // sum_{k>n} b_k and (a_k - 1), n descending
  for (int k = top; k >= 1; --k) {
    if (k <= n_max) {
      out.xi[static_cast<std::size_t>(k)] = -sb;
      out.eta[static_cast<std::size_t>(k)] = -sa;
    }
    sb += params.b(k);
    sa += params.a(k) - 1.0;
  }
  out.xi[0] = -sb;
  out.eta[0] = -sa;

  for (int n = 1; n <= n_max; ++n) {
    out.xi_norm += n * out.xi[static_cast<std::size_t>(n)] *
                   out.xi[static_cast<std::size_t>(n)];
    out.eta_norm += n * out.eta[static_cast<std::size_t>(n)] *
                    out.eta[static_cast<std::size_t>(n)];
  }
  return out;
}

first_moment first_moment_sum(const jacobi_params& params, int n_max) {
  first_moment out;
  double at_quarter = 0.0, at_half = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    out.partial += n * (std::abs(params.a(n) - 1.0) + std::abs(params.b(n)));
    if (n == n_max / 4) at_quarter = out.partial;
    if (n == n_max / 2) at_half = out.partial;
  }
  if (params.has_generator_tail() && n_max >= 16) {
    const double d1 = at_half - at_quarter;
    const double d2 = out.partial - at_half;
    out.divergent = d2 > 1e-12 && d2 >= 0.9 * d1;
  }
  return out;
}

solution_sequence sine_solution(const jacobi_params& params, cplx z,
                                int n_max) {
  if (std::abs(z) < 1e-300)
    throw error(errc::domain, "sine_solution: z must be nonzero");
  const cplx zeta = z + 1.0 / z;
  solution_sequence s;
  s.z = z;
  s.kind = solution_kind::sine;
  s.values.assign(static_cast<std::size_t>(n_max) + 1, cplx(0.0));
  if (n_max >= 1) s.values[1] = 1.0;
  for (int n = 1; n < n_max; ++n) {
    const double am = n == 1 ? 1.0 : params.a(n - 1);
    s.values[static_cast<std::size_t>(n + 1)] =
        ((zeta - params.b(n)) * s.values[static_cast<std::size_t>(n)] -
         am * s.values[static_cast<std::size_t>(n - 1)]) /
        params.a(n);
  }
  return s;
}

namespace {

// Free-region start for backward recursion; throws when a generator tail
// never settles within the truncation length.
int jost_free_index(const jacobi_params& params, int n_max) {
  const int n0 = params.first_free_index(n_max, kFreeTol);
  if (n0 > n_max - 2) {
    if (params.has_generator_tail()) {
      double bound = 0.0;
      for (int n = n_max + 1; n <= 4 * n_max; ++n)
        bound += std::abs(params.a(n) - 1.0) + std::abs(params.b(n));
      throw error(errc::truncation,
                  "jost_solution: no free region within n_max; residual tail "
                  "bound over the next 3*n_max terms is " +
                      std::to_string(bound));
    }
    throw error(errc::truncation,
                "jost_solution: head extends past n_max - 2; raise n_max");
  }
  return n0;
}

}  // namespace

solution_sequence jost_solution(const jacobi_params& params, cplx z,
                                int n_max) {
  const double r = std::abs(z);
  if (r <= 0.0 || r >= 1.0)
    throw error(errc::domain, "jost_solution: need 0 < |z| < 1");
  const int n0 = jost_free_index(params, n_max);
  const cplx zeta = z + 1.0 / z;

  solution_sequence phi;
  phi.z = z;
  phi.kind = solution_kind::jost;
  phi.values.assign(static_cast<std::size_t>(n_max) + 1, cplx(0.0));
  cplx zn = std::pow(z, n0);
  for (int n = n0; n <= n_max; ++n) {
    phi.values[static_cast<std::size_t>(n)] = zn;
    zn *= z;
  }
  for (int m = n0 - 1; m >= 0; --m) {
    const double am = m == 0 ? 1.0 : params.a(m);
    phi.values[static_cast<std::size_t>(m)] =
        ((zeta - params.b(m + 1)) * phi.values[static_cast<std::size_t>(m + 1)] -
         params.a(m + 1) * phi.values[static_cast<std::size_t>(m + 2)]) /
        am;
  }
  return phi;
}

jost_normalizer_result jost_normalizer(const jacobi_params& params, double z_k,
                                       int n_max) {
  if (z_k <= -1.0 || z_k >= 1.0 || z_k == 0.0)
    throw error(errc::domain, "jost_normalizer: z_k must lie in (-1,1)\\{0}");
  const auto phi = jost_solution(params, z_k, n_max);
  const double phi0 = std::abs(phi.values[0]);

  // Eigenvalue test: |phi_0(z_k)| must be small relative to the size of
  // phi_0 on a small circle around z_k.
  const double rad =
      std::min({0.05, (1.0 - std::abs(z_k)) / 4.0, std::abs(z_k) / 4.0});
  double ring = 0.0;
  for (int q = 0; q < 8; ++q) {
    const cplx zq = z_k + std::polar(rad, 2.0 * std::numbers::pi * q / 8.0);
    ring = std::max(ring, std::abs(jost_solution(params, zq, n_max).values[0]));
  }
  if (phi0 >= 1e-7 * (1.0 + ring))
    throw error(errc::domain,
                "jost_normalizer: phi_0(z_k) is not small; z_k is not an "
                "eigenvalue parameter");

  jost_normalizer_result out;
  for (int n = 1; n <= n_max; ++n)
    out.partial += std::norm(phi.values[static_cast<std::size_t>(n)]);
  out.tail = std::pow(z_k, 2 * n_max + 2) / (1.0 - z_k * z_k);
  return out;
}

cplx weyl_function(const jacobi_params& params, cplx z, int n_max) {
  const double r = std::abs(z);
  if (r <= 0.0 || r >= 1.0)
    throw error(errc::domain, "weyl_function: need 0 < |z| < 1");
  const int n0 = jost_free_index(params, n_max);
  const cplx zeta = z + 1.0 / z;
  // Level n holds the Weyl function of the matrix stripped of its first n
  // rows; the free tail contributes z, levels peel off b_{n+1}, a_{n+1}.
  cplx m = z;
  for (int n = n0 - 2; n >= 0; --n) {
    const double an = params.a(n + 1);
    const cplx den = zeta - params.b(n + 1) - an * an * m;
    if (std::abs(den) < 1e-12 * (1.0 + std::norm(m)))
      throw error(errc::pole,
                  "weyl_function: continued-fraction denominator vanished "
                  "(|den| = " +
                      std::to_string(std::abs(den)) +
                      "); z + 1/z is at or near an eigenvalue");
    m = 1.0 / den;
  }
  return m;
}

szego_limit szego_limit_check(const jacobi_params& params,
                              const spectral_measure& measure, cplx z,
                              int n_max) {
  if (std::abs(z) > 0.5 + 1e-12)
    throw error(errc::domain, "szego_limit_check: |z| <= 0.5 required");
  szego_limit out;
  if (std::abs(z) < 1e-14) {
    // limiting value at the origin: z^n p_n tends to the reciprocal product
    // of the off-diagonal entries (the leading coefficient of p_n)
    double prod = 1.0;
    for (int n = 1; n <= n_max; ++n) prod *= params.a(n);
    out.computed = 1.0 / prod;
  } else {
    const auto s = sine_solution(params, z, n_max + 1);
    out.computed =
        std::pow(z, n_max) * s.values[static_cast<std::size_t>(n_max) + 1];
  }
  // The asymptotic identity holds for the Blaschke product normalized
  // positive at the origin, which is (-1)^N times the stored factor
  // convention (each factor (z_k/|z_k|)(z - z_k)/(1 - z_k z) is negative
  // at z = 0).
  const blaschke_product b(measure.mass_zeros());
  const double flip = b.degree() % 2 == 0 ? 1.0 : -1.0;
  out.predicted = flip * b.eval(z) / ((1.0 - z * z) * outer_d(measure, z));
  return out;
}

}  // namespace jacscat
