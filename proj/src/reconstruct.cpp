// src/reconstruct.cpp

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

#include "jacscat/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jacscat/errors.hpp"

namespace jacscat {

circle_measure::circle_measure(circle_function weight, bool normalized)
    : weight_(std::move(weight)), normalized_(normalized) {
  if (!weight_.real_valued())
    throw error(errc::domain, "circle_measure: weight must be real");
  if (weight_.symmetry() != spin_symmetry::symmetric)
    throw error(errc::domain, "circle_measure: weight must be symmetric");
  for (int j = 0; j < weight_.size(); ++j)
    if (weight_.sample(j).real() < 0.0)
      throw error(errc::domain, "circle_measure: weight must be nonnegative");
}

double circle_measure::moment(int n) const {
  // grid quadrature of t^{-n} w(t) m(dt) is exactly the n-th coefficient
  return weight_.coeff(n).real();
}

circle_measure szego_transform_o(const spectral_measure& measure) {
  if (measure.gamma1() != 0 || measure.gamma2() != 0)
    throw error(errc::domain,
                "szego_transform_o: defined for gamma1 = gamma2 = 0 only");
  if (!measure.masses().empty())
    throw error(errc::domain,
                "szego_transform_o: measure must have no mass points");
  const auto& lr = measure.log_rho0();
  const int m = lr.size();
  std::vector<cplx> w(static_cast<std::size_t>(m));
  double mean = 0.0;
  for (int j = 0; j < m; ++j) {
    const double v = std::exp(lr.sample(j).real());
    w[static_cast<std::size_t>(j)] = v;
    mean += v;
  }
  mean /= m;
  for (auto& v : w) v /= mean;
  return circle_measure(circle_function::analyze(std::move(w), lr.grid_log2()),
                        /*normalized=*/true);
}

verblunsky_seq verblunsky(const circle_measure& mu, int n_max) {
  if (!mu.normalized())
    throw error(errc::domain, "verblunsky: measure must be normalized");
  if (n_max < 0 || n_max + 1 > mu.weight().size() / 2 - 1)
    throw error(errc::size_mismatch,
                "verblunsky: n_max exceeds the available moment range");
  for (int j = 0; j < mu.weight().size(); ++j)
    if (mu.weight().sample(j).real() <= 0.0)
      throw error(errc::domain, "verblunsky: weight must be positive on the grid");

  // moments of positive powers: m_p = integral t^p dmu = coeff(-p); the
  // weight is real symmetric, so everything stays real
  std::vector<double> mom(static_cast<std::size_t>(n_max) + 2);
  for (int p = 0; p <= n_max + 1; ++p)
    mom[static_cast<std::size_t>(p)] = mu.moment(-p);

  verblunsky_seq out;
  out.alphas.reserve(static_cast<std::size_t>(n_max));

  // Szegő/Levinson recursion on monic polynomials: Phi_{n+1} = z Phi_n -
  // alpha_n Phi_n^*, alpha_n = <z Phi_n, 1> / ||Phi_n||^2 (real case).
  std::vector<double> phi = {1.0};
  double norm2 = mom[0];
  for (int n = 0; n < n_max; ++n) {
    double num = 0.0;
    for (int j = 0; j <= n; ++j)
      num += phi[static_cast<std::size_t>(j)] *
             mom[static_cast<std::size_t>(j) + 1];
    const double alpha = num / norm2;
    if (std::abs(alpha) >= 1.0 - 1e-12)
      throw error(errc::degenerate,
                  "verblunsky: |alpha_" + std::to_string(n) +
                      "| reached 1; moment problem is degenerate");
    std::vector<double> next(static_cast<std::size_t>(n) + 2, 0.0);
    for (int j = 0; j <= n; ++j) {
      next[static_cast<std::size_t>(j) + 1] += phi[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] -=
          alpha * phi[static_cast<std::size_t>(n - j)];
    }
    phi = std::move(next);
    norm2 *= (1.0 - alpha * alpha);
    out.alphas.push_back(alpha);
  }
  return out;
}

namespace {

double alpha_at(const verblunsky_seq& seq, int j) {
  return j < static_cast<int>(seq.alphas.size())
             ? seq.alphas[static_cast<std::size_t>(j)]
             : 0.0;
}

}  // namespace

jacobi_params geronimus(const verblunsky_seq& alphas, int n_rows) {
  for (double al : alphas.alphas)
    if (!(std::abs(al) < 1.0))
      throw error(errc::domain, "geronimus: coefficients must lie in (-1,1)");
  std::vector<double> a_head, b_head;
  a_head.reserve(static_cast<std::size_t>(n_rows));
  b_head.reserve(static_cast<std::size_t>(n_rows));
  for (int n = 0; n < n_rows; ++n) {
    const double a0 = alpha_at(alphas, 2 * n);
    const double a1 = alpha_at(alphas, 2 * n + 1);
    const double a2 = alpha_at(alphas, 2 * n + 2);
    const double a3 = alpha_at(alphas, 2 * n + 3);
    b_head.push_back(a0 * (1.0 - a1) - a2 * (1.0 + a1));
    const double asq = (1.0 - a3) * (1.0 - a2 * a2) * (1.0 + a1);
    if (!(asq > 0.0))
      throw error(errc::domain, "geronimus: produced a nonpositive a_n^2");
    a_head.push_back(std::sqrt(asq));
  }
  // trim the exactly-free tail so finite-support output stays compact
  while (!a_head.empty() && a_head.back() == 1.0 && b_head.back() == 0.0) {
    a_head.pop_back();
    b_head.pop_back();
  }
  return jacobi_params(std::move(a_head), std::move(b_head));
}

double christoffel_kernel(const jacobi_params& params, double lambda1, int n) {
  if (std::abs(lambda1) <= 2.0)
    throw error(errc::domain, "christoffel_kernel: |lambda| must exceed 2");
  if (n < 0) throw error(errc::domain, "christoffel_kernel: order must be >= 0");
  if (n == 0) return 0.0;
  const double z1 = inverse_joukowski(lambda1);
  const auto s = sine_solution(params, z1, n);
  double total = 0.0;
  for (int k = 0; k < n; ++k)
    total += std::norm(s.values[static_cast<std::size_t>(k) + 1]);
  return total;
}

jacobi_params nevai_insert(const jacobi_params& params0, double lambda1,
                           double eps, int n_max) {
  if (std::abs(lambda1) <= 2.0)
    throw error(errc::domain, "nevai_insert: |lambda| must exceed 2");
  if (eps < 0.0) throw error(errc::domain, "nevai_insert: eps must be >= 0");
  const double zeta = lambda1;

  std::vector<double> a_out, b_out;
  a_out.reserve(static_cast<std::size_t>(n_max));
  b_out.reserve(static_cast<std::size_t>(n_max));

  // p_{m-1}, p_m and the gauges G_m = 1 + eps K_m, rescaled jointly when the
  // kernel growth approaches the floating-point ceiling; every output is a
  // ratio of gauge quantities, so the rescaling is exact.
  double p_prev = 1.0;                       // p_0
  double p_cur = (zeta - params0.b(1)) / params0.a(1);  // p_1
  double g_prev = 1.0;                       // G_0
  double g_cur = 1.0 + eps;                  // G_1
  double g_next = g_cur + eps * p_cur * p_cur;  // G_2
  double v_prev = 0.0;                       // V_0
  for (int m = 1; m <= n_max; ++m) {
    const double v_cur = eps * p_prev * p_cur / g_cur;
    const double am = params0.a(m);
    const double am_prev = m == 1 ? 1.0 : params0.a(m - 1);
    a_out.push_back(am * std::sqrt(g_prev * g_next) / g_cur);
    b_out.push_back(params0.b(m) - am_prev * v_prev + am * v_cur);

    // advance to m+1
    const double p_next =
        ((zeta - params0.b(m + 1)) * p_cur - params0.a(m) * p_prev) /
        params0.a(m + 1);
    p_prev = p_cur;
    p_cur = p_next;
    g_prev = g_cur;
    g_cur = g_next;
    g_next = g_cur + eps * p_cur * p_cur;
    v_prev = v_cur;
    if (std::abs(p_cur) > 1e120 || g_cur > 1e120) {
      const double f = 1e-120;
      p_prev *= f;
      p_cur *= f;
      g_prev *= f * f;
      g_cur *= f * f;
      g_next *= f * f;
    }
  }
  while (!a_out.empty() && std::abs(a_out.back() - 1.0) < 1e-15 &&
         std::abs(b_out.back()) < 1e-15) {
    a_out.pop_back();
    b_out.pop_back();
  }
  return jacobi_params(std::move(a_out), std::move(b_out));
}

jacobi_params jacobi_from_spectral(const spectral_measure& measure, int n_rows,
                                   int n_work) {
  if (measure.gamma1() != 0 || measure.gamma2() != 0)
    throw error(errc::unsupported,
                "jacobi_from_spectral: only gamma1 = gamma2 = 0 is supported; "
                "the even and half-integer circle transforms needed for "
                "nonzero gamma are not implemented");
  const auto normalized = normalize(measure);
  // the moment range of the grid caps how many recursion steps are exact
  const int grid_cap = (measure.log_rho0().size() / 2 - 5) / 2;
  n_work = std::min(std::max(n_work, n_rows), std::max(grid_cap, n_rows));

  // base reconstruction of the purely absolutely continuous part
  const spectral_measure base(0, 0, normalized.log_rho0(), {}, false);
  const auto base_norm = normalize(base);
  const auto mu = szego_transform_o(base_norm);
  const int base_rows = normalized.masses().empty() ? n_rows : n_work;
  const auto alphas = verblunsky(mu, 2 * base_rows + 2);
  jacobi_params params = geronimus(alphas, base_rows);
  if (normalized.masses().empty()) return params;

  // insertion order: decreasing |lambda|
  auto masses = normalized.masses();
  std::sort(masses.begin(), masses.end(), [](const mass_point& l,
                                             const mass_point& r) {
    return std::abs(l.z + 1.0 / l.z) > std::abs(r.z + 1.0 / r.z);
  });

  // insertion weights from the mass ratios: inserting j-th mass must leave
  // it with weight sigma_j after all later insertions rescale the measure
  std::vector<double> eps(masses.size(), 0.0);
  double product = 1.0;  // prod_{i>j} (1 + eps_i)
  for (int j = static_cast<int>(masses.size()) - 1; j >= 0; --j) {
    const double target = masses[static_cast<std::size_t>(j)].sigma * product;
    if (!(target < 1.0))
      throw error(errc::domain,
                  "jacobi_from_spectral: mass ratios leave no room for the "
                  "absolutely continuous part");
    eps[static_cast<std::size_t>(j)] = target / (1.0 - target);
    product *= 1.0 + eps[static_cast<std::size_t>(j)];
  }

  for (std::size_t j = 0; j < masses.size(); ++j) {
    const double lambda = masses[j].z + 1.0 / masses[j].z;
    params = nevai_insert(params, lambda, eps[j], n_work);
  }

  // truncate the materialized head to the requested length
  std::vector<double> a_head, b_head;
  for (int n = 1; n <= n_rows; ++n) {
    a_head.push_back(params.a(n));
    b_head.push_back(params.b(n));
  }
  while (!a_head.empty() && std::abs(a_head.back() - 1.0) < 1e-15 &&
         std::abs(b_head.back()) < 1e-15) {
    a_head.pop_back();
    b_head.pop_back();
  }
  return jacobi_params(std::move(a_head), std::move(b_head));
}

}  // namespace jacscat
