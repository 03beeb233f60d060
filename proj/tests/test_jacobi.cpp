// tests/test_jacobi.cpp

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

#include <doctest.h>

#include <cmath>
#include <random>

#include "jacscat/errors.hpp"
#include "jacscat/jacobi.hpp"
#include "jacscat/measure.hpp"
#include "oracles.hpp"

using jacscat::cplx;
using jacscat::errc;
using jacscat::error;
using jacscat::jacobi_params;

TEST_CASE("tail sums: free matrix and single diagonal entry") {
  const auto free_sums =
      jacscat::weighted_tail_sums(jacobi_params::free_matrix(), 20);
  for (double x : free_sums.xi) CHECK(x == 0.0);
  for (double x : free_sums.eta) CHECK(x == 0.0);

  const jacobi_params one_b({}, {0.25});
  const auto sums = jacscat::weighted_tail_sums(one_b, 10);
  CHECK(sums.xi[0] == doctest::Approx(-0.25));
  for (std::size_t n = 1; n < sums.xi.size(); ++n) CHECK(sums.xi[n] == 0.0);
  CHECK(sums.xi_norm == 0.0);  // the weight kills the n = 0 term
}

TEST_CASE("tail sums: alternating generator has finite weighted norms but "
          "divergent first moment") {
  // the alternating tail n^{-1.5}, damped so a_1 stays positive
  auto gen = [](int n) {
    const double v = 0.5 * std::pow(n, -1.5) * (n % 2 == 0 ? 1.0 : -1.0);
    return std::make_pair(1.0 + v, v);
  };
  const auto params = jacobi_params::with_tail({}, {}, gen);

  const auto sums = jacscat::weighted_tail_sums(params, 2000, 100000);
  // direct-summation oracle for xi_n at a few n, alternating tail bounded by
  // its first term
  for (int n : {0, 5, 100}) {
    double direct = 0.0;
    for (int k = 200000; k > n; --k) direct -= gen(k).second;
    CHECK(sums.xi[static_cast<std::size_t>(n)] ==
          doctest::Approx(direct).epsilon(1e-6));
  }
  CHECK(sums.xi_norm < 1.0);   // weighted norms stay bounded
  CHECK(sums.eta_norm < 1.0);
  CHECK(sums.xi_norm > 0.0);

  const auto moment = jacscat::first_moment_sum(params, 1 << 14);
  CHECK(moment.divergent);
  CHECK(moment.partial > 100.0);  // n * 2 n^{-1.5} partial sums grow like sqrt

  // non-summable generator rejected
  auto harmonic = [](int n) { return std::make_pair(1.0, 1.0 / n); };
  CHECK_THROWS_AS(jacscat::weighted_tail_sums(
                      jacobi_params::with_tail({}, {}, harmonic), 10, 100000),
                  error);
}

TEST_CASE("first moment: free and finite-support cases") {
  CHECK(jacscat::first_moment_sum(jacobi_params::free_matrix(), 100).partial ==
        0.0);
  const jacobi_params one_b({}, {0.5});
  const auto m = jacscat::first_moment_sum(one_b, 100);
  CHECK(m.partial == doctest::Approx(0.5));
  CHECK_FALSE(m.divergent);
}

TEST_CASE("weighted tail chain bound on random finitely supported b") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 30);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = len(rng);
    std::vector<double> b(static_cast<std::size_t>(k));
    for (auto& x : b) x = u(rng);
    const jacobi_params params({}, b);
    const auto sums = jacscat::weighted_tail_sums(params, k + 5);
    double first_moment_b = 0.0;
    for (int n = 1; n <= k; ++n)
      first_moment_b += n * std::abs(b[static_cast<std::size_t>(n - 1)]);
    CHECK(sums.xi_norm <= first_moment_b * first_moment_b + 1e-12);
  }
}

TEST_CASE("sine solution: free matrix closed form and initial data") {
  const auto params = jacobi_params::free_matrix();
  for (const cplx z : {cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.9, 0.0)}) {
    const auto s = jacscat::sine_solution(params, z, 30);
    CHECK(std::abs(s.values[1] - 1.0) == 0.0);
    for (int n = 0; n <= 30; ++n) {
      const cplx expected = oracle::free_sine(z, n);
      CHECK(std::abs(s.values[static_cast<std::size_t>(n)] - expected) <
            1e-12 * (1.0 + std::abs(expected)));
    }
    CHECK(s.max_residual(params) < 1e-12);
  }

  // initial data holds for any parameters
  const jacobi_params other({1.3, 0.7}, {0.2, -0.4});
  CHECK(std::abs(jacscat::sine_solution(other, cplx(0.5, 0.2), 5).values[1] -
                 1.0) == 0.0);
}

TEST_CASE("sine solution: example-4 base matrix closed form") {
  const double z1 = 0.5;
  const auto params = oracle::example4_base_params(z1);
  const double root = std::sqrt(1.0 - z1 * z1);
  for (const cplx z : {cplx(0.4, 0.2), cplx(-0.3, 0.5)}) {
    const auto s = jacscat::sine_solution(params, z, 12);
    for (int n = 1; n <= 11; ++n) {
      const cplx expected =
          (std::pow(z, n + 1) * std::pow(1.0 - z1 / z, 2) -
           std::pow(z, -n - 1) * std::pow(1.0 - z1 * z, 2)) /
          (root * (z - 1.0 / z));
      CHECK(std::abs(s.values[static_cast<std::size_t>(n + 1)] - expected) <
            1e-10 * std::abs(expected));
    }
    // p_0 = 1 separately
    CHECK(std::abs(s.values[1] - 1.0) == 0.0);
  }
  // at the eigenvalue parameter: p_k = sqrt(1-z1^2) z1^{-k}
  const auto se = jacscat::sine_solution(params, z1, 10);
  for (int k = 1; k <= 9; ++k)
    CHECK(std::abs(se.values[static_cast<std::size_t>(k + 1)] -
                   root * std::pow(z1, -k)) < 1e-10 * std::pow(z1, -k));
}

TEST_CASE("jost solution: free matrix, one diagonal entry, example 4") {
  const auto free = jacobi_params::free_matrix();
  const cplx z(0.4, 0.3);
  const auto phi = jacscat::jost_solution(free, z, 40);
  for (int n = 0; n <= 40; ++n)
    CHECK(std::abs(phi.values[static_cast<std::size_t>(n)] - std::pow(z, n)) <
          1e-13);

  // b_1 = a, rest free: phi_0 = 1 - a z by a two-step backward recurrence
  const double a = 0.35;
  const jacobi_params one_b({}, {a});
  for (const cplx zz : {cplx(0.2, 0.6), cplx(-0.5, 0.1)}) {
    const auto p = jacscat::jost_solution(one_b, zz, 30);
    CHECK(std::abs(p.values[0] - (1.0 - a * zz)) < 1e-12);
    CHECK(p.max_residual(one_b) < 1e-12);
  }

  // example-4 matrix: phi_0 proportional to (1 - z1 z)(1 - z/z1)
  const double z1 = 0.5, mu1 = 1.0;
  const auto sigma = oracle::example4_sigma_params(z1, mu1, 80);
  for (const cplx zz : {cplx(0.3, 0.0), cplx(0.1, -0.4), cplx(-0.6, 0.2)}) {
    const auto p = jacscat::jost_solution(sigma, zz, 200);
    const cplx shape = (1.0 - z1 * zz) * (1.0 - zz / z1);
    const cplx c = p.values[0] / shape;
    // the proportionality constant is phi_0(0)
    const auto p0 = jacscat::jost_solution(sigma, cplx(1e-8, 0.0), 200);
    CHECK(std::abs(c - p0.values[0]) < 1e-6);
    CHECK(p.max_residual(sigma) < 1e-9);
  }

  CHECK_THROWS_AS(jacscat::jost_solution(free, cplx(1.5, 0.0), 10), error);
}

TEST_CASE("jost solution: slow generator tail reports truncation") {
  auto gen = [](int n) {
    const double v = 0.5 * std::pow(n, -1.5) * (n % 2 == 0 ? 1.0 : -1.0);
    return std::make_pair(1.0 + v, v);
  };
  const auto params = jacobi_params::with_tail({}, {}, gen);
  bool truncation_seen = false;
  try {
    jacscat::jost_solution(params, cplx(0.4, 0.0), 256);
  } catch (const error& e) {
    truncation_seen = e.code() == errc::truncation;
  }
  CHECK(truncation_seen);

  // fast generator tail is truncated silently and stays consistent
  auto fast = [](int n) { return std::make_pair(1.0 + std::pow(2.0, -n), 0.0); };
  const auto fast_params = jacobi_params::with_tail({}, {}, fast);
  const auto phi = jacscat::jost_solution(fast_params, cplx(0.3, 0.2), 128);
  CHECK(phi.max_residual(fast_params) < 1e-9);
}

TEST_CASE("jost normalizer: geometric tail and example 4") {
  const double z1 = 0.5, mu1 = 1.0;
  const auto sigma = oracle::example4_sigma_params(z1, mu1, 80);
  const auto m1 = jacscat::jost_normalizer(sigma, z1, 256);
  CHECK(m1.tail == doctest::Approx(std::pow(z1, 514) / (1.0 - z1 * z1)));
  CHECK(m1.value() == doctest::Approx(mu1).epsilon(1e-6));

  // a non-eigenvalue parameter is rejected
  CHECK_THROWS_AS(jacscat::jost_normalizer(sigma, 0.31, 256), error);
}

TEST_CASE("weyl function: free, one diagonal entry, and the jost identity") {
  const auto free = jacobi_params::free_matrix();
  for (const cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.4)})
    CHECK(std::abs(jacscat::weyl_function(free, z, 64) - z) < 1e-13);

  const double a = 0.45;
  const jacobi_params one_b({}, {a});
  for (const cplx z : {cplx(0.25, 0.3), cplx(-0.3, -0.2)})
    CHECK(std::abs(jacscat::weyl_function(one_b, z, 64) -
                   z / (1.0 - a * z)) < 1e-12);

  // phi_1 = phi_0 M on the example-4 matrix
  const auto sigma = oracle::example4_sigma_params(0.5, 1.0, 80);
  const cplx z(0.0, 0.3);
  const auto phi = jacscat::jost_solution(sigma, z, 200);
  const cplx m = jacscat::weyl_function(sigma, z, 200);
  CHECK(std::abs(phi.values[1] - phi.values[0] * m) < 1e-10);

  // pole detection at an eigenvalue parameter
  CHECK_THROWS_AS(jacscat::weyl_function(sigma, cplx(0.5, 0.0), 200), error);
}

TEST_CASE("wronskian of jost and sine solutions is constant") {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> ua(0.5, 1.5), ub(-0.8, 0.8);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<double> a(5), b(5);
    for (auto& x : a) x = ua(rng);
    for (auto& x : b) x = ub(rng);
    const jacobi_params params(a, b);
    const cplx z(0.3, 0.25);
    const int n_max = 40;
    const auto phi = jacscat::jost_solution(params, z, n_max);
    const auto s = jacscat::sine_solution(params, z, n_max);
    cplx w0{};
    for (int n = 0; n + 1 <= n_max; ++n) {
      const double an = n == 0 ? 1.0 : params.a(n);
      const cplx w = an * (phi.values[static_cast<std::size_t>(n)] *
                               s.values[static_cast<std::size_t>(n + 1)] -
                           phi.values[static_cast<std::size_t>(n + 1)] *
                               s.values[static_cast<std::size_t>(n)]);
      if (n == 0)
        w0 = w;
      else
        CHECK(std::abs(w - w0) < 1e-9 * std::max(1.0, std::abs(w0)));
    }
    // conjugation symmetry of the jost function
    const auto phic = jacscat::jost_solution(params, std::conj(z), n_max);
    CHECK(std::abs(phic.values[0] - std::conj(phi.values[0])) < 1e-12);
  }
}

TEST_CASE("jost function equals the blaschke-outer quotient") {
  // on a normalized measure the constant is exactly one, with the product
  // normalized positive at the origin ((-1)^N times the stored convention)
  const double a = 0.5;
  const jacobi_params params1({}, {a});
  const auto measure1 = oracle::example1_measure(a, 10);
  for (const cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.1)}) {
    const auto phi = jacscat::jost_solution(params1, z, 64);
    CHECK(std::abs(phi.values[0] - 1.0 / jacscat::outer_d(measure1, z)) <
          1e-10);  // N = 0, B = 1
  }

  const double z1 = 0.5, mu1 = 1.0;
  const auto params4 = oracle::example4_sigma_params(z1, mu1, 80);
  const auto measure4 = oracle::example4_measure(z1, mu1, 10);
  const jacscat::blaschke_product blas({z1});
  for (const cplx z : {cplx(0.25, 0.3), cplx(-0.35, 0.0), cplx(0.0, 0.55)}) {
    const auto phi = jacscat::jost_solution(params4, z, 200);
    const cplx quotient = -blas.eval(z) / jacscat::outer_d(measure4, z);
    CHECK(std::abs(phi.values[0] - quotient) < 1e-8);
  }
}

TEST_CASE("szego asymptotics: free matrix against the closed form") {
  const auto free = jacobi_params::free_matrix();
  const auto measure = jacscat::spectral_measure(
      0, 0, jacscat::circle_function::zero(10), {}, true);
  for (const cplx z : {cplx(0.2, 0.0), cplx(0.0, 0.4), cplx(-0.3, 0.0)}) {
    const auto lim = jacscat::szego_limit_check(free, measure, z, 200);
    CHECK(std::abs(lim.predicted - 1.0 / (1.0 - z * z)) < 1e-12);
    CHECK(lim.gap() < 1e-10);
  }
  // z = 0: the computed side is the reciprocal leading-coefficient product,
  // the predicted side B(0)/D(0); both equal 1 for the free matrix
  const auto at0 = jacscat::szego_limit_check(free, measure, cplx(0.0), 40);
  CHECK(std::abs(at0.computed - 1.0) < 1e-12);
  CHECK(std::abs(at0.predicted - 1.0) < 1e-12);
}
