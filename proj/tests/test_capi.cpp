// tests/test_capi.cpp

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

// Exercises the shared-library surface the way an external client would:
// only jacscat.h, opaque handles, status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "jacscat.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  jacscat_string_free(s);
  return out;
}

// interleaved samples of s(t) = (1 - a t)/(1 - a conj t)
std::vector<double> example1_samples(double a, int grid_log2) {
  const int m = 1 << grid_log2;
  std::vector<double> out(2 * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto t = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    const auto v = (1.0 - a * t) / (1.0 - a * std::conj(t));
    out[2 * static_cast<std::size_t>(j)] = v.real();
    out[2 * static_cast<std::size_t>(j) + 1] = v.imag();
  }
  return out;
}

std::vector<double> monomial_samples(int power, int grid_log2) {
  const int m = 1 << grid_log2;
  std::vector<double> out(2 * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto t = std::polar(1.0, 2.0 * std::numbers::pi * j * power / m);
    out[2 * static_cast<std::size_t>(j)] = t.real();
    out[2 * static_cast<std::size_t>(j) + 1] = t.imag();
  }
  return out;
}

}  // namespace

TEST_CASE("defaults and version") {
  const auto o = jacscat_options_default();
  CHECK(o.grid_log2 == 12);
  CHECK(o.n_max == 256);
  CHECK(o.tol == 1e-8);
  CHECK(std::strlen(jacscat_version()) > 0);
}

TEST_CASE("null arguments are rejected with a message") {
  CHECK(jacscat_scattering_from_json(nullptr, nullptr) ==
        JACSCAT_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(jacscat_last_error()) > 0);
  CHECK(jacscat_forward(nullptr, nullptr, nullptr) ==
        JACSCAT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parse errors surface as JACSCAT_ERR_PARSE") {
  jacscat_scattering* data = nullptr;
  CHECK(jacscat_scattering_from_json("{\"gamma1\":", &data) ==
        JACSCAT_ERR_PARSE);
  CHECK(data == nullptr);
  CHECK(std::strlen(jacscat_last_error()) > 0);

  jacscat_measure* m = nullptr;
  CHECK(jacscat_measure_from_json("[1,2,3]", &m) == JACSCAT_ERR_PARSE);
}

TEST_CASE("full pipeline over the C surface: example 1") {
  const double a = 0.5;
  const auto samples = example1_samples(a, 10);
  jacscat_scattering* data = nullptr;
  REQUIRE(jacscat_scattering_create(0, 0, nullptr, nullptr, 0, samples.data(),
                                    10, &data) == JACSCAT_OK);

  int n_masses = -1, grid_log2 = 0;
  CHECK(jacscat_scattering_size(data, &n_masses, &grid_log2) == JACSCAT_OK);
  CHECK(n_masses == 0);
  CHECK(grid_log2 == 10);

  // serialize and re-load
  char* text = nullptr;
  REQUIRE(jacscat_scattering_to_json(data, &text) == JACSCAT_OK);
  const std::string json = take(text);
  jacscat_scattering* data2 = nullptr;
  REQUIRE(jacscat_scattering_from_json(json.c_str(), &data2) == JACSCAT_OK);

  const auto opts = jacscat_options_default();
  jacscat_measure* measure = nullptr;
  REQUIRE(jacscat_inverse(data2, &opts, &measure) == JACSCAT_OK);

  double mass = 0.0;
  CHECK(jacscat_measure_total_mass(measure, &mass) == JACSCAT_OK);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  double f0 = 0.0;
  CHECK(jacscat_measure_density(measure, 0.0, &f0) == JACSCAT_OK);
  CHECK(f0 == doctest::Approx(1.0 / (std::numbers::pi * (1.0 + a * a))));
  CHECK(jacscat_measure_density(measure, 2.5, &f0) == JACSCAT_ERR_DOMAIN);

  jacscat_jacobi* jac = nullptr;
  REQUIRE(jacscat_reconstruct(measure, &opts, 10, &jac) == JACSCAT_OK);
  std::vector<double> arow(10), brow(10);
  REQUIRE(jacscat_jacobi_get(jac, 10, arow.data(), brow.data()) == JACSCAT_OK);
  CHECK(brow[0] == doctest::Approx(a).epsilon(1e-9));
  for (int n = 1; n < 10; ++n) CHECK(std::abs(brow[n]) < 1e-8);
  for (int n = 0; n < 10; ++n) CHECK(arow[n] == doctest::Approx(1.0));

  char* csv = nullptr;
  REQUIRE(jacscat_jacobi_to_csv(jac, 3, &csv) == JACSCAT_OK);
  CHECK(take(csv).find("n,a,b") == 0);

  std::vector<double> alphas(5);
  REQUIRE(jacscat_verblunsky(measure, &opts, 5, alphas.data()) == JACSCAT_OK);
  CHECK(alphas[0] == doctest::Approx(a).epsilon(1e-10));

  // forward closes the loop
  jacscat_scattering* back = nullptr;
  REQUIRE(jacscat_forward(measure, &opts, &back) == JACSCAT_OK);
  const int m = 1 << grid_log2;
  std::vector<double> s_in(2 * static_cast<std::size_t>(m)),
      s_back(2 * static_cast<std::size_t>(m));
  CHECK(jacscat_scattering_get(data, nullptr, nullptr, nullptr, nullptr,
                               s_in.data()) == JACSCAT_OK);
  CHECK(jacscat_scattering_get(back, nullptr, nullptr, nullptr, nullptr,
                               s_back.data()) == JACSCAT_OK);
  for (std::size_t k = 0; k < s_in.size(); ++k)
    CHECK(s_back[k] == doctest::Approx(s_in[k]).epsilon(1e-8));

  jacscat_scattering_free(back);
  jacscat_jacobi_free(jac);
  jacscat_measure_free(measure);
  jacscat_scattering_free(data2);
  jacscat_scattering_free(data);
}

TEST_CASE("validation and roundtrip reports") {
  // s = t with no masses: winding 1, inadmissible
  const auto samples = monomial_samples(1, 8);
  jacscat_scattering* bad = nullptr;
  REQUIRE(jacscat_scattering_create(0, 0, nullptr, nullptr, 0, samples.data(),
                                    8, &bad) == JACSCAT_OK);
  char* report = nullptr;
  REQUIRE(jacscat_validate(bad, &report) == JACSCAT_OK);
  const std::string rep = take(report);
  CHECK(rep.find("\"admissible\":false") != std::string::npos);
  CHECK(rep.find("index") != std::string::npos);

  const auto opts = jacscat_options_default();
  char* rt = nullptr;
  CHECK(jacscat_roundtrip_report(bad, &opts, &rt) == JACSCAT_ERR_INADMISSIBLE);
  const std::string rt_rep = take(rt);
  CHECK(rt_rep.find("\"pass\": false") != std::string::npos);
  jacscat_scattering_free(bad);

  // admissible data passes with small deviations
  const auto good_samples = example1_samples(0.4, 10);
  jacscat_scattering* good = nullptr;
  REQUIRE(jacscat_scattering_create(0, 0, nullptr, nullptr, 0,
                                    good_samples.data(), 10, &good) ==
          JACSCAT_OK);
  char* rt2 = nullptr;
  REQUIRE(jacscat_roundtrip_report(good, &opts, &rt2) == JACSCAT_OK);
  const std::string rep2 = take(rt2);
  CHECK(rep2.find("\"pass\": true") != std::string::npos);
  CHECK(rep2.find("max_s_deviation") != std::string::npos);
  jacscat_scattering_free(good);
}

TEST_CASE("unsupported gamma reconstruction is reported as such") {
  // gamma = (1,0) measure: build via JSON
  const int m = 1 << 8;
  std::string samples = "[";
  for (int j = 0; j < m; ++j) samples += std::string(j ? "," : "") + "[0.0,0.0]";
  samples += "]";
  const std::string text =
      "{\"gamma1\":1,\"gamma2\":0,\"log_rho0\":{\"grid_log2\":8,\"samples\":" +
      samples + "},\"masses\":[],\"normalized\":false}";
  jacscat_measure* measure = nullptr;
  REQUIRE(jacscat_measure_from_json(text.c_str(), &measure) == JACSCAT_OK);
  const auto opts = jacscat_options_default();
  jacscat_jacobi* jac = nullptr;
  CHECK(jacscat_reconstruct(measure, &opts, 5, &jac) ==
        JACSCAT_ERR_UNSUPPORTED);
  CHECK(std::string(jacscat_last_error()).find("gamma") != std::string::npos);
  jacscat_measure_free(measure);
}
