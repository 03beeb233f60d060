// tests/test_json_io.cpp

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
#include "jacscat/json_io.hpp"
#include "oracles.hpp"

using jacscat::errc;
using jacscat::error;

TEST_CASE("serialization round trips preserve grid values") {
  std::mt19937 rng(139);

  const auto f = oracle::random_symmetric(rng, 6, 10);
  const auto f2 = jacscat::circle_function_from_json(jacscat::to_json(f));
  CHECK(f2.grid_log2() == f.grid_log2());
  for (int j = 0; j < f.size(); ++j)
    CHECK(std::abs(f2.sample(j) - f.sample(j)) == 0.0);
  CHECK(f2.symmetry() == f.symmetry());

  const auto m = oracle::example4_measure(0.5, 1.0, 8);
  const auto m2 = jacscat::spectral_measure_from_json(jacscat::to_json(m));
  CHECK(m2.gamma1() == 0);
  CHECK(m2.masses().size() == 1);
  CHECK(m2.masses()[0].sigma == m.masses()[0].sigma);
  CHECK(m2.normalized() == m.normalized());

  const auto d = oracle::example4_data(0.5, 1.0, 8);
  const auto d2 = jacscat::scattering_data_from_json(jacscat::to_json(d));
  CHECK(d2.zeros == d.zeros);
  CHECK(d2.mus == d.mus);
  for (int j = 0; j < d.s.size(); ++j)
    CHECK(std::abs(d2.s.sample(j) - d.s.sample(j)) == 0.0);

  const jacscat::jacobi_params p({1.2, 0.8}, {0.1, -0.3});
  const auto p2 = jacscat::jacobi_params_from_json(jacscat::to_json(p));
  CHECK(p2.a_head() == p.a_head());
  CHECK(p2.b_head() == p.b_head());

  const jacscat::verblunsky_seq v{{0.5, -0.25, 0.1}};
  CHECK(jacscat::verblunsky_from_json(jacscat::to_json(v)).alphas == v.alphas);
}

TEST_CASE("parse failures carry errc::parse and a diagnostic") {
  bool parse_code = false;
  std::string msg;
  try {
    jacscat::spectral_measure_from_json("{\"gamma1\": 0,");
  } catch (const error& e) {
    parse_code = e.code() == errc::parse;
    msg = e.what();
  }
  CHECK(parse_code);
  CHECK_FALSE(msg.empty());

  // structurally valid JSON with missing keys is also a parse failure
  CHECK_THROWS_AS(jacscat::scattering_data_from_json("{\"gamma1\": 0}"), error);

  // wrong sample arity
  CHECK_THROWS_AS(jacscat::circle_function_from_json(
                      "{\"grid_log2\": 3, \"samples\": [[1.0]]}"),
                  error);
}

TEST_CASE("csv exports") {
  const jacscat::jacobi_params p({1.5}, {0.25});
  const auto csv = jacscat::jacobi_to_csv(p, 3);
  CHECK(csv.find("n,a,b") == 0);
  CHECK(csv.find("1,1.5,0.25") != std::string::npos);
  CHECK(csv.find("2,1,0") != std::string::npos);

  const auto vcsv = jacscat::verblunsky_to_csv(jacscat::verblunsky_seq{{0.5}});
  CHECK(vcsv.find("n,alpha") == 0);
  CHECK(vcsv.find("0,0.5") != std::string::npos);
}
