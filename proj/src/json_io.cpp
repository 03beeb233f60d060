// src/json_io.cpp

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

#include "jacscat/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "jacscat/errors.hpp"

namespace jacscat {

using nlohmann::json;

namespace {

json circle_to_obj(const circle_function& f) {
  json samples = json::array();
  for (int j = 0; j < f.size(); ++j)
    samples.push_back({f.sample(j).real(), f.sample(j).imag()});
  return json{{"grid_log2", f.grid_log2()}, {"samples", std::move(samples)}};
}

circle_function circle_from_obj(const json& obj) {
  if (!obj.is_object() || !obj.contains("grid_log2") || !obj.contains("samples"))
    throw error(errc::parse,
                "circle function: expected {\"grid_log2\", \"samples\"}");
  const int grid_log2 = obj.at("grid_log2").get<int>();
  const auto& arr = obj.at("samples");
  if (!arr.is_array())
    throw error(errc::parse, "circle function: samples must be an array");
  std::vector<cplx> samples;
  samples.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw error(errc::parse,
                  "circle function: each sample must be a [re, im] pair");
    samples.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return circle_function::analyze(std::move(samples), grid_log2);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse, e.what());  // carries byte position
  }
}

// wraps type/key errors from nlohmann into errc::parse
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw error(errc::parse, e.what());
  }
}

}  // namespace

std::string to_json(const circle_function& f) { return circle_to_obj(f).dump(); }

std::string to_json(const spectral_measure& m) {
  json masses = json::array();
  for (const auto& mp : m.masses())
    masses.push_back({{"z", mp.z}, {"sigma", mp.sigma}});
  json obj{{"gamma1", m.gamma1()},
           {"gamma2", m.gamma2()},
           {"log_rho0", circle_to_obj(m.log_rho0())},
           {"masses", std::move(masses)},
           {"normalized", m.normalized()}};
  return obj.dump();
}

std::string to_json(const scattering_data& d) {
  json obj{{"gamma1", d.gamma1},
           {"gamma2", d.gamma2},
           {"zeros", d.zeros},
           {"mus", d.mus},
           {"s", circle_to_obj(d.s)}};
  return obj.dump();
}

std::string to_json(const jacobi_params& p, int n_rows) {
  std::vector<double> a = p.a_head(), b = p.b_head();
  if (n_rows >= 0) {
    a.clear();
    b.clear();
    for (int n = 1; n <= n_rows; ++n) {
      a.push_back(p.a(n));
      b.push_back(p.b(n));
    }
  }
  json obj{{"a", std::move(a)}, {"b", std::move(b)}, {"tail", "free"}};
  return obj.dump();
}

std::string to_json(const verblunsky_seq& v) {
  return json{{"alphas", v.alphas}}.dump();
}

std::string to_json(const admissibility_report& r) {
  json items = json::array();
  for (const auto& item : r.items)
    items.push_back(
        {{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
  return json{{"admissible", r.admissible}, {"items", std::move(items)}}.dump();
}

circle_function circle_function_from_json(const std::string& text) {
  const json obj = parse_text(text);
  return guarded([&] { return circle_from_obj(obj); });
}

spectral_measure spectral_measure_from_json(const std::string& text) {
  const json obj = parse_text(text);
  return guarded([&] {
    std::vector<mass_point> masses;
    for (const auto& mp : obj.at("masses"))
      masses.push_back({mp.at("z").get<double>(), mp.at("sigma").get<double>()});
    return spectral_measure(obj.at("gamma1").get<int>(),
                            obj.at("gamma2").get<int>(),
                            circle_from_obj(obj.at("log_rho0")),
                            std::move(masses),
                            obj.value("normalized", false));
  });
}

scattering_data scattering_data_from_json(const std::string& text) {
  const json obj = parse_text(text);
  return guarded([&] {
    return scattering_data(obj.at("gamma1").get<int>(),
                           obj.at("gamma2").get<int>(),
                           obj.at("zeros").get<std::vector<double>>(),
                           obj.at("mus").get<std::vector<double>>(),
                           circle_from_obj(obj.at("s")));
  });
}

jacobi_params jacobi_params_from_json(const std::string& text) {
  const json obj = parse_text(text);
  return guarded([&] {
    if (obj.value("tail", "free") != std::string("free"))
      throw error(errc::parse, "jacobi params: only \"free\" tails are serializable");
    return jacobi_params(obj.at("a").get<std::vector<double>>(),
                         obj.at("b").get<std::vector<double>>());
  });
}

verblunsky_seq verblunsky_from_json(const std::string& text) {
  const json obj = parse_text(text);
  return guarded([&] {
    return verblunsky_seq{obj.at("alphas").get<std::vector<double>>()};
  });
}

std::string jacobi_to_csv(const jacobi_params& p, int n_rows) {
  std::ostringstream out;
  out.precision(17);
  out << "n,a,b\n";
  for (int n = 1; n <= n_rows; ++n)
    out << n << ',' << p.a(n) << ',' << p.b(n) << '\n';
  return out.str();
}

std::string verblunsky_to_csv(const verblunsky_seq& v) {
  std::ostringstream out;
  out.precision(17);
  out << "n,alpha\n";
  for (std::size_t n = 0; n < v.alphas.size(); ++n)
    out << n << ',' << v.alphas[n] << '\n';
  return out.str();
}

}  // namespace jacscat
