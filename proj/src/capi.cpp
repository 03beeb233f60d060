// src/capi.cpp

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

#include "jacscat.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "jacscat/errors.hpp"
#include "jacscat/inverse.hpp"
#include "jacscat/json_io.hpp"
#include "jacscat/reconstruct.hpp"
#include "jacscat/scattering.hpp"

struct jacscat_measure {
  jacscat::spectral_measure value;
};
struct jacscat_scattering {
  jacscat::scattering_data value;
};
struct jacscat_jacobi {
  jacscat::jacobi_params value;
};

namespace {

thread_local std::string g_last_error;

jacscat_status to_status(const jacscat::error& e) {
  using jacscat::errc;
  switch (e.code()) {
    case errc::parse:
      return JACSCAT_ERR_PARSE;
    case errc::inadmissible:
    case errc::inconsistent_data:
      return JACSCAT_ERR_INADMISSIBLE;
    case errc::unsupported:
      return JACSCAT_ERR_UNSUPPORTED;
    case errc::degenerate:
    case errc::resolution:
    case errc::truncation:
    case errc::pole:
      return JACSCAT_ERR_NUMERIC;
    case errc::domain:
    case errc::size_mismatch:
      return JACSCAT_ERR_DOMAIN;
  }
  return JACSCAT_ERR_INTERNAL;
}

template <typename Fn>
jacscat_status guard(Fn&& fn) {
  try {
    fn();
    return JACSCAT_OK;
  } catch (const jacscat::error& e) {
    g_last_error = e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JACSCAT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return JACSCAT_ERR_INTERNAL;
  }
}

jacscat_status invalid(const char* msg) {
  g_last_error = msg;
  return JACSCAT_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jacscat_options resolve(const jacscat_options* opts) {
  return opts ? *opts : jacscat_options_default();
}

}  // namespace

extern "C" {

jacscat_options jacscat_options_default(void) {
  jacscat_options o;
  o.grid_log2 = 12;
  o.n_max = 256;
  o.tol = 1e-8;
  return o;
}

const char* jacscat_last_error(void) { return g_last_error.c_str(); }

const char* jacscat_version(void) { return "1.0.0"; }

void jacscat_string_free(char* s) { delete[] s; }

jacscat_status jacscat_scattering_from_json(const char* text,
                                            jacscat_scattering** out) {
  if (!text || !out) return invalid("scattering_from_json: null argument");
  return guard([&] {
    *out = new jacscat_scattering{jacscat::scattering_data_from_json(text)};
  });
}

jacscat_status jacscat_scattering_to_json(const jacscat_scattering* data,
                                          char** out) {
  if (!data || !out) return invalid("scattering_to_json: null argument");
  return guard([&] { *out = copy_string(jacscat::to_json(data->value)); });
}

jacscat_status jacscat_scattering_create(int gamma1, int gamma2,
                                         const double* zeros,
                                         const double* mus, int n_masses,
                                         const double* s_samples,
                                         int grid_log2,
                                         jacscat_scattering** out) {
  if (!out || n_masses < 0 || (n_masses > 0 && (!zeros || !mus)) || !s_samples)
    return invalid("scattering_create: null argument");
  return guard([&] {
    const std::size_t m = std::size_t{1} << grid_log2;
    std::vector<jacscat::cplx> samples(m);
    for (std::size_t j = 0; j < m; ++j)
      samples[j] = jacscat::cplx(s_samples[2 * j], s_samples[2 * j + 1]);
    *out = new jacscat_scattering{jacscat::scattering_data(
        gamma1, gamma2,
        std::vector<double>(zeros, zeros + n_masses),
        std::vector<double>(mus, mus + n_masses),
        jacscat::circle_function::analyze(std::move(samples), grid_log2))};
  });
}

void jacscat_scattering_free(jacscat_scattering* data) { delete data; }

jacscat_status jacscat_scattering_size(const jacscat_scattering* data,
                                       int* n_masses, int* grid_log2) {
  if (!data) return invalid("scattering_size: null handle");
  if (n_masses) *n_masses = static_cast<int>(data->value.zeros.size());
  if (grid_log2) *grid_log2 = data->value.s.grid_log2();
  return JACSCAT_OK;
}

jacscat_status jacscat_scattering_get(const jacscat_scattering* data,
                                      int* gamma1, int* gamma2, double* zeros,
                                      double* mus, double* s_samples) {
  if (!data) return invalid("scattering_get: null handle");
  if (gamma1) *gamma1 = data->value.gamma1;
  if (gamma2) *gamma2 = data->value.gamma2;
  for (std::size_t k = 0; k < data->value.zeros.size(); ++k) {
    if (zeros) zeros[k] = data->value.zeros[k];
    if (mus) mus[k] = data->value.mus[k];
  }
  if (s_samples) {
    for (int j = 0; j < data->value.s.size(); ++j) {
      s_samples[2 * j] = data->value.s.sample(j).real();
      s_samples[2 * j + 1] = data->value.s.sample(j).imag();
    }
  }
  return JACSCAT_OK;
}

jacscat_status jacscat_measure_from_json(const char* text,
                                         jacscat_measure** out) {
  if (!text || !out) return invalid("measure_from_json: null argument");
  return guard([&] {
    *out = new jacscat_measure{jacscat::spectral_measure_from_json(text)};
  });
}

jacscat_status jacscat_measure_to_json(const jacscat_measure* m, char** out) {
  if (!m || !out) return invalid("measure_to_json: null argument");
  return guard([&] { *out = copy_string(jacscat::to_json(m->value)); });
}

void jacscat_measure_free(jacscat_measure* m) { delete m; }

jacscat_status jacscat_measure_size(const jacscat_measure* m, int* n_masses,
                                    int* grid_log2) {
  if (!m) return invalid("measure_size: null handle");
  if (n_masses) *n_masses = static_cast<int>(m->value.masses().size());
  if (grid_log2) *grid_log2 = m->value.log_rho0().grid_log2();
  return JACSCAT_OK;
}

jacscat_status jacscat_measure_get_masses(const jacscat_measure* m, double* z,
                                          double* sigma) {
  if (!m) return invalid("measure_get_masses: null handle");
  for (std::size_t k = 0; k < m->value.masses().size(); ++k) {
    if (z) z[k] = m->value.masses()[k].z;
    if (sigma) sigma[k] = m->value.masses()[k].sigma;
  }
  return JACSCAT_OK;
}

jacscat_status jacscat_measure_gammas(const jacscat_measure* m, int* gamma1,
                                      int* gamma2) {
  if (!m) return invalid("measure_gammas: null handle");
  if (gamma1) *gamma1 = m->value.gamma1();
  if (gamma2) *gamma2 = m->value.gamma2();
  return JACSCAT_OK;
}

jacscat_status jacscat_measure_total_mass(const jacscat_measure* m,
                                          double* out) {
  if (!m || !out) return invalid("measure_total_mass: null argument");
  return guard([&] { *out = jacscat::total_mass(m->value); });
}

jacscat_status jacscat_measure_density(const jacscat_measure* m, double x,
                                       double* out) {
  if (!m || !out) return invalid("measure_density: null argument");
  return guard([&] { *out = jacscat::density_f(m->value, x); });
}

jacscat_status jacscat_jacobi_to_json(const jacscat_jacobi* p, int n_rows,
                                      char** out) {
  if (!p || !out) return invalid("jacobi_to_json: null argument");
  return guard([&] { *out = copy_string(jacscat::to_json(p->value, n_rows)); });
}

jacscat_status jacscat_jacobi_to_csv(const jacscat_jacobi* p, int n_rows,
                                     char** out) {
  if (!p || !out) return invalid("jacobi_to_csv: null argument");
  return guard(
      [&] { *out = copy_string(jacscat::jacobi_to_csv(p->value, n_rows)); });
}

void jacscat_jacobi_free(jacscat_jacobi* p) { delete p; }

jacscat_status jacscat_jacobi_get(const jacscat_jacobi* p, int n_rows,
                                  double* a, double* b) {
  if (!p || !a || !b) return invalid("jacobi_get: null argument");
  return guard([&] {
    for (int n = 1; n <= n_rows; ++n) {
      a[n - 1] = p->value.a(n);
      b[n - 1] = p->value.b(n);
    }
  });
}

jacscat_status jacscat_forward(const jacscat_measure* m,
                               const jacscat_options* opts,
                               jacscat_scattering** out) {
  if (!m || !out) return invalid("forward: null argument");
  (void)resolve(opts);  // the measure carries its own grid
  return guard([&] {
    *out = new jacscat_scattering{jacscat::forward(m->value)};
  });
}

jacscat_status jacscat_inverse(const jacscat_scattering* data,
                               const jacscat_options* opts,
                               jacscat_measure** out) {
  if (!data || !out) return invalid("inverse: null argument");
  (void)resolve(opts);  // the data carries its own grid
  return guard([&] {
    *out = new jacscat_measure{jacscat::inverse(data->value)};
  });
}

jacscat_status jacscat_reconstruct(const jacscat_measure* m,
                                   const jacscat_options* opts, int n_rows,
                                   jacscat_jacobi** out) {
  if (!m || !out) return invalid("reconstruct: null argument");
  if (n_rows < 1) return invalid("reconstruct: n_rows must be >= 1");
  const auto o = resolve(opts);
  return guard([&] {
    *out = new jacscat_jacobi{
        jacscat::jacobi_from_spectral(m->value, n_rows, o.n_max)};
  });
}

jacscat_status jacscat_verblunsky(const jacscat_measure* m,
                                  const jacscat_options* opts, int n_alphas,
                                  double* alphas) {
  if (!m || !alphas) return invalid("verblunsky: null argument");
  if (n_alphas < 1) return invalid("verblunsky: n_alphas must be >= 1");
  (void)resolve(opts);
  return guard([&] {
    const auto base = jacscat::normalize(m->value);
    const auto mu = jacscat::szego_transform_o(base);
    const auto seq = jacscat::verblunsky(mu, n_alphas);
    for (int j = 0; j < n_alphas; ++j)
      alphas[j] = seq.alphas[static_cast<std::size_t>(j)];
  });
}

jacscat_status jacscat_validate(const jacscat_scattering* data,
                                char** report_json) {
  if (!data || !report_json) return invalid("validate: null argument");
  return guard([&] {
    *report_json =
        copy_string(jacscat::to_json(jacscat::validate_data(data->value)));
  });
}

jacscat_status jacscat_roundtrip_report(const jacscat_scattering* data,
                                        const jacscat_options* opts,
                                        char** report_json) {
  if (!data || !report_json)
    return invalid("roundtrip_report: null argument");
  const auto o = resolve(opts);
  return guard([&] {
    nlohmann::json rep;
    rep["schema_version"] = 1;
    rep["grid_log2"] = data->value.s.grid_log2();
    rep["n_max"] = o.n_max;
    rep["tolerance"] = o.tol;

    const auto adm = jacscat::validate_data(data->value);
    rep["admissible"] = adm.admissible;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : adm.items)
      items.push_back(
          {{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
    rep["admissibility_items"] = std::move(items);
    if (!adm.admissible) {
      rep["pass"] = false;
      *report_json = copy_string(rep.dump(2));
      throw jacscat::error(jacscat::errc::inadmissible,
                           "roundtrip: " + adm.first_failure());
    }

    const auto measure = jacscat::inverse(data->value);
    const auto back = jacscat::forward(measure);

    double s_dev = 0.0;
    for (int j = 0; j < data->value.s.size(); ++j)
      s_dev = std::max(
          s_dev, std::abs(back.s.sample(j) - data->value.s.sample(j)));
    rep["max_s_deviation"] = s_dev;

    nlohmann::json mu_devs = nlohmann::json::array();
    double mu_dev = 0.0;
    for (std::size_t k = 0; k < data->value.mus.size(); ++k) {
      const double d = std::abs(back.mus[k] - data->value.mus[k]) /
                       std::abs(data->value.mus[k]);
      mu_devs.push_back(d);
      mu_dev = std::max(mu_dev, d);
    }
    rep["mu_relative_deviations"] = std::move(mu_devs);

    const double mass_dev = std::abs(jacscat::total_mass(measure) - 1.0);
    rep["mass_deviation"] = mass_dev;

    rep["pass"] = s_dev <= o.tol && mu_dev <= o.tol && mass_dev <= 1e-10;
    *report_json = copy_string(rep.dump(2));
  });
}

}  // extern "C"
