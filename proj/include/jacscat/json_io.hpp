// include/jacscat/json_io.hpp

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

#ifndef JACSCAT_JSON_IO_HPP
#define JACSCAT_JSON_IO_HPP

#include <string>

#include "jacscat/inverse.hpp"
#include "jacscat/measure.hpp"
#include "jacscat/reconstruct.hpp"
#include "jacscat/scattering.hpp"

// Serialization formats:
//   circle function   {"grid_log2": m, "samples": [[re, im], ...]}
//   spectral measure  {"gamma1", "gamma2", "log_rho0": <circle function>,
//                      "masses": [{"z", "sigma"}, ...], "normalized"}
//   scattering data   {"gamma1", "gamma2", "zeros", "mus",
//                      "s": <circle function>}
//   jacobi params     {"a": [...], "b": [...], "tail": "free"}
//   verblunsky        {"alphas": [...]}
// Coefficients and symmetry flags are recomputed on load.  Parse failures
// throw errc::parse with a position diagnostic.

namespace jacscat {

std::string to_json(const circle_function& f);
std::string to_json(const spectral_measure& m);
std::string to_json(const scattering_data& d);
std::string to_json(const jacobi_params& p, int n_rows = -1);
std::string to_json(const verblunsky_seq& v);
std::string to_json(const admissibility_report& r);

circle_function circle_function_from_json(const std::string& text);
spectral_measure spectral_measure_from_json(const std::string& text);
scattering_data scattering_data_from_json(const std::string& text);
jacobi_params jacobi_params_from_json(const std::string& text);
verblunsky_seq verblunsky_from_json(const std::string& text);

std::string jacobi_to_csv(const jacobi_params& p, int n_rows);
std::string verblunsky_to_csv(const verblunsky_seq& v);

}  // namespace jacscat

#endif  // JACSCAT_JSON_IO_HPP
