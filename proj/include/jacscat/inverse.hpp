// include/jacscat/inverse.hpp

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

#ifndef JACSCAT_INVERSE_HPP
#define JACSCAT_INVERSE_HPP

#include <string>
#include <vector>

#include "jacscat/scattering.hpp"

namespace jacscat {

/// One admissibility item: which input requirement was checked and how it
/// went.  Items mirror the four defining conditions of the data class plus
/// the derived checks on the phase function.
struct admissibility_item {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct admissibility_report {
  bool admissible = false;
  std::vector<admissibility_item> items;
  std::string first_failure() const;
};

/// Checks, without throwing: gamma flags in {0,1}; zeros distinct in
/// (-1,1)\{0}; weights positive; s unimodular with s(conj t) = conj(s(t)) =
/// 1/s(t); index equal to (gamma1, 2N + gamma1 + gamma2); phase function
/// real, antisymmetric, mean-free and Besov-admissible.
admissibility_report validate_data(const scattering_data& data);

/// Strips the sign/monomial prefactor and the squared Blaschke product from
/// s and unwraps what remains:  s * (-1)^{gamma1} t^{-(gamma1+gamma2)}
/// B^{-2} = e^{-i v0}.  The remainder must have winding zero.
circle_function extract_v0(const scattering_data& data);

/// Constructive inverse map: v0 -> u0 (conjugation inverted, free constant
/// zero) -> rho0 = e^{u0} -> sigma_k from mu_k -> global rescaling to unit
/// total mass.  Output is always normalized; forward() of the result
/// reproduces the input data at grid level.
spectral_measure inverse(const scattering_data& data);

}  // namespace jacscat

#endif  // JACSCAT_INVERSE_HPP
