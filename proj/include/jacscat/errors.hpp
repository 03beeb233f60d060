// include/jacscat/errors.hpp

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

#ifndef JACSCAT_ERRORS_HPP
#define JACSCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacscat {

/// Failure categories surfaced by the library.  Every throwing path uses
/// jacscat::error so callers (and the C API) can map failures to codes.
enum class errc {
  size_mismatch,      // container length does not match the declared grid
  domain,             // argument outside the documented domain
  resolution,         // grid too coarse to resolve a phase increment
  truncation,         // no free region reachable within the truncation length
  pole,               // evaluation at (or too near) a pole
  inconsistent_data,  // data items contradict each other (e.g. winding vs N)
  inadmissible,       // scattering data fails an admissibility item
  degenerate,         // numerically degenerate problem (moment problem at boundary)
  unsupported,        // valid input outside the implemented feature set
  parse,              // malformed serialized input
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace jacscat

#endif  // JACSCAT_ERRORS_HPP
