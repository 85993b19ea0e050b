// Copyright 2026 The pcsft authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsft/numeric.hpp"

#include <stdexcept>
#include <string>

namespace pcsft {

double real_part_checked(std::complex<double> z, const char* context,
                         double tol) {
  if (std::abs(z.imag()) > tol * (1.0 + std::abs(z.real()))) {
    throw std::logic_error(std::string(context) +
                           ": imaginary residue " + std::to_string(z.imag()) +
                           " exceeds tolerance");
  }
  return z.real();
}

}  // namespace pcsft
