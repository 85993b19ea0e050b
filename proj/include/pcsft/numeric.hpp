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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace pcsft {

// Library-wide comparison rule: relative tolerance with an absolute floor.
// Operands are O(1)-scaled by the random generators, so these defaults hold
// across the test corpus; callers with other scales pass their own.
inline constexpr double kDefaultRtol = 1e-10;
inline constexpr double kDefaultAtol = 1e-12;

inline bool approx_equal(double x, double y, double rtol = kDefaultRtol,
                         double atol = kDefaultAtol) {
  return std::abs(x - y) <= std::max(rtol * std::max(std::abs(x), std::abs(y)), atol);
}

/// Discards an imaginary residue that must vanish analytically; the residue
/// bound is a sanity guard, violations indicate a bug upstream of the call.
double real_part_checked(std::complex<double> z, const char* context,
                         double tol = 1e-10);

}  // namespace pcsft
