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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>

#include "pcsft/rng.hpp"

using namespace pcsft;

TEST_CASE("philox known-answer vectors") {
  // Frozen block outputs; any change to constants, rounds, or word order
  // breaks every seeded artifact downstream.
  const std::array<std::uint32_t, 4> zero_ctr{0, 0, 0, 0};
  const std::array<std::uint32_t, 2> zero_key{0, 0};
  CHECK(philox4x32(zero_ctr, zero_key) ==
        std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                     0x9b00dbd8u});

  const std::array<std::uint32_t, 4> ones_ctr{0xffffffffu, 0xffffffffu,
                                              0xffffffffu, 0xffffffffu};
  const std::array<std::uint32_t, 2> ones_key{0xffffffffu, 0xffffffffu};
  CHECK(philox4x32(ones_ctr, ones_key) ==
        std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u,
                                     0x6d5451fdu});

  const std::array<std::uint32_t, 4> pi_ctr{0x243f6a88u, 0x85a308d3u,
                                            0x13198a2eu, 0x03707344u};
  const std::array<std::uint32_t, 2> pi_key{0xa4093822u, 0x299f31d0u};
  CHECK(philox4x32(pi_ctr, pi_key) ==
        std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u,
                                     0x24126ea1u});
}

TEST_CASE("philox counters decorrelate single-bit changes") {
  const std::array<std::uint32_t, 2> key{12345u, 67890u};
  const auto a = philox4x32({0, 0, 0, 0}, key);
  const auto b = philox4x32({1, 0, 0, 0}, key);
  int differing_bits = 0;
  for (int w = 0; w < 4; ++w) {
    differing_bits += std::popcount(a[w] ^ b[w]);
  }
  // 128 output bits; a healthy block cipher flips about half.
  CHECK(differing_bits > 32);
  CHECK(differing_bits < 96);
}

TEST_CASE("mix64 is deterministic and derive_seed separates domains") {
  CHECK(mix64(0x123456789abcdefULL) == mix64(0x123456789abcdefULL));
  CHECK(mix64(1) != mix64(2));

  std::set<std::uint64_t> seeds;
  for (std::uint64_t base : {0ULL, 1ULL, 42ULL, 0xffffffffffffffffULL}) {
    for (std::uint64_t salt :
         {kSaltFieldSample, kSaltHermitianDraw, kSaltPureStateDraw}) {
      seeds.insert(derive_seed(base, salt));
    }
  }
  CHECK(seeds.size() == 12);
  CHECK(derive_seed(7, kSaltFieldSample) == derive_seed(7, kSaltFieldSample));
}

TEST_CASE("uniform converters hit their ranges") {
  CHECK(uniform_unit_open(0) > 0.0);
  CHECK(uniform_unit_open(0xffffffffffffffffULL) == 1.0);
  CHECK(uniform_unit_halfopen(0) == 0.0);
  CHECK(uniform_unit_halfopen(0xffffffffffffffffULL) < 1.0);
  for (std::uint64_t bits = 1; bits != 0; bits <<= 7) {
    const double open = uniform_unit_open(bits);
    CHECK(open > 0.0);
    CHECK(open <= 1.0);
    const double halfopen = uniform_unit_halfopen(bits);
    CHECK(halfopen >= 0.0);
    CHECK(halfopen < 1.0);
  }
}

TEST_CASE("standard complex normal is a pure function of its indices") {
  const std::complex<double> z = standard_complex_normal(42, 3, 17);
  CHECK(standard_complex_normal(42, 3, 17) == z);
  CHECK(standard_complex_normal(42, 3, 18) != z);
  CHECK(standard_complex_normal(42, 4, 17) != z);
  CHECK(standard_complex_normal(43, 3, 17) != z);
  CHECK(std::isfinite(z.real()));
  CHECK(std::isfinite(z.imag()));
}

TEST_CASE("standard complex normal moments") {
  // E z = 0, E z^2 = 0 (circular symmetry), E |z|^2 = 1. With n = 200000 the
  // standard errors are ~1/sqrt(n) ~ 0.0022; bounds sit at 5 sigma.
  const int n = 200000;
  std::complex<double> sum = 0.0;
  std::complex<double> sum_sq = 0.0;
  double sum_abs2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = standard_complex_normal(2026, 0, i);
    sum += z;
    sum_sq += z * z;
    sum_abs2 += std::norm(z);
  }
  const double inv_n = 1.0 / n;
  CHECK(std::abs(sum * inv_n) < 0.012);
  CHECK(std::abs(sum_sq * inv_n) < 0.012);
  CHECK(sum_abs2 * inv_n == doctest::Approx(1.0).epsilon(0.012));
}
