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

#include <array>
#include <complex>
#include <cstdint>

namespace pcsft {

// Counter-based random generation (Philox 4x32-10, Salmon et al. SC'11).
// Every draw is a pure function of (key, substream, draw-counter), so any
// subset of a stream can be produced on any thread in any order and the
// resulting values are bit-identical to a sequential pass.

/// One Philox 4x32 block with the standard 10 rounds.
std::array<std::uint32_t, 4> philox4x32(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key);

/// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Deterministically derives an independent seed from (base, salt).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

// Domain-separation salts: generator families never share a Philox key even
// when the caller reuses one user-facing seed.
inline constexpr std::uint64_t kSaltFieldSample = 0x7063736674666c64ULL;
inline constexpr std::uint64_t kSaltHermitianDraw = 0x706373667468726dULL;
inline constexpr std::uint64_t kSaltPureStateDraw = 0x7063736674707374ULL;

/// Uniform double in (0, 1], from the high 53 bits of a 64-bit word.
double uniform_unit_open(std::uint64_t bits);

/// Uniform double in [0, 1).
double uniform_unit_halfopen(std::uint64_t bits);

/// One circularly-symmetric standard complex normal: E z = 0, E|z|^2 = 1,
/// E z^2 = 0. Consumes exactly one Philox block at (key, substream, draw).
std::complex<double> standard_complex_normal(std::uint64_t key,
                                             std::uint64_t substream,
                                             std::uint64_t draw);

}  // namespace pcsft
