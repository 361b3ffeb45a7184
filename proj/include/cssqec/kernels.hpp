// Copyright 2026 The cssqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cssqec::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// |z|^2. libstdc++ computes std::norm through std::abs unless fast math is
/// enabled, which is several times slower in the inner loops.
inline double abs2(const Complex& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

/// Arrays below this size are processed by the calling thread only, which
/// keeps nested use inside parallel trial loops serial.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Insert a zero bit at each of the (ascending) positions in `sorted_bits`.
inline std::uint64_t spread_bits(std::uint64_t compact, std::span<const unsigned> sorted_bits) {
    for (unsigned b : sorted_bits) {
        const std::uint64_t low = compact & ((std::uint64_t{1} << b) - 1);
        compact = ((compact >> b) << (b + 1)) | low;
    }
    return compact;
}

// OpenMP kernels. Each call is one parallel region with an implicit barrier.

void apply_1q(std::span<Complex> amps, unsigned target, const Mat2& m);

/// Joint unitary on `qubits`; qubits[j] is bit j of the matrix index.
/// `u` is row-major with side 2^qubits.size().
void apply_multi(std::span<Complex> amps, std::span<const unsigned> qubits, std::span<const Complex> u);

/// out[f(i)] = in[i]. `f` must be a bijection on [0, in.size()).
template <class F>
void permute(std::span<const Complex> in, std::span<Complex> out, F&& f) {
    const std::int64_t size = static_cast<std::int64_t>(in.size());
#pragma omp parallel for if (in.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        out[f(static_cast<std::uint64_t>(i))] = in[i];
    }
}

double norm_squared(std::span<const Complex> amps);

namespace serial {

// Straight-line reference versions kept for testing and benchmarking.

void apply_1q(std::span<Complex> amps, unsigned target, const Mat2& m);
void apply_multi(std::span<Complex> amps, std::span<const unsigned> qubits, std::span<const Complex> u);

template <class F>
void permute(std::span<const Complex> in, std::span<Complex> out, F&& f) {
    for (std::uint64_t i = 0; i < in.size(); ++i) {
        out[f(i)] = in[i];
    }
}

double norm_squared(std::span<const Complex> amps);

}  // namespace serial

}  // namespace cssqec::kernels
