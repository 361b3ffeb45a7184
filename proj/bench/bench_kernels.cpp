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

// OpenMP kernels against their serial references on random states.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cssqec/kernels.hpp"

namespace {

using cssqec::kernels::Complex;

std::vector<Complex> random_amps(unsigned qubits) {
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    for (auto& a : amps) {
        a = Complex(g(rng), g(rng));
    }
    return amps;
}

const cssqec::kernels::Mat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};

template <bool Parallel>
void BM_apply_1q(benchmark::State& state) {
    auto amps = random_amps(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel) {
            cssqec::kernels::apply_1q(amps, 3, kHadamard);
        } else {
            cssqec::kernels::serial::apply_1q(amps, 3, kHadamard);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_apply_multi(benchmark::State& state) {
    auto amps = random_amps(static_cast<unsigned>(state.range(0)));
    const std::vector<unsigned> qubits{1, 4, 7};
    std::vector<Complex> u(64);
    for (std::size_t r = 0; r < 8; ++r) {
        u[r * 8 + (r + 1) % 8] = 1.0;
    }
    for (auto _ : state) {
        if constexpr (Parallel) {
            cssqec::kernels::apply_multi(amps, qubits, u);
        } else {
            cssqec::kernels::serial::apply_multi(amps, qubits, u);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_permute(benchmark::State& state) {
    const auto in = random_amps(static_cast<unsigned>(state.range(0)));
    std::vector<Complex> out(in.size());
    const std::uint64_t flip = 0b1011001;
    for (auto _ : state) {
        if constexpr (Parallel) {
            cssqec::kernels::permute(in, out, [flip](std::uint64_t i) { return i ^ flip; });
        } else {
            cssqec::kernels::serial::permute(in, out, [flip](std::uint64_t i) { return i ^ flip; });
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.size()));
}

}  // namespace

BENCHMARK(BM_apply_1q<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_apply_1q<true>)->DenseRange(12, 22, 5);
BENCHMARK(BM_apply_multi<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_apply_multi<true>)->DenseRange(12, 22, 5);
BENCHMARK(BM_permute<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_permute<true>)->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
