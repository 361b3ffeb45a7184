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

#include "cssqec/kernels.hpp"

#include <algorithm>
#include <bit>

namespace cssqec::kernels {

namespace {

inline void butterfly(Complex& a0, Complex& a1, const Mat2& m) {
    const Complex t0 = a0;
    const Complex t1 = a1;
    a0 = m[0] * t0 + m[1] * t1;
    a1 = m[2] * t0 + m[3] * t1;
}

struct MultiPlan {
    std::vector<unsigned> sorted;
    std::vector<std::uint64_t> offsets;  // offsets[j] = scattered position of matrix index j
    std::size_t dim;
};

MultiPlan plan_multi(std::span<const unsigned> qubits) {
    MultiPlan plan;
    plan.sorted.assign(qubits.begin(), qubits.end());
    std::sort(plan.sorted.begin(), plan.sorted.end());
    plan.dim = std::size_t{1} << qubits.size();
    plan.offsets.resize(plan.dim);
    for (std::size_t j = 0; j < plan.dim; ++j) {
        std::uint64_t off = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b) {
            if ((j >> b) & 1) {
                off |= std::uint64_t{1} << qubits[b];
            }
        }
        plan.offsets[j] = off;
    }
    return plan;
}

inline void apply_group(std::span<Complex> amps, std::uint64_t base, const MultiPlan& plan,
                        std::span<const Complex> u, std::vector<Complex>& scratch) {
    for (std::size_t j = 0; j < plan.dim; ++j) {
        scratch[j] = amps[base | plan.offsets[j]];
    }
    for (std::size_t r = 0; r < plan.dim; ++r) {
        Complex acc = 0.0;
        const Complex* row = u.data() + r * plan.dim;
        for (std::size_t c = 0; c < plan.dim; ++c) {
            acc += row[c] * scratch[c];
        }
        amps[base | plan.offsets[r]] = acc;
    }
}

template <class Coef>
void butterflies(std::span<Complex> amps, std::uint64_t mask, const std::array<Coef, 4>& m) {
    const std::uint64_t low = mask - 1;
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t i = static_cast<std::uint64_t>(k);
        const std::uint64_t i0 = ((i & ~low) << 1) | (i & low);
        const Complex t0 = amps[i0];
        const Complex t1 = amps[i0 | mask];
        amps[i0] = m[0] * t0 + m[1] * t1;
        amps[i0 | mask] = m[2] * t0 + m[3] * t1;
    }
}

}  // namespace

void apply_1q(std::span<Complex> amps, unsigned target, const Mat2& m) {
    const std::uint64_t mask = std::uint64_t{1} << target;
    // Every gate the simulator applies in its hot loops (H and the Paulis) is
    // real, and real-by-complex products cost half as much.
    if (std::all_of(m.begin(), m.end(), [](const Complex& c) { return c.imag() == 0.0; })) {
        butterflies(amps, mask, std::array<double, 4>{m[0].real(), m[1].real(), m[2].real(), m[3].real()});
    } else {
        butterflies(amps, mask, m);
    }
}

void apply_multi(std::span<Complex> amps, std::span<const unsigned> qubits, std::span<const Complex> u) {
    const MultiPlan plan = plan_multi(qubits);
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> qubits.size());
#pragma omp parallel if (amps.size() >= kParallelThreshold)
    {
        std::vector<Complex> scratch(plan.dim);
#pragma omp for
        for (std::int64_t g = 0; g < groups; ++g) {
            apply_group(amps, spread_bits(static_cast<std::uint64_t>(g), plan.sorted), plan, u, scratch);
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    double total = 0.0;
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for reduction(+ : total) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < size; ++i) {
        total += abs2(amps[i]);
    }
    return total;
}

namespace serial {

void apply_1q(std::span<Complex> amps, unsigned target, const Mat2& m) {
    const std::uint64_t mask = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (!(i & mask)) {
            butterfly(amps[i], amps[i | mask], m);
        }
    }
}

void apply_multi(std::span<Complex> amps, std::span<const unsigned> qubits, std::span<const Complex> u) {
    const MultiPlan plan = plan_multi(qubits);
    std::uint64_t target_mask = 0;
    for (unsigned q : qubits) {
        target_mask |= std::uint64_t{1} << q;
    }
    std::vector<Complex> scratch(plan.dim);
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if (!(base & target_mask)) {
            apply_group(amps, base, plan, u, scratch);
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    double total = 0.0;
    for (const auto& a : amps) {
        total += abs2(a);
    }
    return total;
}

}  // namespace serial

}  // namespace cssqec::kernels
