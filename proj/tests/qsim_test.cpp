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

#include "cssqec/qsim.hpp"

#include <cmath>
#include <map>

#include "gtest/gtest.h"

#include "cssqec/classical_codes.hpp"

using namespace cssqec;
using namespace cssqec::qsim;

namespace {

double max_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a.amplitude(i) - b.amplitude(i)));
    }
    return m;
}

StateVector random_layout_state(const RegisterLayout& layout, std::uint64_t seed) {
    Rng rng(seed);
    const StateVector s = random_state(layout.total(), rng);
    return StateVector::from_amplitudes(layout, std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()));
}

// Reduced state by explicit sums over the traced-out index bits.
Eigen::MatrixXcd brute_partial_trace(const StateVector& s, const std::vector<unsigned>& keep) {
    const std::size_t kd = std::size_t{1} << keep.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
    std::uint64_t keep_mask = 0;
    for (unsigned q : keep) {
        keep_mask |= std::uint64_t{1} << q;
    }
    auto compress = [&](std::uint64_t i) {
        std::uint64_t out = 0;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            out |= ((i >> keep[j]) & 1) << j;
        }
        return out;
    };
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        for (std::uint64_t j = 0; j < s.dim(); ++j) {
            if ((i & ~keep_mask) == (j & ~keep_mask)) {
                rho(compress(i), compress(j)) += s.amplitude(i) * std::conj(s.amplitude(j));
            }
        }
    }
    return rho;
}

Eigen::MatrixXcd cnot_matrix() {
    // Qubit 0 of the matrix index is the control, qubit 1 the target.
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
    u(0, 0) = 1;
    u(3, 1) = 1;
    u(2, 2) = 1;
    u(1, 3) = 1;
    return u;
}

}  // namespace

TEST(layout, validate_and_offsets) {
    const RegisterLayout l{7, 3, 3, 2};
    ASSERT_EQ(l.total(), 15u);
    ASSERT_EQ(l.offset(Register::AncillaA), 7u);
    ASSERT_EQ(l.offset(Register::AncillaA2), 10u);
    ASSERT_EQ(l.offset(Register::Env), 13u);
    ASSERT_EQ(l.qubits(Register::Env), (std::vector<unsigned>{13, 14}));
    ASSERT_EQ(l.mask(Register::AncillaA), 0b1110000000u);
    ASSERT_THROW((RegisterLayout{20, 7, 0, 0}).validate(), std::length_error);
}

TEST(state_vector, basis_state) {
    const auto zero = StateVector::basis_state(data_only(3), BitWord::zeros(3));
    ASSERT_EQ(zero.amplitude(0), Complex(1.0));
    const auto w = StateVector::basis_state(data_only(7), BitWord::from_string("0001011"));
    ASSERT_EQ(w.amplitude(0b1101000), Complex(1.0));
    ASSERT_NEAR(w.norm_squared(), 1.0, 0.0);
    ASSERT_EQ(max_diff(w, StateVector::basis_state(data_only(7), BitWord::from_string("0001011"))), 0.0);
    ASSERT_THROW(StateVector::basis_state(data_only(3), BitWord::zeros(4)), std::invalid_argument);
}

TEST(state_vector, from_amplitudes_validates) {
    ASSERT_THROW(StateVector::from_amplitudes(data_only(1), {1.0, 1.0}), std::invalid_argument);
    ASSERT_THROW(StateVector::from_amplitudes(data_only(1), {1.0}), std::invalid_argument);
}

TEST(state_vector, apply_1q_examples) {
    auto s = StateVector::basis_state(data_only(1), 0);
    s.apply_1q(0, gates::I);
    ASSERT_EQ(s.amplitude(0), Complex(1.0));
    s.apply_1q(0, gates::X);
    ASSERT_EQ(s.amplitude(1), Complex(1.0));

    auto plus = StateVector::from_amplitudes(data_only(1), {M_SQRT1_2, M_SQRT1_2});
    plus.apply_1q(0, gates::Z);
    ASSERT_NEAR(std::abs(plus.amplitude(1) + M_SQRT1_2), 0.0, 1e-15);

    ASSERT_THROW(s.apply_1q(0, kernels::Mat2{1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
    ASSERT_THROW(s.apply_1q(1, gates::X), std::out_of_range);
}

TEST(state_vector, transversal_hadamard) {
    auto s = StateVector::basis_state(data_only(7), 0);
    const std::vector<unsigned> all{0, 1, 2, 3, 4, 5, 6};
    s.transversal_hadamard(all);
    for (std::size_t i = 0; i < 128; ++i) {
        ASSERT_NEAR(std::abs(s.amplitude(i) - std::pow(2.0, -3.5)), 0.0, 1e-15);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_layout_state(RegisterLayout{5, 2, 0, 1}, seed);
        auto t = r;
        const std::vector<unsigned> some{0, 2, 3, 6};
        t.transversal_hadamard(some);
        t.transversal_hadamard(some);
        ASSERT_LT(max_diff(r, t), 1e-12);
    }
}

TEST(state_vector, unitaries_preserve_norm) {
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_layout_state(RegisterLayout{4, 2, 1, 2}, trial);
        const auto u = random_unitary(8, rng);
        const std::vector<unsigned> q{1, 6, 8};
        s.apply_multi(q, u);
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
        const auto v = random_unitary(2, rng);
        s.apply_1q(3, kernels::Mat2{v(0, 0), v(0, 1), v(1, 0), v(1, 1)});
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
}

TEST(state_vector, disjoint_gates_commute) {
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_unitary(2, rng);
        const auto v = random_unitary(2, rng);
        const kernels::Mat2 a{u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
        const kernels::Mat2 b{v(0, 0), v(0, 1), v(1, 0), v(1, 1)};
        auto s = random_layout_state(data_only(6), trial);
        auto t = s;
        s.apply_1q(1, a);
        s.apply_1q(4, b);
        t.apply_1q(4, b);
        t.apply_1q(1, a);
        ASSERT_LT(max_diff(s, t), 1e-12);
    }
}

TEST(state_vector, apply_multi_examples) {
    auto s = random_layout_state(data_only(4), 3);
    const auto before = s;
    const std::vector<unsigned> q{0, 2};
    s.apply_multi(q, Eigen::MatrixXcd::Identity(4, 4));
    ASSERT_EQ(max_diff(s, before), 0.0);

    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
    auto b = StateVector::basis_state(data_only(3), BitWord::from_string("010"));
    const std::vector<unsigned> q01{0, 1};
    b.apply_multi(q01, swap);
    ASSERT_EQ(b.amplitude(BitWord::from_string("100").bits()), Complex(1.0));

    const std::vector<unsigned> dup{1, 1};
    ASSERT_THROW(b.apply_multi(dup, swap), std::invalid_argument);
    ASSERT_THROW(b.apply_multi(q01, Eigen::MatrixXcd::Ones(4, 4)), std::invalid_argument);
}

TEST(state_vector, cnot_chain_computes_syndrome) {
    const BinMatrix h = hamming_7_4().parity_check();
    const RegisterLayout layout{7, static_cast<unsigned>(h.rows()), 0, 0};
    const auto cnot = cnot_matrix();
    for (std::uint64_t v = 0; v < 128; ++v) {
        auto s = StateVector::basis_state(layout, v);
        for (std::size_t r = 0; r < h.rows(); ++r) {
            for (unsigned q = 0; q < 7; ++q) {
                if (h.row(r).get(q)) {
                    const std::vector<unsigned> pair{q, static_cast<unsigned>(7 + r)};
                    s.apply_multi(pair, cnot);
                }
            }
        }
        const std::uint64_t expected = v | (syndrome(h, BitWord(7, v)).bits() << 7);
        ASSERT_NEAR(std::abs(s.amplitude(expected)), 1.0, 1e-15);
    }
}

TEST(measurement, examples) {
    Rng rng(4);
    const auto zero = StateVector::basis_state(RegisterLayout{2, 2, 0, 0}, 0);
    const auto m = measure_register(zero, Register::AncillaA, rng);
    ASSERT_TRUE(m.outcome.is_zero());
    ASSERT_THROW(measure_register(zero, Register::Env, rng), std::invalid_argument);

    // |c_0> of the Steane code: uniform over the 16 Hamming codewords.
    const auto words = hamming_7_4().codewords();
    std::vector<Complex> amps(128);
    for (const auto& c : words) {
        amps[c.bits()] = 0.25;
    }
    const auto c0 = StateVector::from_amplitudes(data_only(7), amps);
    const auto dist = register_distribution(c0, Register::Data);
    for (const auto& c : words) {
        ASSERT_NEAR(dist[c.bits()], 1.0 / 16, 1e-15);
    }
    std::map<std::uint64_t, int> counts;
    for (int i = 0; i < 1600; ++i) {
        const auto r = measure_register(c0, Register::Data, rng);
        ASSERT_TRUE(hamming_7_4().contains(r.outcome));
        ASSERT_NEAR(std::abs(r.collapsed.amplitude(r.outcome.bits())), 1.0, 1e-12);
        ++counts[r.outcome.bits()];
    }
    ASSERT_EQ(counts.size(), 16u);
}

TEST(measurement, seeded_sequence_repeats) {
    const auto s = random_layout_state(RegisterLayout{3, 3, 0, 0}, 12);
    std::vector<std::uint64_t> first;
    std::vector<std::uint64_t> second;
    for (auto* out : {&first, &second}) {
        Rng rng(99);
        for (int i = 0; i < 50; ++i) {
            out->push_back(measure_register(s, Register::AncillaA, rng).outcome.bits());
        }
    }
    ASSERT_EQ(first, second);
}

TEST(partial_trace, examples) {
    // Product state |psi> (x) |0>_env keeps a rank-one projector.
    Rng rng(5);
    const auto psi = random_state(3, rng);
    const auto prod = psi.embed(RegisterLayout{3, 0, 0, 2});
    const DensityMatrix rho = partial_trace(prod, {Register::Data});
    ASSERT_NEAR(rho.purity(), 1.0, 1e-9);
    ASSERT_NEAR(fidelity(rho, psi), 1.0, 1e-12);

    const auto bell = StateVector::from_amplitudes(data_only(2), {M_SQRT1_2, 0.0, 0.0, M_SQRT1_2});
    const std::vector<unsigned> keep{0};
    const DensityMatrix half = partial_trace(bell, keep);
    ASSERT_LT((half.matrix() - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-15);

    const std::vector<unsigned> none;
    ASSERT_THROW(partial_trace(bell, none), std::invalid_argument);
}

TEST(partial_trace, matches_explicit_sum) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_layout_state(RegisterLayout{2, 1, 1, 2}, seed);
        for (const std::vector<unsigned>& keep : {std::vector<unsigned>{0}, {3, 1}, {0, 2, 5}, {4, 3, 2, 1}}) {
            const DensityMatrix rho = partial_trace(s, keep);
            ASSERT_LT((rho.matrix() - brute_partial_trace(s, keep)).norm(), 1e-13);
        }
    }
}

TEST(fidelity, examples) {
    Rng rng(6);
    const auto x = random_state(2, rng);
    ASSERT_NEAR(fidelity(DensityMatrix::projector(x), x), 1.0, 1e-14);
    const auto y = random_state(1, rng);
    ASSERT_NEAR(fidelity(DensityMatrix::maximally_mixed(1), y), 0.5, 1e-14);
    const double p = 0.3;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 1.0;
    m = (1 - 4 * p / 3) * m + (4 * p / 3) * 0.5 * Eigen::MatrixXcd::Identity(2, 2);
    ASSERT_NEAR(fidelity(DensityMatrix(m), StateVector::basis_state(data_only(1), 0)), 0.8, 1e-15);
    ASSERT_THROW(fidelity(DensityMatrix::maximally_mixed(2), y), std::invalid_argument);
}

TEST(entropy, examples) {
    Rng rng(7);
    ASSERT_NEAR(von_neumann_entropy(DensityMatrix::projector(random_state(2, rng))), 0.0, 1e-12);
    ASSERT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(1)), 1.0, 1e-15);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 0.9;
    d(1, 1) = 0.1;
    ASSERT_NEAR(von_neumann_entropy(DensityMatrix(d)), 0.468995593589281, 1e-14);
}

TEST(entropy, unitarily_invariant) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_state(4, rng);
        const std::vector<unsigned> keep{0, 1};
        const DensityMatrix rho = partial_trace(s, keep);
        const auto u = random_unitary(4, rng);
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
        ASSERT_NEAR(von_neumann_entropy(rho), von_neumann_entropy(rotated), 1e-8);
    }
}

TEST(density_matrix, validation) {
    ASSERT_THROW(DensityMatrix(Eigen::MatrixXcd::Identity(3, 3) / 3.0), std::invalid_argument);
    ASSERT_THROW(DensityMatrix(Eigen::MatrixXcd::Identity(2, 2)), std::invalid_argument);
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    ASSERT_THROW(DensityMatrix{neg}, std::invalid_argument);
    Eigen::MatrixXcd herm = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
    herm(0, 1) = Complex(0, 0.1);
    ASSERT_THROW(DensityMatrix{herm}, std::invalid_argument);
}

TEST(trace_distance, orthogonal_and_equal) {
    const auto a = DensityMatrix::projector(StateVector::basis_state(data_only(1), 0));
    const auto b = DensityMatrix::projector(StateVector::basis_state(data_only(1), 1));
    ASSERT_NEAR(trace_distance(a, b), 1.0, 1e-14);
    ASSERT_NEAR(trace_distance(a, a), 0.0, 1e-14);
}

TEST(random, unitary_and_state_are_valid) {
    Rng rng(13);
    for (std::size_t dim : {2u, 4u, 8u, 32u}) {
        ASSERT_TRUE(is_unitary(random_unitary(dim, rng)));
    }
    ASSERT_NEAR(random_state(5, rng).norm_squared(), 1.0, 1e-12);
}

TEST(dump, csv_format) {
    const auto s = StateVector::from_amplitudes(data_only(2), {M_SQRT1_2, 0.0, 0.0, -M_SQRT1_2});
    ASSERT_EQ(dump_csv(s), "index,re,im\n0,0.70710678118654757,0\n3,-0.70710678118654757,0\n");
}
