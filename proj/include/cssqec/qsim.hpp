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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cssqec/bitword.hpp"
#include "cssqec/kernels.hpp"
#include "cssqec/rng.hpp"

namespace cssqec::qsim {

using Complex = std::complex<double>;
using Mat2 = kernels::Mat2;

inline constexpr unsigned kMaxQubits = 26;
inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;

enum class Register { Data, AncillaA, AncillaA2, Env };

/// Qubits are numbered data, ancilla A, ancilla A', environment, in that
/// order; data occupies the least significant bits of a basis index.
struct RegisterLayout {
    unsigned data = 0;
    unsigned ancilla_a = 0;
    unsigned ancilla_a2 = 0;
    unsigned env = 0;

    unsigned total() const noexcept { return data + ancilla_a + ancilla_a2 + env; }
    unsigned offset(Register r) const noexcept;
    unsigned size(Register r) const noexcept;
    std::vector<unsigned> qubits(Register r) const;
    std::uint64_t mask(Register r) const noexcept;
    void validate() const;

    bool operator==(const RegisterLayout&) const = default;
};

inline RegisterLayout data_only(unsigned n) {
    return RegisterLayout{n, 0, 0, 0};
}

namespace gates {
inline const Mat2 I{1.0, 0.0, 0.0, 1.0};
inline const Mat2 X{0.0, 1.0, 1.0, 0.0};
inline const Mat2 Z{1.0, 0.0, 0.0, -1.0};
/// "Negated and phase changed", as the matrix [[0, 1], [-1, 0]].
inline const Mat2 XZ{0.0, 1.0, -1.0, 0.0};
inline const Mat2 H{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
}  // namespace gates

class StateVector {
  public:
    /// Amplitude 1 at index `bits` (bit i = qubit i).
    static StateVector basis_state(const RegisterLayout& layout, const BitWord& bits);
    static StateVector basis_state(const RegisterLayout& layout, std::uint64_t index);
    /// Takes ownership; rejects wrong sizes and norms off by more than 1e-10.
    static StateVector from_amplitudes(const RegisterLayout& layout, std::vector<Complex> amps);

    const RegisterLayout& layout() const noexcept { return layout_; }
    unsigned num_qubits() const noexcept { return layout_.total(); }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

    double norm_squared() const { return kernels::norm_squared(amps_); }

    void apply_1q(unsigned qubit, const Mat2& u);
    void apply_multi(std::span<const unsigned> qubits, const Eigen::MatrixXcd& u);
    void transversal_hadamard(std::span<const unsigned> qubits);

    /// Relabel basis states by the bijection `f` on indices.
    template <class F>
    void permute_basis(F&& f) {
        std::vector<Complex> out(amps_.size());
        kernels::permute(std::span<const Complex>(amps_), std::span<Complex>(out), std::forward<F>(f));
        amps_.swap(out);
    }

    /// |this> (x) |0...0> on the remaining registers of `target`. This state
    /// must be data-only with the same data size.
    StateVector embed(const RegisterLayout& target) const;

    /// Drop every register except data; only allowed when all amplitude
    /// sits on index bits of the data register.
    StateVector data_component() const;

  private:
    StateVector(const RegisterLayout& layout, std::vector<Complex> amps) : layout_(layout), amps_(std::move(amps)) {}
    void check_qubit(unsigned q) const;

    RegisterLayout layout_;
    std::vector<Complex> amps_;
};

Complex inner(const StateVector& a, const StateVector& b);

/// Hermitian, unit-trace, positive semidefinite matrix over 2^m levels.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd m);
    static DensityMatrix projector(const StateVector& psi);
    static DensityMatrix maximally_mixed(unsigned qubits);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    double purity() const;
    Eigen::VectorXd eigenvalues() const;

  private:
    Eigen::MatrixXcd m_;
};

bool is_unitary(const Eigen::MatrixXcd& u, double tol = kUnitarityTolerance);
bool is_unitary(const Mat2& u, double tol = kUnitarityTolerance);

struct Measurement {
    BitWord outcome;
    StateVector collapsed;
};

/// Born-rule sample of a whole register, with the post-measurement state.
Measurement measure_register(const StateVector& state, Register reg, Rng& rng);

/// Probability of each value of a register's bits.
std::vector<double> register_distribution(const StateVector& state, Register reg);

/// Reduced state on `keep` (bit j of the result's index = keep[j]).
DensityMatrix partial_trace(const StateVector& state, std::span<const unsigned> keep_qubits);
DensityMatrix partial_trace(const StateVector& state, std::initializer_list<Register> keep);

/// <x| rho |x>.
double fidelity(const DensityMatrix& rho, const StateVector& x);

/// -sum lambda log2 lambda with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Half the trace norm of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Haar-random pure state on a data-only layout of `qubits` qubits.
StateVector random_state(unsigned qubits, Rng& rng);

/// Haar-random unitary of side `dim`.
Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng);

/// Nonzero amplitudes (|a| > 1e-12) as `index,re,im` with 17 significant digits.
std::string dump_csv(const StateVector& state);

}  // namespace cssqec::qsim
