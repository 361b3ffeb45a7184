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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cssqec/css_code.hpp"
#include "cssqec/qsim.hpp"
#include "cssqec/rng.hpp"

namespace cssqec::channels {

enum class Pauli : std::uint8_t { I, X, Z, XZ };

/// 'I', 'X', 'Z', and 'Y' for XZ.
char pauli_label(Pauli p);
const qsim::Mat2& pauli_matrix(Pauli p);

using PauliPattern = std::vector<Pauli>;

std::string pattern_string(const PauliPattern& pattern);
PauliPattern parse_pattern(const std::string& text);
/// Number of non-identity entries.
unsigned pattern_weight(const PauliPattern& pattern);

/// Per-qubit depolarizing channel: I with probability 1 - p, X, Z and XZ
/// each with p/3.
struct PauliChannelSpec {
    double p;

    explicit PauliChannelSpec(double p);
    double probability(Pauli pauli) const { return pauli == Pauli::I ? 1.0 - p : p / 3.0; }
    double probability(const PauliPattern& pattern) const;
};

Pauli sample_pauli(const PauliChannelSpec& spec, Rng& rng);

/// Applies pattern[j] to qubits[j].
void apply_pattern(qsim::StateVector& state, std::span<const unsigned> qubits, const PauliPattern& pattern);

/// Draws an independent Pauli for each listed qubit, applies it, and returns
/// the realized labels.
PauliPattern sample_depolarize(qsim::StateVector& state, const PauliChannelSpec& spec,
                               std::span<const unsigned> qubits, Rng& rng);

/// (1 - p) rho + (p/3)(X rho X + Z rho Z + XZ rho XZ^dagger) on one qubit.
qsim::DensityMatrix depolarize_density(const qsim::DensityMatrix& rho, double p);

/// The same map written as (1 - 4p/3) rho + (4p/3) I/2.
qsim::DensityMatrix depolarize_density_mixture(const qsim::DensityMatrix& rho, double p);

/// Joint unitary on the data qubits of supp(E) followed by the first
/// environment qubits. Matrix index bit order: support qubits ascending,
/// then environment qubits ascending.
struct GeneralDecoherence {
    BitWord support;
    Eigen::MatrixXcd unitary;
    /// Environment basis state prepared (from |0...0>) before the unitary.
    BitWord env_init;
};

void apply_general(qsim::StateVector& state, const GeneralDecoherence& dec);

/// Haar-random interaction of the qubits in `support` with `env_qubits`
/// environment qubits.
GeneralDecoherence random_decoherence(const BitWord& support, unsigned env_qubits, Rng& rng);

/// sum_{j=0}^{t} C(n, j) F^(n-j) (1-F)^j.
double binomial_fidelity_bound(unsigned n, unsigned t, double fidelity);

/// Logical axis states |0>, |1>, |+>, |->, |+i>, |-i> on each logical qubit
/// (others |0>), then `random_count` Haar-random states from `seed`.
std::vector<qsim::StateVector> default_inputs(unsigned k_logical, unsigned random_count, std::uint64_t seed);

struct InputFidelity {
    double mean;
    double std_error;
};

struct FidelityReport {
    std::vector<InputFidelity> per_input;
    /// Smallest per-input mean: a surrogate for the minimum over all inputs.
    double min_fidelity;
    std::size_t argmin;
    /// Mean over inputs, with its standard error across trials.
    double average_fidelity;
    double average_std_error;
    /// Probability mass of patterns with weight <= t (exhaustive mode), or
    /// the observed fraction of such trials (Monte Carlo).
    double correctable_probability;
    std::uint64_t trials;
};

struct TrialLogRow {
    std::uint64_t trial;
    std::string pattern;
    bool corrected;
    /// Input-averaged fidelity of this trial.
    double fidelity;
};

using TrialLogger = std::function<void(const TrialLogRow&)>;

/// Pipeline encode -> depolarize all n qubits -> recover -> decode per trial.
/// Trial i draws its pattern from substream(seed, i); every input sees the
/// same pattern within a trial.
FidelityReport logical_fidelity_mc(const CssCode& code, const PauliChannelSpec& spec,
                                   const std::vector<qsim::StateVector>& inputs, std::uint64_t trials,
                                   std::uint64_t seed, const TrialLogger& log = {});

/// Exact average over all 4^n Pauli patterns weighted by their probability.
/// Requires 4^n <= 2^20.
FidelityReport logical_fidelity_exhaustive(const CssCode& code, const PauliChannelSpec& spec,
                                           const std::vector<qsim::StateVector>& inputs);

/// Per-pattern fidelities this close to 1 are reported as exactly 1, so a
/// noiseless run does not print rounding residue from the Haar inputs.
inline constexpr double kFidelitySnap = 1e-12;

/// Output fidelity <psi| rho_out |psi> for each input after one fixed Pauli
/// pattern, computed by pushing the logical basis states through the full
/// pipeline and combining the results linearly.
std::vector<double> pattern_fidelities(const CssCode& code, const PauliPattern& pattern,
                                       const std::vector<qsim::StateVector>& inputs, bool* corrected = nullptr);

/// Sum of values by recursive halving.
double pairwise_sum(std::span<const double> values);

}  // namespace cssqec::channels
