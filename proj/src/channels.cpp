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

#include "cssqec/channels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cssqec::channels {

using qsim::Complex;
using qsim::Register;
using qsim::StateVector;

char pauli_label(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Z:
            return 'Z';
        case Pauli::XZ:
            return 'Y';
    }
    return '?';
}

const qsim::Mat2& pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::X:
            return qsim::gates::X;
        case Pauli::Z:
            return qsim::gates::Z;
        case Pauli::XZ:
            return qsim::gates::XZ;
        case Pauli::I:
            break;
    }
    return qsim::gates::I;
}

std::string pattern_string(const PauliPattern& pattern) {
    std::string s;
    for (auto p : pattern) {
        s += pauli_label(p);
    }
    return s;
}

PauliPattern parse_pattern(const std::string& text) {
    PauliPattern out;
    for (char c : text) {
        switch (c) {
            case 'I':
                out.push_back(Pauli::I);
                break;
            case 'X':
                out.push_back(Pauli::X);
                break;
            case 'Z':
                out.push_back(Pauli::Z);
                break;
            case 'Y':
                out.push_back(Pauli::XZ);
                break;
            default:
                throw std::invalid_argument("Pauli pattern may only contain I, X, Z, Y: " + text);
        }
    }
    return out;
}

unsigned pattern_weight(const PauliPattern& pattern) {
    return static_cast<unsigned>(std::count_if(pattern.begin(), pattern.end(), [](Pauli p) { return p != Pauli::I; }));
}

PauliChannelSpec::PauliChannelSpec(double p_) : p(p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("PauliChannelSpec: p must lie in [0, 1]");
    }
}

double PauliChannelSpec::probability(const PauliPattern& pattern) const {
    double prob = 1.0;
    for (auto q : pattern) {
        prob *= probability(q);
    }
    return prob;
}

Pauli sample_pauli(const PauliChannelSpec& spec, Rng& rng) {
    const double u = uniform01(rng);
    if (u >= spec.p) {
        return Pauli::I;
    }
    const double third = spec.p / 3.0;
    if (u < third) {
        return Pauli::X;
    }
    if (u < 2.0 * third) {
        return Pauli::Z;
    }
    return Pauli::XZ;
}

void apply_pattern(StateVector& state, std::span<const unsigned> qubits, const PauliPattern& pattern) {
    if (qubits.size() != pattern.size()) {
        throw std::invalid_argument("apply_pattern: pattern length does not match qubit count");
    }
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if (pattern[j] != Pauli::I) {
            state.apply_1q(qubits[j], pauli_matrix(pattern[j]));
        }
    }
}

PauliPattern sample_depolarize(StateVector& state, const PauliChannelSpec& spec, std::span<const unsigned> qubits,
                               Rng& rng) {
    PauliPattern pattern;
    pattern.reserve(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        pattern.push_back(sample_pauli(spec, rng));
    }
    apply_pattern(state, qubits, pattern);
    return pattern;
}

namespace {

Eigen::Matrix2cd as_matrix(const qsim::Mat2& m) {
    Eigen::Matrix2cd out;
    out << m[0], m[1], m[2], m[3];
    return out;
}

void check_single_qubit(const qsim::DensityMatrix& rho, double p) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("depolarize_density: expected a single-qubit density matrix");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("depolarize_density: p must lie in [0, 1]");
    }
}

}  // namespace

qsim::DensityMatrix depolarize_density(const qsim::DensityMatrix& rho, double p) {
    check_single_qubit(rho, p);
    const Eigen::MatrixXcd& r = rho.matrix();
    Eigen::MatrixXcd out = (1.0 - p) * r;
    for (Pauli q : {Pauli::X, Pauli::Z, Pauli::XZ}) {
        const Eigen::Matrix2cd u = as_matrix(pauli_matrix(q));
        out += (p / 3.0) * (u * r * u.adjoint());
    }
    // Restore exact Hermiticity lost to rounding.
    return qsim::DensityMatrix(0.5 * (out + out.adjoint()));
}

qsim::DensityMatrix depolarize_density_mixture(const qsim::DensityMatrix& rho, double p) {
    check_single_qubit(rho, p);
    const double keep = 1.0 - 4.0 * p / 3.0;
    return qsim::DensityMatrix(keep * rho.matrix() + (4.0 * p / 3.0) * 0.5 * Eigen::MatrixXcd::Identity(2, 2));
}

void apply_general(StateVector& state, const GeneralDecoherence& dec) {
    const auto& layout = state.layout();
    if (dec.support.length() != layout.data) {
        throw std::invalid_argument("apply_general: support length does not match the data register");
    }
    const auto side = static_cast<std::size_t>(dec.unitary.rows());
    if (side == 0 || (side & (side - 1)) != 0) {
        throw std::invalid_argument("apply_general: unitary side must be a power of two");
    }
    const unsigned joint = static_cast<unsigned>(std::countr_zero(side));
    if (joint < dec.support.weight()) {
        throw std::invalid_argument("apply_general: unitary is smaller than the support");
    }
    const unsigned env_used = joint - dec.support.weight();
    if (env_used > layout.env) {
        throw std::invalid_argument("apply_general: needs " + std::to_string(env_used) +
                                    " environment qubits, layout has " + std::to_string(layout.env));
    }
    if (dec.env_init.length() != 0 && dec.env_init.length() != layout.env) {
        throw std::invalid_argument("apply_general: env_init length does not match the environment register");
    }
    const unsigned env_off = layout.offset(Register::Env);
    for (unsigned j = 0; j < dec.env_init.length(); ++j) {
        if (dec.env_init.get(j)) {
            state.apply_1q(env_off + j, qsim::gates::X);
        }
    }
    std::vector<unsigned> qubits;
    for (unsigned q = 0; q < layout.data; ++q) {
        if (dec.support.get(q)) {
            qubits.push_back(q);
        }
    }
    for (unsigned j = 0; j < env_used; ++j) {
        qubits.push_back(env_off + j);
    }
    if (qubits.empty()) {
        return;
    }
    state.apply_multi(qubits, dec.unitary);
}

GeneralDecoherence random_decoherence(const BitWord& support, unsigned env_qubits, Rng& rng) {
    const std::size_t side = std::size_t{1} << (support.weight() + env_qubits);
    return GeneralDecoherence{support, qsim::random_unitary(side, rng), BitWord()};
}

double binomial_fidelity_bound(unsigned n, unsigned t, double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::domain_error("binomial_fidelity_bound: F must lie in [0, 1]");
    }
    if (t > n) {
        throw std::domain_error("binomial_fidelity_bound: t must not exceed n");
    }
    double total = 0.0;
    double binom = 1.0;
    for (unsigned j = 0; j <= t; ++j) {
        if (j > 0) {
            binom = binom * (n - j + 1) / j;
        }
        total += binom * std::pow(fidelity, n - j) * std::pow(1.0 - fidelity, j);
    }
    return std::min(1.0, total);
}

std::vector<StateVector> default_inputs(unsigned k_logical, unsigned random_count, std::uint64_t seed) {
    const std::size_t dim = std::size_t{1} << k_logical;
    const double r = M_SQRT1_2;
    const Complex i1(0.0, 1.0);
    const std::array<std::array<Complex, 2>, 6> axes{{{1.0, 0.0},
                                                     {0.0, 1.0},
                                                     {r, r},
                                                     {r, -r},
                                                     {r, r * i1},
                                                     {r, -r * i1}}};
    std::vector<StateVector> out;
    for (unsigned q = 0; q < k_logical; ++q) {
        for (const auto& axis : axes) {
            std::vector<Complex> amps(dim);
            amps[0] = axis[0];
            amps[std::size_t{1} << q] = axis[1];
            out.push_back(StateVector::from_amplitudes(qsim::data_only(k_logical), std::move(amps)));
        }
    }
    Rng rng = substream(seed, 0xFFFF'FFFF'0000'0000ULL);
    for (unsigned i = 0; i < random_count; ++i) {
        out.push_back(qsim::random_state(k_logical, rng));
    }
    return out;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> pattern_fidelities(const CssCode& code, const PauliPattern& pattern,
                                       const std::vector<StateVector>& inputs, bool* corrected) {
    if (pattern.size() != code.n()) {
        throw std::invalid_argument("pattern_fidelities: pattern length does not match n");
    }
    const auto layout = code.layout(0);
    const auto data = layout.qubits(Register::Data);
    const std::size_t logical_dim = std::size_t{1} << code.k_logical();
    std::vector<Eigen::MatrixXcd> outputs;
    bool all_corrected = true;
    for (std::size_t x = 0; x < logical_dim; ++x) {
        StateVector state = encode(code, StateVector::basis_state(qsim::data_only(code.k_logical()), x)).embed(layout);
        apply_pattern(state, data, pattern);
        RecoveryResult result = recover(code, state);
        all_corrected = all_corrected && result.status == RecoveryStatus::Corrected;
        outputs.push_back(logical_amplitudes(code, result.state));
    }
    std::vector<double> fids;
    fids.reserve(inputs.size());
    for (const auto& psi : inputs) {
        if (psi.dim() != logical_dim) {
            throw std::invalid_argument("pattern_fidelities: input has wrong logical dimension");
        }
        Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(outputs[0].rows(), outputs[0].cols());
        for (std::size_t x = 0; x < logical_dim; ++x) {
            combined += psi.amplitude(x) * outputs[x];
        }
        Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(logical_dim));
        const Eigen::RowVectorXcd projected = v.adjoint() * combined;
        const double f = std::clamp(projected.squaredNorm(), 0.0, 1.0);
        fids.push_back(f > 1.0 - kFidelitySnap ? 1.0 : f);
    }
    if (corrected) {
        *corrected = all_corrected &&
                     std::all_of(fids.begin(), fids.end(), [](double f) { return f >= 1.0 - 1e-9; });
    }
    return fids;
}

namespace {

FidelityReport summarize(const std::vector<std::vector<double>>& per_trial, std::size_t inputs) {
    FidelityReport report{};
    const std::size_t trials = per_trial.size();
    report.trials = trials;
    std::vector<double> column(trials);
    std::vector<double> averages(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        averages[t] = pairwise_sum(per_trial[t]) / static_cast<double>(inputs);
    }
    auto mean_se = [&](const std::vector<double>& values) {
        const double mean = pairwise_sum(values) / static_cast<double>(values.size());
        if (values.size() < 2) {
            return InputFidelity{mean, 0.0};
        }
        std::vector<double> sq(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            sq[i] = (values[i] - mean) * (values[i] - mean);
        }
        const double var = pairwise_sum(sq) / static_cast<double>(values.size() - 1);
        return InputFidelity{mean, std::sqrt(var / static_cast<double>(values.size()))};
    };
    for (std::size_t i = 0; i < inputs; ++i) {
        for (std::size_t t = 0; t < trials; ++t) {
            column[t] = per_trial[t][i];
        }
        report.per_input.push_back(mean_se(column));
    }
    const auto avg = mean_se(averages);
    report.average_fidelity = avg.mean;
    report.average_std_error = avg.std_error;
    report.min_fidelity = 1.0;
    for (std::size_t i = 0; i < inputs; ++i) {
        if (i == 0 || report.per_input[i].mean < report.min_fidelity) {
            report.min_fidelity = report.per_input[i].mean;
            report.argmin = i;
        }
    }
    return report;
}

}  // namespace

FidelityReport logical_fidelity_mc(const CssCode& code, const PauliChannelSpec& spec,
                                   const std::vector<StateVector>& inputs, std::uint64_t trials, std::uint64_t seed,
                                   const TrialLogger& log) {
    if (trials < 1) {
        throw std::invalid_argument("logical_fidelity_mc: need at least one trial");
    }
    if (inputs.empty()) {
        throw std::invalid_argument("logical_fidelity_mc: no input states");
    }
    const unsigned n = code.n();
    std::vector<std::string> drawn(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = substream(seed, t);
        PauliPattern pattern;
        for (unsigned q = 0; q < n; ++q) {
            pattern.push_back(sample_pauli(spec, rng));
        }
        drawn[t] = pattern_string(pattern);
    }

    // Fidelities depend only on the pattern, so each distinct one is run once.
    std::map<std::string, std::size_t> index_of;
    std::vector<std::string> distinct;
    for (const auto& s : drawn) {
        if (index_of.emplace(s, distinct.size()).second) {
            distinct.push_back(s);
        }
    }
    std::vector<std::vector<double>> results(distinct.size());
    std::vector<char> corrected(distinct.size());
    const std::int64_t count = static_cast<std::int64_t>(distinct.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        bool ok = false;
        results[i] = pattern_fidelities(code, parse_pattern(distinct[i]), inputs, &ok);
        corrected[i] = ok;
    }

    std::vector<std::vector<double>> per_trial(trials);
    std::uint64_t correctable = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t idx = index_of.at(drawn[t]);
        per_trial[t] = results[idx];
        correctable += pattern_weight(parse_pattern(drawn[t])) <= code.t();
        if (log) {
            log({t, drawn[t], corrected[idx] != 0, pairwise_sum(results[idx]) / static_cast<double>(inputs.size())});
        }
    }
    FidelityReport report = summarize(per_trial, inputs.size());
    report.correctable_probability = static_cast<double>(correctable) / static_cast<double>(trials);
    return report;
}

FidelityReport logical_fidelity_exhaustive(const CssCode& code, const PauliChannelSpec& spec,
                                           const std::vector<StateVector>& inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("logical_fidelity_exhaustive: no input states");
    }
    const unsigned n = code.n();
    if (2 * n > 20) {
        throw EnumerationLimitError("logical_fidelity_exhaustive: 4^n exceeds 2^20 patterns");
    }
    const std::int64_t patterns = std::int64_t{1} << (2 * n);
    std::vector<std::vector<double>> weighted(static_cast<std::size_t>(patterns));
    std::vector<double> probs(static_cast<std::size_t>(patterns), 0.0);
    std::vector<char> low_weight(static_cast<std::size_t>(patterns), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t idx = 0; idx < patterns; ++idx) {
        PauliPattern pattern(n);
        for (unsigned q = 0; q < n; ++q) {
            pattern[q] = static_cast<Pauli>((idx >> (2 * q)) & 3);
        }
        const double prob = spec.probability(pattern);
        probs[idx] = prob;
        low_weight[idx] = pattern_weight(pattern) <= code.t();
        if (prob == 0.0) {
            weighted[idx].assign(inputs.size(), 0.0);
            continue;
        }
        auto fids = pattern_fidelities(code, pattern, inputs);
        for (auto& f : fids) {
            f *= prob;
        }
        weighted[idx] = std::move(fids);
    }

    FidelityReport report{};
    report.trials = 0;
    std::vector<double> column(static_cast<std::size_t>(patterns));
    double average = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::int64_t idx = 0; idx < patterns; ++idx) {
            column[idx] = weighted[idx][i];
        }
        const double mean = pairwise_sum(column);
        report.per_input.push_back({mean, 0.0});
        average += mean;
        if (i == 0 || mean < report.min_fidelity) {
            report.min_fidelity = mean;
            report.argmin = i;
        }
    }
    report.average_fidelity = average / static_cast<double>(inputs.size());
    for (std::int64_t idx = 0; idx < patterns; ++idx) {
        column[idx] = low_weight[idx] ? probs[idx] : 0.0;
    }
    report.correctable_probability = pairwise_sum(column);
    return report;
}

}  // namespace cssqec::channels
