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

#include "cssqec/css_code.hpp"

#include <algorithm>
#include <cmath>

namespace cssqec {

using qsim::Complex;
using qsim::Register;
using qsim::StateVector;

std::optional<BitWord> SyndromeTable::lookup(const BitWord& syndrome_bits) const {
    if (syndrome_bits.length() != check.rows()) {
        throw std::invalid_argument("SyndromeTable::lookup: syndrome length mismatch");
    }
    return entries.at(syndrome_bits.bits());
}

SyndromeTable build_syndrome_table(const BinMatrix& check, unsigned t) {
    const unsigned n = check.cols();
    if (check.rows() > 24) {
        throw EnumerationLimitError("build_syndrome_table: more than 24 check rows");
    }
    SyndromeTable table{check, std::vector<std::optional<BitWord>>(std::size_t{1} << check.rows())};
    for (unsigned w = 0; w <= std::min(t, n); ++w) {
        if (w == 0) {
            table.entries[0] = BitWord::zeros(n);
            continue;
        }
        // Gosper's hack over all n-bit masks of weight w.
        std::uint64_t mask = low_mask(w);
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            const BitWord e(n, mask);
            auto& slot = table.entries[syndrome(check, e).bits()];
            if (slot && *slot != e) {
                throw std::logic_error("build_syndrome_table: errors " + slot->str() + " and " + e.str() +
                                       " share a syndrome; the code does not correct " + std::to_string(t) +
                                       " errors");
            }
            slot = e;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return table;
}

CssCode::CssCode(CodeTower tower) : tower_(std::move(tower)) {
    const auto d1 = tower_.c1.min_distance();
    const auto d2 = tower_.c2.dual_code().min_distance();
    if (!d1 || !d2) {
        throw EnumerationLimitError("CssCode: minimum distance of C1 or C2^perp is beyond the enumeration limit");
    }
    d_ = std::min(*d1, *d2);
    bitflip_ = build_syndrome_table(tower_.c1.parity_check(), t());
    phase_ = build_syndrome_table(tower_.c2.generator(), t());
}

CssCode CssCode::steane() {
    const LinearCode hamming = hamming_7_4();
    return CssCode(make_tower(hamming.dual_code(), hamming));
}

qsim::RegisterLayout CssCode::layout(unsigned env) const {
    qsim::RegisterLayout l{n(), static_cast<unsigned>(bitflip_.check.rows()), static_cast<unsigned>(phase_.check.rows()),
                           env};
    l.validate();
    return l;
}

CssCode make_css_code(const BinMatrix& c1_generator, const BinMatrix& c2_generator) {
    const unsigned n = c1_generator.cols();
    const LinearCode c2 = c2_generator.rows() == 0 ? LinearCode::zero(n) : LinearCode(c2_generator);
    return CssCode(make_tower(c2, LinearCode(c1_generator)));
}

namespace {

void check_word(const CssCode& code, const BitWord& w, const char* what) {
    if (w.length() != code.n()) {
        throw std::invalid_argument(std::string(what) + ": word length " + std::to_string(w.length()) +
                                    " does not match n = " + std::to_string(code.n()));
    }
}

StateVector uniform_over(unsigned n, const std::vector<BitWord>& support, const BitWord& shift) {
    std::vector<Complex> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (const auto& v : support) {
        amps[(v ^ shift).bits()] = a;
    }
    return StateVector::from_amplitudes(qsim::data_only(n), std::move(amps));
}

}  // namespace

StateVector codeword_c(const CssCode& code, const BitWord& w) {
    check_word(code, w, "codeword_c");
    const auto words = code.tower().c1.codewords();
    std::vector<Complex> amps(std::size_t{1} << code.n());
    const double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (const auto& c : words) {
        amps[c.bits()] = c.dot(w) ? -a : a;
    }
    return StateVector::from_amplitudes(qsim::data_only(code.n()), std::move(amps));
}

StateVector codeword_s(const CssCode& code, const BitWord& w) {
    check_word(code, w, "codeword_s");
    return uniform_over(code.n(), row_space(code.tower().c1.parity_check()), w);
}

StateVector codeword_steane(const CssCode& code, const BitWord& w) {
    check_word(code, w, "codeword_steane");
    if (!code.tower().c1.contains(w)) {
        throw std::invalid_argument("codeword_steane: " + w.str() + " is not in C1");
    }
    return uniform_over(code.n(), code.tower().c2.codewords(), w);
}

StateVector encode(const CssCode& code, const StateVector& logical) {
    if (logical.num_qubits() != code.k_logical()) {
        throw std::invalid_argument("encode: logical state has " + std::to_string(logical.num_qubits()) +
                                    " qubits, code encodes " + std::to_string(code.k_logical()));
    }
    const auto words = code.tower().c1.codewords();
    const double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
    std::vector<Complex> amps(std::size_t{1} << code.n());
    for (std::size_t x = 0; x < logical.dim(); ++x) {
        const Complex alpha = logical.amplitude(x);
        if (alpha == Complex(0.0)) {
            continue;
        }
        const BitWord& rep = code.coset_rep(x);
        for (const auto& c : words) {
            amps[c.bits()] += (c.dot(rep) ? -a : a) * alpha;
        }
    }
    return StateVector::from_amplitudes(qsim::data_only(code.n()), std::move(amps));
}

namespace {

void check_overlap_args(const CssCode& code, const BitWord& w1, const BitWord& support, const BitWord& pattern,
                        const BitWord& w2) {
    check_word(code, w1, "projected_overlap");
    check_word(code, w2, "projected_overlap");
    check_word(code, support, "projected_overlap");
    check_word(code, pattern, "projected_overlap");
    if (!pattern.precedes(support)) {
        throw std::invalid_argument("projected_overlap: pattern is not within the support");
    }
    const auto dual_distance = code.tower().c1.dual_code().min_distance();
    if (!dual_distance || support.weight() >= *dual_distance) {
        throw std::invalid_argument("projected_overlap: wt(E) must be below d(C1^perp)");
    }
}

}  // namespace

std::complex<double> projected_overlap(const CssCode& code, const BitWord& w1, const BitWord& support,
                                       const BitWord& pattern, const BitWord& w2) {
    check_overlap_args(code, w1, support, pattern, w2);
    const StateVector a = codeword_c(code, w1);
    const StateVector b = codeword_c(code, w2);
    Complex acc = 0.0;
    for (std::uint64_t v = 0; v < a.dim(); ++v) {
        if ((v & support.bits()) == pattern.bits()) {
            acc += std::conj(a.amplitude(v)) * b.amplitude(v);
        }
    }
    return acc;
}

double projected_overlap_closed_form(const CssCode& code, const BitWord& w1, const BitWord& support,
                                     const BitWord& pattern, const BitWord& w2) {
    check_overlap_args(code, w1, support, pattern, w2);
    for (const auto& c : row_space(code.tower().c1.parity_check())) {
        const BitWord diff = c ^ w1 ^ w2;
        if (diff.precedes(support)) {
            const double sign = pattern.dot(diff) ? -1.0 : 1.0;
            return sign / std::ldexp(1.0, static_cast<int>(support.weight()));
        }
    }
    return 0.0;
}

namespace {

struct StagePlan {
    Register ancilla;
    std::vector<std::uint64_t> syndrome_of_data;  // indexed by data value
    std::vector<std::uint64_t> correction;        // indexed by syndrome, 0 if none
    std::vector<bool> valid;
};

StagePlan plan_stage(const SyndromeTable& table, unsigned n, Register ancilla) {
    StagePlan plan{ancilla, std::vector<std::uint64_t>(std::size_t{1} << n), {}, {}};
    for (std::uint64_t x = 0; x < plan.syndrome_of_data.size(); ++x) {
        plan.syndrome_of_data[x] = syndrome(table.check, BitWord(n, x)).bits();
    }
    plan.correction.resize(table.entries.size(), 0);
    plan.valid.resize(table.entries.size(), false);
    for (std::size_t s = 0; s < table.entries.size(); ++s) {
        if (table.entries[s]) {
            plan.correction[s] = table.entries[s]->bits();
            plan.valid[s] = true;
        }
    }
    return plan;
}

/// Runs one stage; returns the decoded error or nullopt when uncorrectable.
std::optional<BitWord> run_stage(StateVector& state, const StagePlan& plan, unsigned n, RecoveryMode mode, Rng* rng) {
    const auto& layout = state.layout();
    const unsigned off = layout.offset(plan.ancilla);
    const std::uint64_t anc_mask = low_mask(layout.size(plan.ancilla));
    const std::uint64_t data_mask = low_mask(n);
    const auto& syn = plan.syndrome_of_data;
    state.permute_basis([&](std::uint64_t i) { return i ^ (syn[i & data_mask] << off); });

    std::uint64_t decoded = 0;
    if (mode == RecoveryMode::Measured && layout.size(plan.ancilla) > 0) {
        auto m = qsim::measure_register(state, plan.ancilla, *rng);
        decoded = m.outcome.bits();
        if (!plan.valid[decoded]) {
            return std::nullopt;
        }
        state = std::move(m.collapsed);
    } else {
        const auto dist = qsim::register_distribution(state, plan.ancilla);
        double bad = 0.0;
        for (std::size_t s = 0; s < dist.size(); ++s) {
            if (!plan.valid[s]) {
                bad += dist[s];
            }
        }
        if (bad > 1e-12) {
            return std::nullopt;
        }
        decoded = static_cast<std::uint64_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    }
    const auto& corr = plan.correction;
    state.permute_basis([&](std::uint64_t i) { return i ^ corr[(i >> off) & anc_mask]; });
    return BitWord(n, corr[decoded]);
}

}  // namespace

RecoveryResult recover(const CssCode& code, const StateVector& state, RecoveryMode mode, Rng* rng) {
    const auto& layout = state.layout();
    const auto expected = code.layout(layout.env);
    if (!(layout == expected)) {
        throw std::invalid_argument("recover: state layout does not match the code's register layout");
    }
    if (mode == RecoveryMode::Measured && rng == nullptr) {
        throw std::invalid_argument("recover: measured mode needs an rng");
    }
    for (Register anc : {Register::AncillaA, Register::AncillaA2}) {
        if (qsim::register_distribution(state, anc)[0] < 1.0 - 1e-10) {
            throw std::invalid_argument("recover: ancilla registers must start in |0...0>");
        }
    }
    const unsigned n = code.n();
    const auto data = layout.qubits(Register::Data);
    const StagePlan bitflip = plan_stage(code.bitflip_table(), n, Register::AncillaA);
    const StagePlan phase = plan_stage(code.phase_table(), n, Register::AncillaA2);

    StateVector work = state;
    const BitWord zero = BitWord::zeros(n);
    const auto e = run_stage(work, bitflip, n, mode, rng);
    if (!e) {
        return {state, {zero, zero}, RecoveryStatus::Uncorrectable};
    }
    work.transversal_hadamard(data);
    const auto e2 = run_stage(work, phase, n, mode, rng);
    if (!e2) {
        return {state, {*e, zero}, RecoveryStatus::Uncorrectable};
    }
    work.transversal_hadamard(data);
    return {std::move(work), {*e, *e2}, RecoveryStatus::Corrected};
}

Eigen::MatrixXcd logical_amplitudes(const CssCode& code, const StateVector& state) {
    const unsigned n = code.n();
    if (state.layout().data != n) {
        throw std::invalid_argument("logical_amplitudes: data register size does not match n");
    }
    const auto words = code.tower().c1.codewords();
    const double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
    const std::size_t logical_dim = std::size_t{1} << code.k_logical();
    const std::size_t rest_dim = state.dim() >> n;
    const auto amps = state.amplitudes();
    Eigen::MatrixXcd beta = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(logical_dim),
                                                   static_cast<Eigen::Index>(rest_dim));
    for (std::size_t x = 0; x < logical_dim; ++x) {
        const BitWord& rep = code.coset_rep(x);
        for (const auto& c : words) {
            const double sign = c.dot(rep) ? -a : a;
            for (std::size_t r = 0; r < rest_dim; ++r) {
                beta(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(r)) +=
                    sign * amps[c.bits() | (static_cast<std::uint64_t>(r) << n)];
            }
        }
    }
    return beta;
}

LogicalReduction reduce_to_logical(const CssCode& code, const StateVector& state) {
    const Eigen::MatrixXcd beta = logical_amplitudes(code, state);
    Eigen::MatrixXcd rho = beta * beta.adjoint();
    const double kept = rho.trace().real();
    return {std::move(rho), std::max(0.0, 1.0 - kept)};
}

StateVector decode(const CssCode& code, const StateVector& state) {
    const Eigen::MatrixXcd beta = logical_amplitudes(code, state);
    const Eigen::MatrixXcd rho = beta * beta.adjoint();
    const double kept = rho.trace().real();
    if (1.0 - kept > 1e-8) {
        throw LeakageError("decode: " + std::to_string(1.0 - kept) + " of the state lies outside the code space");
    }
    if ((rho * rho).trace().real() < 1.0 - 1e-8) {
        throw LeakageError("decode: data register is entangled with the ancilla or environment registers");
    }
    Eigen::Index best = 0;
    beta.colwise().squaredNorm().maxCoeff(&best);
    Eigen::VectorXcd column = beta.col(best);
    column /= column.norm();
    return StateVector::from_amplitudes(qsim::data_only(code.k_logical()),
                                        std::vector<Complex>(column.data(), column.data() + column.size()));
}

}  // namespace cssqec
