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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace cssqec::qsim {

unsigned RegisterLayout::offset(Register r) const noexcept {
    switch (r) {
        case Register::Data:
            return 0;
        case Register::AncillaA:
            return data;
        case Register::AncillaA2:
            return data + ancilla_a;
        case Register::Env:
            return data + ancilla_a + ancilla_a2;
    }
    return 0;
}

unsigned RegisterLayout::size(Register r) const noexcept {
    switch (r) {
        case Register::Data:
            return data;
        case Register::AncillaA:
            return ancilla_a;
        case Register::AncillaA2:
            return ancilla_a2;
        case Register::Env:
            return env;
    }
    return 0;
}

std::vector<unsigned> RegisterLayout::qubits(Register r) const {
    std::vector<unsigned> q(size(r));
    for (unsigned i = 0; i < q.size(); ++i) {
        q[i] = offset(r) + i;
    }
    return q;
}

std::uint64_t RegisterLayout::mask(Register r) const noexcept {
    return low_mask(size(r)) << offset(r);
}

void RegisterLayout::validate() const {
    if (total() > kMaxQubits) {
        throw std::length_error("register layout has " + std::to_string(total()) + " qubits, limit is " +
                                std::to_string(kMaxQubits));
    }
}

StateVector StateVector::basis_state(const RegisterLayout& layout, const BitWord& bits) {
    if (bits.length() != layout.total()) {
        throw std::invalid_argument("basis_state: word of length " + std::to_string(bits.length()) + " for " +
                                    std::to_string(layout.total()) + " qubits");
    }
    return basis_state(layout, bits.bits());
}

StateVector StateVector::basis_state(const RegisterLayout& layout, std::uint64_t index) {
    layout.validate();
    std::vector<Complex> amps(std::size_t{1} << layout.total());
    if (index >= amps.size()) {
        throw std::out_of_range("basis_state: index out of range");
    }
    amps[index] = 1.0;
    return StateVector(layout, std::move(amps));
}

StateVector StateVector::from_amplitudes(const RegisterLayout& layout, std::vector<Complex> amps) {
    layout.validate();
    if (amps.size() != (std::size_t{1} << layout.total())) {
        throw std::invalid_argument("from_amplitudes: expected " + std::to_string(std::size_t{1} << layout.total()) +
                                    " amplitudes, got " + std::to_string(amps.size()));
    }
    const double norm = kernels::norm_squared(amps);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("from_amplitudes: state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return StateVector(layout, std::move(amps));
}

void StateVector::check_qubit(unsigned q) const {
    if (q >= layout_.total()) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                                std::to_string(layout_.total()) + " qubits");
    }
}

void StateVector::apply_1q(unsigned qubit, const Mat2& u) {
    check_qubit(qubit);
    if (!is_unitary(u)) {
        throw std::invalid_argument("apply_1q: matrix is not unitary");
    }
    kernels::apply_1q(amps_, qubit, u);
}

void StateVector::apply_multi(std::span<const unsigned> qubits, const Eigen::MatrixXcd& u) {
    if (qubits.empty() || qubits.size() > 12) {
        throw std::invalid_argument("apply_multi: need between 1 and 12 target qubits");
    }
    std::vector<unsigned> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("apply_multi: duplicate target qubit");
    }
    for (unsigned q : qubits) {
        check_qubit(q);
    }
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << qubits.size());
    if (u.rows() != side || u.cols() != side) {
        throw std::invalid_argument("apply_multi: matrix side does not match 2^qubits");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument("apply_multi: matrix is not unitary");
    }
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> row_major = u;
    kernels::apply_multi(amps_, qubits, std::span<const Complex>(row_major.data(), static_cast<std::size_t>(row_major.size())));
}

void StateVector::transversal_hadamard(std::span<const unsigned> qubits) {
    for (unsigned q : qubits) {
        check_qubit(q);
    }
    for (unsigned q : qubits) {
        kernels::apply_1q(amps_, q, gates::H);
    }
}

StateVector StateVector::embed(const RegisterLayout& target) const {
    if (layout_.total() != layout_.data || target.data != layout_.data) {
        throw std::invalid_argument("embed: source must be a data-only state with matching data size");
    }
    target.validate();
    std::vector<Complex> amps(std::size_t{1} << target.total());
    std::copy(amps_.begin(), amps_.end(), amps.begin());
    return StateVector(target, std::move(amps));
}

StateVector StateVector::data_component() const {
    const std::size_t data_dim = std::size_t{1} << layout_.data;
    for (std::size_t i = data_dim; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) > 1e-12) {
            throw std::invalid_argument("data_component: non-data registers are not in |0...0>");
        }
    }
    return from_amplitudes(data_only(layout_.data), std::vector<Complex>(amps_.begin(), amps_.begin() + data_dim));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return acc;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    const auto n = m_.rows();
    if (n != m_.cols() || n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("DensityMatrix: must be square with power-of-two side");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::projector(const StateVector& psi) {
    Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dim()));
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(unsigned qubits) {
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << qubits);
    return DensityMatrix(Eigen::MatrixXcd::Identity(side, side) / static_cast<double>(side));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat2& u, double tol) {
    Eigen::MatrixXcd m(2, 2);
    m << u[0], u[1], u[2], u[3];
    return is_unitary(m, tol);
}

std::vector<double> register_distribution(const StateVector& state, Register reg) {
    const auto& layout = state.layout();
    std::vector<double> probs(std::size_t{1} << layout.size(reg), 0.0);
    const unsigned off = layout.offset(reg);
    const std::uint64_t mask = low_mask(layout.size(reg));
    const auto amps = state.amplitudes();
    // Every run of 2^off consecutive indices shares one register value.
    const std::uint64_t run = std::uint64_t{1} << off;
    for (std::uint64_t base = 0; base < amps.size(); base += run) {
        double sum = 0.0;
        for (std::uint64_t j = 0; j < run; ++j) {
            sum += kernels::abs2(amps[base + j]);
        }
        probs[(base >> off) & mask] += sum;
    }
    return probs;
}

Measurement measure_register(const StateVector& state, Register reg, Rng& rng) {
    const auto& layout = state.layout();
    if (layout.size(reg) == 0) {
        throw std::invalid_argument("measure_register: register is empty");
    }
    const auto probs = register_distribution(state, reg);
    const double u = uniform01(rng);
    double cumulative = 0.0;
    std::size_t outcome = probs.size() - 1;
    for (std::size_t v = 0; v < probs.size(); ++v) {
        cumulative += probs[v];
        if (u < cumulative) {
            outcome = v;
            break;
        }
    }
    // Rounding can leave u above the final cumulative sum; fall back to the
    // last outcome with positive weight.
    while (probs[outcome] == 0.0 && outcome > 0) {
        --outcome;
    }
    if (probs[outcome] <= 0.0) {
        throw std::runtime_error("measure_register: selected branch has zero norm");
    }
    const unsigned off = layout.offset(reg);
    const std::uint64_t mask = low_mask(layout.size(reg));
    const double scale = 1.0 / std::sqrt(probs[outcome]);
    std::vector<Complex> amps(state.dim());
    const auto src = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (((i >> off) & mask) == outcome) {
            amps[i] = src[i] * scale;
        }
    }
    return Measurement{BitWord(layout.size(reg), outcome),
                       StateVector::from_amplitudes(layout, std::move(amps))};
}

DensityMatrix partial_trace(const StateVector& state, std::span<const unsigned> keep_qubits) {
    const unsigned total = state.num_qubits();
    if (keep_qubits.empty() || keep_qubits.size() > 12) {
        throw std::invalid_argument("partial_trace: keep between 1 and 12 qubits");
    }
    std::vector<bool> kept(total, false);
    for (unsigned q : keep_qubits) {
        if (q >= total || kept[q]) {
            throw std::invalid_argument("partial_trace: invalid or duplicate qubit");
        }
        kept[q] = true;
    }
    std::vector<unsigned> rest;
    for (unsigned q = 0; q < total; ++q) {
        if (!kept[q]) {
            rest.push_back(q);
        }
    }
    const auto keep_dim = static_cast<Eigen::Index>(std::size_t{1} << keep_qubits.size());
    const auto rest_dim = static_cast<Eigen::Index>(std::size_t{1} << rest.size());
    Eigen::MatrixXcd psi(keep_dim, rest_dim);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < keep_qubits.size(); ++j) {
            k |= ((i >> keep_qubits[j]) & 1) << j;
        }
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            r |= ((i >> rest[j]) & 1) << j;
        }
        psi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = amps[i];
    }
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix partial_trace(const StateVector& state, std::initializer_list<Register> keep) {
    std::vector<unsigned> qubits;
    for (auto reg : keep) {
        const auto q = state.layout().qubits(reg);
        qubits.insert(qubits.end(), q.begin(), q.end());
    }
    return partial_trace(state, qubits);
}

double fidelity(const DensityMatrix& rho, const StateVector& x) {
    if (rho.dim() != x.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    Eigen::Map<const Eigen::VectorXcd> v(x.amplitudes().data(), static_cast<Eigen::Index>(x.dim()));
    const double f = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double h = 0.0;
    for (double lambda : rho.eigenvalues()) {
        if (lambda > 1e-15) {
            h -= lambda * std::log2(lambda);
        }
    }
    return std::max(0.0, h);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix() - b.matrix(), Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

StateVector random_state(unsigned qubits, Rng& rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto& a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = Complex(re, im);
        norm += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(data_only(qubits), std::move(amps));
}

Eigen::MatrixXcd random_unitary(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> normal;
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

std::string dump_csv(const StateVector& state) {
    std::string out = "index,re,im\n";
    char buf[96];
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) > 1e-12) {
            std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n", static_cast<unsigned long long>(i), amps[i].real(),
                          amps[i].imag());
            out += buf;
        }
    }
    return out;
}

}  // namespace cssqec::qsim
