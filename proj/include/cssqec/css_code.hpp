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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cssqec/classical_codes.hpp"
#include "cssqec/qsim.hpp"

namespace cssqec {

/// Syndrome-indexed decoder for a classical code: entry s holds the unique
/// error of weight <= t with that syndrome, or nullopt.
struct SyndromeTable {
    BinMatrix check;
    std::vector<std::optional<BitWord>> entries;

    std::optional<BitWord> lookup(const BitWord& syndrome_bits) const;
};

/// Builds the table by enumerating every error of weight <= t. Throws when
/// two such errors collide, which means the code cannot correct t errors.
SyndromeTable build_syndrome_table(const BinMatrix& check, unsigned t);

/// Quantum code Q(C1, C2) for a tower C2 subset C1.
///
/// Bit flips are decoded with C1 (check matrix = generator of C1^perp) and
/// phase flips, after a transversal Hadamard, with C2^perp (check matrix =
/// generator of C2). Logical basis state |x> is |c_w> for the x-th coset
/// representative w of C2^perp / C1^perp.
class CssCode {
  public:
    explicit CssCode(CodeTower tower);

    /// Hamming [7,4,3] over its even-weight subcode.
    static CssCode steane();

    const CodeTower& tower() const noexcept { return tower_; }
    unsigned n() const noexcept { return tower_.c1.n(); }
    unsigned k_logical() const noexcept { return tower_.c1.k() - tower_.c2.k(); }
    /// min(d(C1), d(C2^perp)).
    unsigned d() const noexcept { return d_; }
    unsigned t() const noexcept { return (d_ - 1) / 2; }
    double rate() const noexcept { return static_cast<double>(k_logical()) / n(); }

    const SyndromeTable& bitflip_table() const noexcept { return bitflip_; }
    const SyndromeTable& phase_table() const noexcept { return phase_; }

    const BitWord& coset_rep(std::size_t logical_index) const { return tower_.coset_reps.at(logical_index); }

    /// Data, syndrome ancillas A and A' sized to the two check matrices, and
    /// `env` environment qubits.
    qsim::RegisterLayout layout(unsigned env = 0) const;

  private:
    CodeTower tower_;
    unsigned d_;
    SyndromeTable bitflip_;
    SyndromeTable phase_;
};

/// CssCode from C1 and C2 generators.
CssCode make_css_code(const BinMatrix& c1_generator, const BinMatrix& c2_generator);

/// |c_w> = 2^(-dim C1 / 2) sum_{c in C1} (-1)^(c.w) |c>.
qsim::StateVector codeword_c(const CssCode& code, const BitWord& w);

/// |s_w> = 2^((dim C1 - n)/2) sum_{u in C1^perp} |u + w>.
qsim::StateVector codeword_s(const CssCode& code, const BitWord& w);

/// |s'_w> = 2^(-dim C2 / 2) sum_{v in C2} |v + w>, for w in C1.
qsim::StateVector codeword_steane(const CssCode& code, const BitWord& w);

/// Linear extension of |x> -> |c_{rep x}> onto a data-only register.
qsim::StateVector encode(const CssCode& code, const qsim::StateVector& logical);

/// <c_w1| P |c_w2> with P the projector onto basis states v with v|_E = e,
/// evaluated on explicit statevectors.
std::complex<double> projected_overlap(const CssCode& code, const BitWord& w1, const BitWord& support,
                                       const BitWord& pattern, const BitWord& w2);

/// Closed form of the same overlap: (-1)^(e.(c + w1 + w2)) / 2^wt(E) if some
/// c in C1^perp has c + w1 + w2 within supp(E), else 0.
double projected_overlap_closed_form(const CssCode& code, const BitWord& w1, const BitWord& support,
                                     const BitWord& pattern, const BitWord& w2);

enum class RecoveryMode {
    /// Syndromes are computed into the ancillas by reversible permutations.
    Coherent,
    /// Each ancilla register is measured and the correction applied classically.
    Measured,
};

enum class RecoveryStatus { Corrected, Uncorrectable };

struct RecoveryRecord {
    /// Error e decoded from ancilla A (most likely value when A is in superposition).
    BitWord bitflip_error;
    /// Error e'' decoded from ancilla A'.
    BitWord phase_error;
};

struct RecoveryResult {
    qsim::StateVector state;
    RecoveryRecord record;
    RecoveryStatus status;
};

/// Two-stage recovery: C1 syndrome into A with X correction, transversal
/// Hadamard, C2^perp syndrome into A' with X correction, Hadamard back. The
/// layout must be code.layout(env) with both ancillas in |0...0>. When a
/// syndrome outside the table carries weight the input is returned as-is
/// with status Uncorrectable.
RecoveryResult recover(const CssCode& code, const qsim::StateVector& state, RecoveryMode mode = RecoveryMode::Coherent,
                       Rng* rng = nullptr);

class LeakageError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Logical reduced block: rho[x][y] = sum_r <c_x, r|psi> <psi|c_y, r>, r
/// running over all non-data registers. trace(rho) = 1 - leakage.
struct LogicalReduction {
    Eigen::MatrixXcd rho;
    double leakage;
};

LogicalReduction reduce_to_logical(const CssCode& code, const qsim::StateVector& state);

/// Amplitudes <c_x, r|psi> as a (2^k x 2^rest) matrix.
Eigen::MatrixXcd logical_amplitudes(const CssCode& code, const qsim::StateVector& state);

/// Inverse of encode on the data register. Throws LeakageError when more
/// than 1e-8 of the weight lies outside the code space, and when the data
/// register is still entangled with the other registers.
qsim::StateVector decode(const CssCode& code, const qsim::StateVector& state);

}  // namespace cssqec
