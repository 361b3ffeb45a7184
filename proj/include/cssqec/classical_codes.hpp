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
#include <optional>
#include <stdexcept>
#include <vector>

#include "cssqec/gf2.hpp"

namespace cssqec {

/// Largest dimension for which minimum distances are found by enumeration.
inline constexpr unsigned kMinDistanceDimensionLimit = 20;

class EnumerationLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Weakly self-dual codes need 1^n . 1^n = 0, which fails for odd n.
class OddLengthError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Binary linear [n, k, d] code. The generator is kept in canonical rref
/// form, so two codes compare equal iff they have the same row space.
class LinearCode {
  public:
    /// Code spanned by the rows of `generator`; dependent rows are dropped.
    explicit LinearCode(const BinMatrix& generator);

    static LinearCode zero(unsigned n);

    unsigned n() const noexcept { return n_; }
    unsigned k() const noexcept { return static_cast<unsigned>(generator_.rows()); }
    const BinMatrix& generator() const noexcept { return generator_; }
    const BinMatrix& parity_check() const noexcept { return parity_check_; }

    /// Minimum nonzero codeword weight; nullopt when k exceeds the
    /// enumeration limit. The zero code reports n + 1 by convention.
    std::optional<unsigned> min_distance() const noexcept { return min_distance_; }

    bool contains(const BitWord& v) const;
    std::vector<BitWord> codewords() const { return row_space(generator_); }
    LinearCode dual_code() const { return LinearCode(parity_check_); }

    bool operator==(const LinearCode& other) const { return generator_ == other.generator_; }

  private:
    unsigned n_;
    BinMatrix generator_;
    BinMatrix parity_check_;
    std::optional<unsigned> min_distance_;
};

/// [7,4,3] Hamming code with the 16 codewords 0000000, 0001011, ..., 1111111.
LinearCode hamming_7_4();

std::optional<unsigned> min_distance(const LinearCode& code);

/// Codeword v_e with v_e|_E = e; see the BinMatrix overload.
std::optional<BitWord> lemma1_solve(const LinearCode& code, const BitWord& support, const BitWord& pattern);

/// Nested pair C2 subset C1 together with representatives of C2^perp / C1^perp.
struct CodeTower {
    LinearCode c2;
    LinearCode c1;
    /// Minimal-weight element of each coset, sorted by (weight, lex); 0 first.
    std::vector<BitWord> coset_reps;
};

CodeTower make_tower(const LinearCode& c2, const LinearCode& c1);

/// 1^n in C and C contained in C^perp.
bool is_weakly_self_dual(const LinearCode& code);

/// Every k-dimensional code with <<1^n>> in C in C^perp, in canonical order.
/// Requires n even, n <= 12 and 1 <= k <= n/2.
std::vector<LinearCode> enumerate_weakly_self_dual(unsigned n, unsigned k);

/// Number of k-dimensional weakly self-dual codes of length n containing `seed`.
std::uint64_t sigma_count(unsigned n, unsigned k, const LinearCode& seed);

/// 1 - H2(delta).
double gv_classical_rate(double delta);

/// max(0, 1 - 2 H2(delta)).
double gv_quantum_rate(double delta);

struct GreedyCheck {
    /// W * #{even-weight v : wt(v) < d}, with W the largest number of codes
    /// whose dual contains a fixed even-weight v outside {0, 1^n}.
    std::uint64_t lhs;
    /// Size of the family {C^perp}.
    std::uint64_t rhs;
    std::uint64_t vectors_below_d;
    std::uint64_t w;
    bool inequality_holds;
    /// A weakly self-dual code whose dual has minimum distance >= d.
    std::optional<LinearCode> witness;
    std::optional<unsigned> witness_dual_distance;
};

GreedyCheck greedy_existence_check(unsigned n, unsigned k, unsigned d);

/// Pairs (C, v) with v an even-weight vector outside {0, 1^n} and v in C^perp,
/// counted per code and per vector.
struct DualPairCount {
    std::uint64_t codes;
    std::uint64_t pairs_by_code;
    std::uint64_t pairs_by_vector;
    /// Smallest and largest per-vector count W(v).
    std::uint64_t w_min;
    std::uint64_t w_max;
};

DualPairCount count_dual_pairs(unsigned n, unsigned k);

/// Stanzas of canonical generators separated by blank lines.
std::string format_code_list(const std::vector<LinearCode>& codes);

}  // namespace cssqec
