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

#include "cssqec/classical_codes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cssqec/bounds.hpp"

namespace cssqec {

namespace {

std::optional<unsigned> enumerate_min_distance(const BinMatrix& basis) {
    const unsigned k = static_cast<unsigned>(basis.rows());
    if (k > kMinDistanceDimensionLimit) {
        return std::nullopt;
    }
    if (k == 0) {
        return basis.cols() + 1;
    }
    // Gray-code walk: one row XOR per codeword.
    unsigned best = basis.cols() + 1;
    std::uint64_t word = 0;
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        word ^= basis.row(static_cast<std::size_t>(std::countr_zero(i))).bits();
        best = std::min<unsigned>(best, static_cast<unsigned>(std::popcount(word)));
    }
    return best;
}

using CanonicalKey = std::vector<std::uint64_t>;

CanonicalKey key_of(const BinMatrix& reduced) {
    CanonicalKey key;
    for (const auto& r : reduced.row_words()) {
        key.push_back(r.bits());
    }
    return key;
}

BinMatrix matrix_of(unsigned n, const CanonicalKey& key) {
    std::vector<BitWord> rows;
    for (auto bits : key) {
        rows.emplace_back(n, bits);
    }
    return BinMatrix(n, std::move(rows));
}

void check_wsd_params(unsigned n, unsigned k) {
    if (n % 2 != 0) {
        throw OddLengthError("weakly self-dual codes require even n (1^n is not self-orthogonal for n = " +
                             std::to_string(n) + ")");
    }
    if (n > 12) {
        throw EnumerationLimitError("weakly self-dual enumeration supports n <= 12, got " + std::to_string(n));
    }
    if (k < 1 || k > n / 2) {
        throw std::invalid_argument("weakly self-dual dimension must satisfy 1 <= k <= n/2, got k = " +
                                    std::to_string(k));
    }
}

std::uint64_t binomial(unsigned n, unsigned j) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= j; ++i) {
        r = r * (n - j + i) / i;
    }
    return r;
}

}  // namespace

LinearCode::LinearCode(const BinMatrix& generator)
    : n_(generator.cols()),
      generator_(rref(generator)),
      parity_check_(dual(generator_)),
      min_distance_(enumerate_min_distance(generator_)) {}

LinearCode LinearCode::zero(unsigned n) {
    return LinearCode(BinMatrix(n));
}

bool LinearCode::contains(const BitWord& v) const {
    return syndrome(parity_check_, v).is_zero();
}

LinearCode hamming_7_4() {
    return LinearCode(BinMatrix::from_strings({"1000101", "0100111", "0010110", "0001011"}));
}

std::optional<unsigned> min_distance(const LinearCode& code) {
    return code.min_distance();
}

std::optional<BitWord> lemma1_solve(const LinearCode& code, const BitWord& support, const BitWord& pattern) {
    return lemma1_solve(code.generator(), support, pattern);
}

CodeTower make_tower(const LinearCode& c2, const LinearCode& c1) {
    if (c2.n() != c1.n()) {
        throw std::invalid_argument("make_tower: codes have different lengths " + std::to_string(c2.n()) + " and " +
                                    std::to_string(c1.n()));
    }
    if (c2.k() >= c1.k()) {
        throw std::invalid_argument("make_tower: dimension ordering violated, dim C2 = " + std::to_string(c2.k()) +
                                    " must be below dim C1 = " + std::to_string(c1.k()));
    }
    for (const auto& row : c2.generator().row_words()) {
        if (!c1.contains(row)) {
            throw std::invalid_argument("make_tower: C2 is not contained in C1 (row " + row.str() + ")");
        }
    }
    // C2^perp is generated by the parity check of C2; C1^perp by that of C1.
    const BinMatrix c1_perp = c1.parity_check();
    std::vector<BitWord> candidates = row_space(c2.parity_check());
    std::sort(candidates.begin(), candidates.end(), weight_lex_less);
    std::set<std::uint64_t> seen;
    std::vector<BitWord> reps;
    for (const auto& w : candidates) {
        if (seen.insert(reduce(w, c1_perp).bits()).second) {
            reps.push_back(w);
        }
    }
    const std::size_t expected = std::size_t{1} << (c1.k() - c2.k());
    if (reps.size() != expected) {
        throw std::logic_error("make_tower: found " + std::to_string(reps.size()) + " cosets, expected " +
                               std::to_string(expected));
    }
    return CodeTower{c2, c1, std::move(reps)};
}

bool is_weakly_self_dual(const LinearCode& code) {
    if (!code.contains(BitWord::ones(code.n()))) {
        return false;
    }
    const auto& rows = code.generator().row_words();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i; j < rows.size(); ++j) {
            if (rows[i].dot(rows[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<LinearCode> enumerate_weakly_self_dual(unsigned n, unsigned k) {
    check_wsd_params(n, k);
    std::vector<CanonicalKey> level{{low_mask(n)}};
    for (unsigned dim = 1; dim < k; ++dim) {
        std::vector<std::vector<CanonicalKey>> grown(level.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t c = 0; c < level.size(); ++c) {
            const BinMatrix code = matrix_of(n, level[c]);
            std::set<std::uint64_t> extensions;
            for (const auto& v : row_space(dual(code))) {
                const BitWord r = reduce(v, code);
                if (!r.is_zero()) {
                    extensions.insert(r.bits());
                }
            }
            for (auto bits : extensions) {
                BinMatrix bigger = code;
                bigger.append_row(BitWord(n, bits));
                grown[c].push_back(key_of(rref(bigger)));
            }
        }
        std::set<CanonicalKey> next;
        for (auto& g : grown) {
            next.insert(g.begin(), g.end());
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end());
    std::vector<LinearCode> out;
    out.reserve(level.size());
    for (const auto& key : level) {
        out.emplace_back(matrix_of(n, key));
    }
    return out;
}

std::uint64_t sigma_count(unsigned n, unsigned k, const LinearCode& seed) {
    if (seed.n() != n) {
        throw std::invalid_argument("sigma_count: seed length does not match n");
    }
    if (!is_weakly_self_dual(seed)) {
        throw std::invalid_argument("sigma_count: seed code is not weakly self-dual");
    }
    if (seed.k() > k) {
        throw std::invalid_argument("sigma_count: seed dimension exceeds k");
    }
    std::uint64_t count = 0;
    for (const auto& code : enumerate_weakly_self_dual(n, k)) {
        bool contains_all = true;
        for (const auto& row : seed.generator().row_words()) {
            contains_all = contains_all && code.contains(row);
        }
        count += contains_all;
    }
    return count;
}

double gv_classical_rate(double delta) {
    if (!(delta >= 0.0 && delta <= 0.5)) {
        throw std::domain_error("gv_classical_rate: delta must lie in [0, 1/2]");
    }
    return 1.0 - bounds::h2(delta);
}

double gv_quantum_rate(double delta) {
    if (!(delta >= 0.0 && delta <= 0.5)) {
        throw std::domain_error("gv_quantum_rate: delta must lie in [0, 1/2]");
    }
    return std::max(0.0, 1.0 - 2.0 * bounds::h2(delta));
}

namespace {

/// W(v) for every even-weight v outside {0, 1^n}, keyed by v.
std::map<std::uint64_t, std::uint64_t> dual_membership_counts(unsigned n, const std::vector<LinearCode>& codes) {
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t all = low_mask(n);
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        if (v != all && std::popcount(v) % 2 == 0) {
            counts[v] = 0;
        }
    }
    for (const auto& code : codes) {
        for (const auto& v : row_space(code.parity_check())) {
            auto it = counts.find(v.bits());
            if (it != counts.end()) {
                ++it->second;
            }
        }
    }
    return counts;
}

}  // namespace

GreedyCheck greedy_existence_check(unsigned n, unsigned k, unsigned d) {
    if (d < 1 || d > n) {
        throw std::invalid_argument("greedy_existence_check: need 1 <= d <= n");
    }
    const auto codes = enumerate_weakly_self_dual(n, k);
    GreedyCheck result{};
    result.rhs = codes.size();
    for (const auto& [v, count] : dual_membership_counts(n, codes)) {
        result.w = std::max(result.w, count);
    }
    for (unsigned j = 0; j < d; j += 2) {
        result.vectors_below_d += binomial(n, j);
    }
    result.lhs = result.w * result.vectors_below_d;
    result.inequality_holds = result.lhs < result.rhs;
    for (const auto& code : codes) {
        const auto dd = code.dual_code().min_distance();
        if (dd && *dd >= d) {
            result.witness = code;
            result.witness_dual_distance = dd;
            break;
        }
    }
    if (result.inequality_holds && !result.witness) {
        throw std::logic_error("greedy_existence_check: counting inequality holds but no witness was found");
    }
    return result;
}

DualPairCount count_dual_pairs(unsigned n, unsigned k) {
    const auto codes = enumerate_weakly_self_dual(n, k);
    DualPairCount result{};
    result.codes = codes.size();
    for (const auto& code : codes) {
        // C^perp minus the two vectors 0 and 1^n.
        result.pairs_by_code += (std::uint64_t{1} << code.parity_check().rows()) - 2;
    }
    const auto counts = dual_membership_counts(n, codes);
    result.w_min = counts.empty() ? 0 : ~std::uint64_t{0};
    for (const auto& [v, count] : counts) {
        result.pairs_by_vector += count;
        result.w_min = std::min(result.w_min, count);
        result.w_max = std::max(result.w_max, count);
    }
    return result;
}

std::string format_code_list(const std::vector<LinearCode>& codes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i > 0) {
            out << '\n';
        }
        out << format_matrix(codes[i].generator());
    }
    return out.str();
}

}  // namespace cssqec
