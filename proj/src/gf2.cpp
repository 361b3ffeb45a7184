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

#include "cssqec/gf2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cssqec {

BinMatrix::BinMatrix(unsigned cols, std::vector<BitWord> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.length() != cols_) {
            throw std::invalid_argument("BinMatrix row length " + std::to_string(r.length()) +
                                        " does not match column count " + std::to_string(cols_));
        }
    }
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitWord> words;
    unsigned cols = 0;
    for (auto r : rows) {
        words.push_back(BitWord::from_string(r));
        cols = words.back().length();
    }
    return BinMatrix(cols, std::move(words));
}

BinMatrix BinMatrix::identity(unsigned size) {
    std::vector<BitWord> words;
    for (unsigned i = 0; i < size; ++i) {
        words.push_back(BitWord::unit(size, i));
    }
    return BinMatrix(size, std::move(words));
}

void BinMatrix::append_row(const BitWord& row) {
    if (row.length() != cols_) {
        throw std::invalid_argument("append_row: length mismatch");
    }
    rows_.push_back(row);
}

BinMatrix rref(const BinMatrix& m) {
    std::vector<std::uint64_t> rows;
    rows.reserve(m.rows());
    for (const auto& r : m.row_words()) {
        rows.push_back(r.bits());
    }
    std::size_t pivot_row = 0;
    for (unsigned col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        const std::uint64_t mask = std::uint64_t{1} << col;
        std::size_t found = pivot_row;
        while (found < rows.size() && !(rows[found] & mask)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != pivot_row && (rows[i] & mask)) {
                rows[i] ^= rows[pivot_row];
            }
        }
        ++pivot_row;
    }
    std::vector<BitWord> out;
    for (std::size_t i = 0; i < pivot_row; ++i) {
        out.emplace_back(m.cols(), rows[i]);
    }
    return BinMatrix(m.cols(), std::move(out));
}

std::vector<unsigned> pivot_columns(const BinMatrix& reduced) {
    std::vector<unsigned> pivots;
    for (const auto& r : reduced.row_words()) {
        if (r.is_zero()) {
            throw std::invalid_argument("pivot_columns: zero row in reduced matrix");
        }
        pivots.push_back(static_cast<unsigned>(std::countr_zero(r.bits())));
    }
    return pivots;
}

std::size_t rank(const BinMatrix& m) {
    return rref(m).rows();
}

std::vector<BitWord> row_space(const BinMatrix& m) {
    if (m.cols() > kRowSpaceEnumerationLimit) {
        throw std::length_error("row_space: " + std::to_string(m.cols()) + " columns exceeds enumeration limit " +
                                std::to_string(kRowSpaceEnumerationLimit));
    }
    const BinMatrix basis = rref(m);
    const std::size_t count = std::size_t{1} << basis.rows();
    std::vector<BitWord> out;
    out.reserve(count);
    for (std::size_t coeffs = 0; coeffs < count; ++coeffs) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if ((coeffs >> i) & 1) {
                v ^= basis.row(i).bits();
            }
        }
        out.emplace_back(m.cols(), v);
    }
    return out;
}

BinMatrix dual(const BinMatrix& m) {
    const BinMatrix reduced = rref(m);
    const auto pivots = pivot_columns(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    BinMatrix out(m.cols());
    for (unsigned free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::uint64_t v = std::uint64_t{1} << free;
        for (std::size_t r = 0; r < reduced.rows(); ++r) {
            if (reduced.row(r).get(free)) {
                v |= std::uint64_t{1} << pivots[r];
            }
        }
        out.append_row(BitWord(m.cols(), v));
    }
    return rref(out);
}

BitWord syndrome(const BinMatrix& parity_check, const BitWord& v) {
    if (parity_check.cols() != v.length()) {
        throw std::invalid_argument("syndrome: parity check has " + std::to_string(parity_check.cols()) +
                                    " columns but word has length " + std::to_string(v.length()));
    }
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < parity_check.rows(); ++i) {
        if (parity_check.row(i).dot(v)) {
            s |= std::uint64_t{1} << i;
        }
    }
    return BitWord(static_cast<unsigned>(parity_check.rows()), s);
}

BitWord reduce(const BitWord& v, const BinMatrix& reduced) {
    BitWord r = v;
    for (const auto& row : reduced.row_words()) {
        const unsigned pivot = static_cast<unsigned>(std::countr_zero(row.bits()));
        if (r.get(pivot)) {
            r ^= row;
        }
    }
    return r;
}

bool in_row_space(const BitWord& v, const BinMatrix& m) {
    return reduce(v, rref(m)).is_zero();
}

bool same_row_space(const BinMatrix& a, const BinMatrix& b) {
    return a.cols() == b.cols() && rref(a) == rref(b);
}

std::optional<BitWord> lemma1_solve(const BinMatrix& generator, const BitWord& support, const BitWord& pattern) {
    if (support.length() != generator.cols() || pattern.length() != generator.cols()) {
        throw std::invalid_argument("lemma1_solve: length mismatch");
    }
    if (!pattern.precedes(support)) {
        throw std::invalid_argument("lemma1_solve: pattern " + pattern.str() + " is not within support " +
                                    support.str());
    }
    // Eliminate on the projected rows while carrying the full rows along.
    struct Pair {
        std::uint64_t projected;
        std::uint64_t full;
    };
    std::vector<Pair> rows;
    for (const auto& r : generator.row_words()) {
        rows.push_back({r.bits() & support.bits(), r.bits()});
    }
    std::vector<std::pair<std::uint64_t, Pair>> pivots;  // pivot mask, row
    std::size_t next = 0;
    for (unsigned col = 0; col < generator.cols(); ++col) {
        const std::uint64_t mask = std::uint64_t{1} << col;
        if (!(support.bits() & mask)) {
            continue;
        }
        std::size_t found = next;
        while (found < rows.size() && !(rows[found].projected & mask)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != next && (rows[i].projected & mask)) {
                rows[i].projected ^= rows[next].projected;
                rows[i].full ^= rows[next].full;
            }
        }
        pivots.emplace_back(mask, rows[next]);
        ++next;
    }
    std::uint64_t residual = pattern.bits();
    std::uint64_t solution = 0;
    for (const auto& [mask, row] : pivots) {
        if (residual & mask) {
            residual ^= row.projected;
            solution ^= row.full;
        }
    }
    if (residual != 0) {
        return std::nullopt;
    }
    return BitWord(generator.cols(), solution);
}

BinMatrix parse_matrix(std::string_view text) {
    std::vector<BitWord> rows;
    std::optional<unsigned> cols;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        BitWord row;
        try {
            row = BitWord::from_string(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": " + e.what());
        }
        if (cols && *cols != row.length()) {
            throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": ragged row of length " +
                                        std::to_string(row.length()) + ", expected " + std::to_string(*cols));
        }
        cols = row.length();
        rows.push_back(row);
        if (end == text.size()) {
            break;
        }
    }
    return BinMatrix(cols.value_or(0), std::move(rows));
}

std::string format_matrix(const BinMatrix& m) {
    std::ostringstream out;
    for (const auto& r : m.row_words()) {
        out << r.str() << '\n';
    }
    return out.str();
}

}  // namespace cssqec
