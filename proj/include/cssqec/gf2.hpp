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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cssqec/bitword.hpp"

namespace cssqec {

/// Dense binary matrix stored as a list of packed rows.
class BinMatrix {
  public:
    BinMatrix() = default;
    /// `cols x 0` matrix.
    explicit BinMatrix(unsigned cols) : cols_(cols) {}
    BinMatrix(unsigned cols, std::vector<BitWord> rows);
    static BinMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BinMatrix identity(unsigned size);

    std::size_t rows() const noexcept { return rows_.size(); }
    unsigned cols() const noexcept { return cols_; }
    const BitWord& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<BitWord>& row_words() const noexcept { return rows_; }

    void append_row(const BitWord& row);

    bool operator==(const BinMatrix&) const = default;

  private:
    unsigned cols_ = 0;
    std::vector<BitWord> rows_;
};

/// Largest column count for which whole row spaces are enumerated.
inline constexpr unsigned kRowSpaceEnumerationLimit = 24;

/// Reduced row echelon form with zero rows dropped. Pivots are chosen at the
/// lowest column index first, so the result is a canonical basis of the
/// row space.
BinMatrix rref(const BinMatrix& m);

/// Column index of each row's pivot in an rref matrix.
std::vector<unsigned> pivot_columns(const BinMatrix& reduced);

std::size_t rank(const BinMatrix& m);

/// All 2^rank vectors of the row space, in the order of the coefficient
/// vector taken as an integer over the rref basis.
std::vector<BitWord> row_space(const BinMatrix& m);

/// Generator (in rref) of the orthogonal complement of the row space.
BinMatrix dual(const BinMatrix& m);

/// Parities H v^T as a word of length H.rows().
BitWord syndrome(const BinMatrix& parity_check, const BitWord& v);

/// Reduce `v` modulo the row space of an rref matrix. Zero iff v is in it.
BitWord reduce(const BitWord& v, const BinMatrix& reduced);

bool in_row_space(const BitWord& v, const BinMatrix& m);

bool same_row_space(const BinMatrix& a, const BinMatrix& b);

/// A vector v_e in the row space of `generator` with v_e|_E = e, found by
/// elimination on the columns of supp(E) only. Always exists when
/// wt(E) < d(C^perp); may be nullopt otherwise.
std::optional<BitWord> lemma1_solve(const BinMatrix& generator, const BitWord& support, const BitWord& pattern);

/// Text format: one row per line of '0'/'1', '#' lines and blank lines ignored.
BinMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinMatrix& m);

}  // namespace cssqec
