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

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cssqec {

/// Fixed-length vector over F2, packed into a single machine word.
///
/// Coordinate i lives in bit i. The textual form writes coordinate 0 first,
/// so "0001011" has coordinates 3, 5 and 6 set.
class BitWord {
  public:
    static constexpr unsigned kMaxLength = 64;

    constexpr BitWord() = default;

    /// Word of `length` coordinates taken from the low bits of `bits`.
    BitWord(unsigned length, std::uint64_t bits);

    static BitWord zeros(unsigned length) { return BitWord(length, 0); }
    static BitWord ones(unsigned length);
    static BitWord unit(unsigned length, unsigned index);
    static BitWord from_string(std::string_view text);

    unsigned length() const noexcept { return length_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool get(unsigned index) const;
    BitWord with(unsigned index, bool value) const;

    unsigned weight() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
    bool is_zero() const noexcept { return bits_ == 0; }

    /// Inner product over F2.
    bool dot(const BitWord& other) const;

    /// supp(*this) is a subset of supp(other).
    bool precedes(const BitWord& other) const;

    BitWord operator^(const BitWord& other) const;
    BitWord operator&(const BitWord& other) const;
    BitWord& operator^=(const BitWord& other);

    std::string str() const;

    bool operator==(const BitWord&) const = default;

  private:
    void check_same_length(const BitWord& other) const;

    unsigned length_ = 0;
    std::uint64_t bits_ = 0;
};

/// Order on coordinates read left to right: the first differing coordinate
/// decides, with 0 < 1. Lengths must match.
bool lex_less(const BitWord& a, const BitWord& b);

/// Minimal weight first, ties broken by `lex_less`.
bool weight_lex_less(const BitWord& a, const BitWord& b);

unsigned weight(const BitWord& v);

/// Hamming distance wt(v + w).
unsigned distance(const BitWord& v, const BitWord& w);

/// Projection v|_E: agrees with v on supp(E), zero elsewhere.
BitWord restrict_to(const BitWord& v, const BitWord& support);

inline std::uint64_t low_mask(unsigned length) {
    return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

}  // namespace cssqec
