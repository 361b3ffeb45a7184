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

#include "cssqec/bitword.hpp"

namespace cssqec {

BitWord::BitWord(unsigned length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length > kMaxLength) {
        throw std::invalid_argument("BitWord length " + std::to_string(length) + " exceeds 64");
    }
    if ((bits & ~low_mask(length)) != 0) {
        throw std::invalid_argument("BitWord has bits set beyond its length");
    }
}

BitWord BitWord::ones(unsigned length) {
    return BitWord(length, low_mask(length));
}

BitWord BitWord::unit(unsigned length, unsigned index) {
    if (index >= length) {
        throw std::out_of_range("unit vector index out of range");
    }
    return BitWord(length, std::uint64_t{1} << index);
}

BitWord BitWord::from_string(std::string_view text) {
    if (text.size() > kMaxLength) {
        throw std::invalid_argument("binary word longer than 64 coordinates");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("binary word may only contain '0' and '1': " + std::string(text));
        }
    }
    return BitWord(static_cast<unsigned>(text.size()), bits);
}

bool BitWord::get(unsigned index) const {
    if (index >= length_) {
        throw std::out_of_range("BitWord index out of range");
    }
    return (bits_ >> index) & 1;
}

BitWord BitWord::with(unsigned index, bool value) const {
    if (index >= length_) {
        throw std::out_of_range("BitWord index out of range");
    }
    std::uint64_t mask = std::uint64_t{1} << index;
    return BitWord(length_, value ? (bits_ | mask) : (bits_ & ~mask));
}

void BitWord::check_same_length(const BitWord& other) const {
    if (length_ != other.length_) {
        throw std::invalid_argument("BitWord length mismatch: " + std::to_string(length_) + " vs " +
                                    std::to_string(other.length_));
    }
}

bool BitWord::dot(const BitWord& other) const {
    check_same_length(other);
    return std::popcount(bits_ & other.bits_) & 1;
}

bool BitWord::precedes(const BitWord& other) const {
    check_same_length(other);
    return (bits_ & ~other.bits_) == 0;
}

BitWord BitWord::operator^(const BitWord& other) const {
    check_same_length(other);
    BitWord r;
    r.length_ = length_;
    r.bits_ = bits_ ^ other.bits_;
    return r;
}

BitWord BitWord::operator&(const BitWord& other) const {
    check_same_length(other);
    BitWord r;
    r.length_ = length_;
    r.bits_ = bits_ & other.bits_;
    return r;
}

BitWord& BitWord::operator^=(const BitWord& other) {
    check_same_length(other);
    bits_ ^= other.bits_;
    return *this;
}

std::string BitWord::str() const {
    std::string s(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
        if ((bits_ >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

bool lex_less(const BitWord& a, const BitWord& b) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("lex_less: length mismatch");
    }
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) {
        return false;
    }
    // The lowest differing bit is the leftmost differing coordinate.
    std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits() & lowest) == 0;
}

bool weight_lex_less(const BitWord& a, const BitWord& b) {
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return lex_less(a, b);
}

unsigned weight(const BitWord& v) {
    return v.weight();
}

unsigned distance(const BitWord& v, const BitWord& w) {
    return (v ^ w).weight();
}

BitWord restrict_to(const BitWord& v, const BitWord& support) {
    return v & support;
}

}  // namespace cssqec
