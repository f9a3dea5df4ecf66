/* Copyright 2026-present the bitnic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bitnic/error.hpp"

namespace bitnic {

// Fixed-width packed bit string. Logical bit i lives at bit (i % 64) of
// backing word (i / 64); equivalently, byte k of the packed stream holds
// bits [8k, 8k+8) LSB-first. Trailing bits past size() are always zero,
// so word-level operations over the backing never see stale padding.
//
// The same backing can be read as 8/16/32/64-bit words via word(): bit i
// of block-sized word j is logical bit j*block_size + i, words in
// little-endian order. The packed byte stream is identical for every
// block size.
class BitVector {
 public:
  // Zero-length sentinel; not a valid model input/output.
  BitVector() = default;

  // All-zero vector of the given positive width.
  explicit BitVector(uint32_t length_bits)
      : length_bits_(length_bits), words_((size_t{length_bits} + 63) / 64, 0) {
    if (length_bits == 0) throw DimensionError("BitVector: length must be positive");
  }

  uint32_t size() const { return length_bits_; }
  bool empty() const { return length_bits_ == 0; }

  bool get(uint32_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(uint32_t i, bool value = true) {
    check_index(i);
    const uint64_t bit = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }

  // Number of block-sized words covering the vector.
  size_t word_count(unsigned block_size) const {
    check_block(block_size);
    return (size_t{length_bits_} + block_size - 1) / block_size;
  }

  // Block-sized word j, zero-padded past size().
  uint64_t word(unsigned block_size, size_t j) const {
    check_block(block_size);
    if (j >= word_count(block_size)) throw DimensionError("BitVector: word index out of range");
    if (block_size == 64) return words_[j];
    const size_t bit_off = j * block_size;
    const uint64_t mask = (uint64_t{1} << block_size) - 1;
    return (words_[bit_off >> 6] >> (bit_off & 63)) & mask;
  }

  const uint64_t* data() const { return words_.data(); }
  uint64_t* data() { return words_.data(); }
  size_t backing_words() const { return words_.size(); }

  uint32_t count_ones() const;

  // Bitwise complement over the valid bits (padding stays zero).
  BitVector flipped() const;

  // Packed byte stream as lowercase hex, byte 0 first.
  std::string to_hex() const;

  // Parses a hex string of exactly ceil(length_bits/8) bytes; bits past
  // length_bits in the final byte must be zero.
  static BitVector from_hex(std::string_view hex, uint32_t length_bits);

  // Uniformly random bits from the given engine (two 32-bit draws per word).
  template <typename Rng>
  static BitVector random(uint32_t length_bits, Rng& rng) {
    BitVector v(length_bits);
    for (auto& w : v.words_) {
      const uint64_t hi = rng() & 0xffffffffu;
      const uint64_t lo = rng() & 0xffffffffu;
      w = (hi << 32) | lo;
    }
    v.mask_tail();
    return v;
  }

  bool operator==(const BitVector&) const = default;

 private:
  void check_index(uint32_t i) const {
    if (i >= length_bits_) throw DimensionError("BitVector: bit index out of range");
  }
  static void check_block(unsigned block_size) {
    if (block_size != 8 && block_size != 16 && block_size != 32 && block_size != 64)
      throw ConfigError("BitVector: block size must be 8, 16, 32 or 64");
  }
  void mask_tail() {
    const unsigned rem = length_bits_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
  }

  uint32_t length_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace bitnic
