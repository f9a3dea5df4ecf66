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

#include "bitnic/bitvector.hpp"

#include "bitnic/popcount.hpp"

namespace bitnic {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

uint32_t BitVector::count_ones() const {
  uint32_t total = 0;
  for (uint64_t w : words_) total += popcount_word(w, 64);
  return total;
}

BitVector BitVector::flipped() const {
  BitVector out(length_bits_);
  for (size_t j = 0; j < words_.size(); ++j) out.words_[j] = ~words_[j];
  out.mask_tail();
  return out;
}

std::string BitVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const size_t bytes = (size_t{length_bits_} + 7) / 8;
  std::string out;
  out.reserve(bytes * 2);
  for (size_t k = 0; k < bytes; ++k) {
    const uint8_t b = static_cast<uint8_t>(words_[k >> 3] >> ((k & 7) * 8));
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

BitVector BitVector::from_hex(std::string_view hex, uint32_t length_bits) {
  BitVector v(length_bits);
  const size_t bytes = (size_t{length_bits} + 7) / 8;
  if (hex.size() != bytes * 2)
    throw FormatError("BitVector: expected " + std::to_string(bytes * 2) + " hex digits, got " +
                      std::to_string(hex.size()));
  for (size_t k = 0; k < bytes; ++k) {
    const int hi = hex_digit(hex[2 * k]);
    const int lo = hex_digit(hex[2 * k + 1]);
    if (hi < 0 || lo < 0) throw FormatError("BitVector: invalid hex digit");
    v.words_[k >> 3] |= uint64_t{static_cast<uint8_t>((hi << 4) | lo)} << ((k & 7) * 8);
  }
  // Reject payload bits past the declared width instead of silently dropping.
  BitVector masked = v;
  masked.mask_tail();
  if (masked.words_ != v.words_) throw FormatError("BitVector: set bits past declared width");
  return v;
}

}  // namespace bitnic
