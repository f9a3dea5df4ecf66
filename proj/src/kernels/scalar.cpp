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

#include <cstddef>
#include <cstdint>

#include "bitnic/popcount.hpp"

namespace bitnic::kernels {

namespace {

inline uint64_t tail_mask(uint32_t valid_bits) {
  const unsigned rem = valid_bits & 63;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

}  // namespace

// Reference variant: 32-bit blocks through the mask/shift/add popcount,
// matching the per-word structure of the register-level executor.
void match_counts_scalar(const uint64_t* w, size_t rows, const uint64_t* x, size_t row_words64,
                         uint32_t valid_bits, uint32_t* counts) {
  for (size_t r = 0; r < rows; ++r) {
    const uint64_t* row = w + r * row_words64;
    uint32_t acc = 0;
    uint32_t bits_left = valid_bits;
    for (size_t j = 0; j < row_words64 && bits_left > 0; ++j) {
      const uint64_t match = ~(row[j] ^ x[j]);
      for (unsigned half = 0; half < 2 && bits_left > 0; ++half) {
        uint32_t sub = static_cast<uint32_t>(match >> (32 * half));
        if (bits_left < 32) sub &= (uint32_t{1} << bits_left) - 1;
        acc += popcount_word(sub, 32);
        bits_left -= bits_left < 32 ? bits_left : 32;
      }
    }
    counts[r] = acc;
  }
}

// 64-bit SWAR variant; same reduction tree, wider words.
void match_counts_swar64(const uint64_t* w, size_t rows, const uint64_t* x, size_t row_words64,
                         uint32_t valid_bits, uint32_t* counts) {
  if (row_words64 == 0) return;
  const uint64_t last_mask = tail_mask(valid_bits);
  for (size_t r = 0; r < rows; ++r) {
    const uint64_t* row = w + r * row_words64;
    uint32_t acc = 0;
    for (size_t j = 0; j + 1 < row_words64; ++j) acc += popcount_word(~(row[j] ^ x[j]), 64);
    acc += popcount_word(~(row[row_words64 - 1] ^ x[row_words64 - 1]) & last_mask, 64);
    counts[r] = acc;
  }
}

// Hardware popcount variant.
void match_counts_popcnt(const uint64_t* w, size_t rows, const uint64_t* x, size_t row_words64,
                         uint32_t valid_bits, uint32_t* counts) {
  if (row_words64 == 0) return;
  const uint64_t last_mask = tail_mask(valid_bits);
  for (size_t r = 0; r < rows; ++r) {
    const uint64_t* row = w + r * row_words64;
    uint32_t acc = 0;
    for (size_t j = 0; j + 1 < row_words64; ++j)
      acc += static_cast<uint32_t>(__builtin_popcountll(~(row[j] ^ x[j])));
    acc += static_cast<uint32_t>(
        __builtin_popcountll(~(row[row_words64 - 1] ^ x[row_words64 - 1]) & last_mask));
    counts[r] = acc;
  }
}

}  // namespace bitnic::kernels
