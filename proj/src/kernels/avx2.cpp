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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace bitnic::kernels {

namespace {

// Nibble-LUT popcount of a 256-bit lane, reduced to one u64 via SAD.
inline uint64_t popcount256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                       1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  const __m256i sad = _mm256_sad_epu8(cnt, _mm256_setzero_si256());
  const __m128i lo128 = _mm256_castsi256_si128(sad);
  const __m128i hi128 = _mm256_extracti128_si256(sad, 1);
  const __m128i sum = _mm_add_epi64(lo128, hi128);
  return static_cast<uint64_t>(_mm_cvtsi128_si64(sum)) +
         static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(sum, 8)));
}

}  // namespace

void match_counts_avx2(const uint64_t* w, size_t rows, const uint64_t* x, size_t row_words64,
                       uint32_t valid_bits, uint32_t* counts) {
  if (row_words64 == 0) return;
  const unsigned rem = valid_bits & 63;
  const uint64_t last_mask = rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
  const size_t vec_words = (row_words64 - 1) & ~size_t{3};
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (size_t r = 0; r < rows; ++r) {
    const uint64_t* row = w + r * row_words64;
    uint64_t acc = 0;
    size_t j = 0;
    for (; j < vec_words; j += 4) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
      const __m256i match = _mm256_xor_si256(_mm256_xor_si256(a, b), ones);
      acc += popcount256(match);
    }
    for (; j + 1 < row_words64; ++j)
      acc += static_cast<uint64_t>(__builtin_popcountll(~(row[j] ^ x[j])));
    acc += static_cast<uint64_t>(
        __builtin_popcountll(~(row[row_words64 - 1] ^ x[row_words64 - 1]) & last_mask));
    counts[r] = static_cast<uint32_t>(acc);
  }
}

}  // namespace bitnic::kernels

#endif  // x86_64
