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

#include "bitnic/popcount.hpp"

#include "bitnic/error.hpp"

namespace bitnic {

namespace {

// Level i mask: 2^i zeros followed by 2^i ones, repeated across 64 bits.
constexpr uint64_t kMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

unsigned popcount_levels(unsigned bits) {
  switch (bits) {
    case 8:
      return 3;
    case 16:
      return 4;
    case 32:
      return 5;
    case 64:
      return 6;
    default:
      throw ConfigError("popcount: word width must be 8, 16, 32 or 64");
  }
}

uint64_t popcount_mask(unsigned bits, unsigned level) {
  if (level >= popcount_levels(bits)) throw ConfigError("popcount: mask level out of range");
  const uint64_t full = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
  return kMasks[level] & full;
}

uint32_t popcount_word(uint64_t n, unsigned bits) {
  const unsigned levels = popcount_levels(bits);
  if (bits < 64) n &= (uint64_t{1} << bits) - 1;
  uint64_t c = n;
  for (unsigned i = 0; i < levels; ++i) {
    c = (c & kMasks[i]) + ((c >> (1u << i)) & kMasks[i]);
  }
  return static_cast<uint32_t>(c);
}

}  // namespace bitnic
