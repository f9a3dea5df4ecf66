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

#include <cstdint>

namespace bitnic {

// Number of set bits in the low `bits` of n, computed with the
// mask/shift/add reduction tree: log2(bits) levels, level i adding
// neighbouring 2^i-bit fields under the alternating mask
// 0^(2^i) 1^(2^i) repeated. This mirrors what the pipeline lowering emits,
// so it deliberately avoids the hardware popcount instruction.
//
// bits must be 8, 16, 32 or 64; anything else raises ConfigError.
uint32_t popcount_word(uint64_t n, unsigned bits);

// Reduction masks for width `bits`, level i in [0, log2(bits)). Shared with
// the pipeline lowering, which materializes the same constants per level.
uint64_t popcount_mask(unsigned bits, unsigned level);

// log2(bits) for the supported widths.
unsigned popcount_levels(unsigned bits);

}  // namespace bitnic
