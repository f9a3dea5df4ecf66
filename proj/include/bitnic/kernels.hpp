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
#include <span>
#include <string_view>

namespace bitnic::kernels {

// Inner loop of binary layer execution: for each weight row, the number of
// bit positions in [0, valid_bits) where the row agrees with the input
// (popcount of the masked XNOR).
//
// w:     rows * row_words64 backing words, row-major, padding bits zero
// x:     row_words64 backing words, padding bits zero
// counts: one entry per row
//
// Every variant must produce identical counts; the scalar variant is the
// reference the others are equivalence-tested against.
using MatchCountsFn = void (*)(const uint64_t* w, size_t rows, const uint64_t* x,
                               size_t row_words64, uint32_t valid_bits, uint32_t* counts);

struct Kernel {
  const char* name;
  bool (*available)();
  MatchCountsFn match_counts;
};

// All compiled-in variants, preference order first. Entries may be
// unavailable on the running CPU; check available().
std::span<const Kernel> all_kernels();

// The mask/shift/add reference variant; always available.
const Kernel& scalar_kernel();

// Best available variant, resolved once per process. The BITNIC_KERNEL
// environment variable pins a variant by name (ConfigError if unknown or
// unavailable).
const Kernel& active_kernel();

// Lookup by name; nullptr if not compiled in.
const Kernel* find_kernel(std::string_view name);

}  // namespace bitnic::kernels
