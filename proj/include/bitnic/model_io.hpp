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
#include <filesystem>
#include <span>
#include <vector>

#include "bitnic/model.hpp"

namespace bitnic {

// BNN1 model container, all integers little-endian:
//
//   offset size  field
//   0      4     magic "BNN1"
//   4      1     version (1)
//   5      1     block_size
//   6      2     layer_count (u16)
//   8      8*L   per layer: input_bits (u32), output_neurons (u32)
//   ...          per layer, neuron-major weight rows, each row bit-packed
//                into little-endian 32-bit words (bit i of word j = input
//                bit 32*j + i), rows padded to the 32-bit boundary
std::vector<uint8_t> serialize_model(const BnnModel& model);

// Rejects bad magic, unsupported version, truncation, trailing bytes and
// any invariant violation (zero dims, layer chaining, bad block size,
// nonzero padding bits).
BnnModel deserialize_model(std::span<const uint8_t> bytes);

void save_model(const BnnModel& model, const std::filesystem::path& path);
BnnModel load_model(const std::filesystem::path& path);

}  // namespace bitnic
