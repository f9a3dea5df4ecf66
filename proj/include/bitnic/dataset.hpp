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

#include "bitnic/bitvector.hpp"

namespace bitnic {

// Labeled rows of 16-bit integer features.
struct Dataset {
  std::vector<std::vector<uint16_t>> rows;
  std::vector<uint32_t> labels;
  uint32_t feature_count = 0;
  uint32_t class_count = 0;

  size_t size() const { return rows.size(); }
};

// CSV with a header line, integer feature columns and a final `label`
// column. Values must fit 16 bits; labels are dense class indices.
Dataset load_csv_dataset(const std::filesystem::path& path);

// Keeps only the listed feature columns, in the given order.
Dataset select_features(const Dataset& ds, std::span<const uint32_t> indices);

// One feature index per line; `#` starts a comment.
std::vector<uint32_t> load_feature_indices(const std::filesystem::path& path);

// Concatenates the features of one row MSB-first into a packed bit string:
// bit f*bits_per_feature + b is bit (bits_per_feature-1-b) of feature f.
BitVector encode_features(std::span<const uint16_t> row, unsigned bits_per_feature = 16);

// Feature indices ordered by decreasing chi-squared statistic between the
// binned feature (8 equal-width bins over the observed range) and the
// label; ties resolve toward the lower index. Returns the top k.
std::vector<uint32_t> chi2_rank(const Dataset& ds, uint32_t k);

}  // namespace bitnic
