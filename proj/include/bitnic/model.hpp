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
#include <vector>

#include "bitnic/bitvector.hpp"

namespace bitnic {

// One fully connected binary layer: output_neurons weight rows of
// input_bits each. A neuron fires (bit 1) when the XNOR match count against
// the input reaches sign_threshold; ties count as firing.
class BinaryLayer {
 public:
  BinaryLayer(uint32_t input_bits, uint32_t output_neurons);

  uint32_t input_bits() const { return input_bits_; }
  uint32_t output_neurons() const { return output_neurons_; }

  // ceil(input_bits / 2): the match count at which the +/-1 dot product
  // becomes non-negative. input_bits/2 exactly when input_bits is even.
  uint32_t sign_threshold() const { return sign_threshold_; }

  void set_row(uint32_t neuron, const BitVector& weights);
  BitVector row(uint32_t neuron) const;

  // Packed row-major weights for the match-count kernels; rows padded to a
  // 64-bit boundary, padding bits zero.
  const uint64_t* packed() const { return rows_.data(); }
  size_t row_words() const { return row_words_; }

 private:
  uint32_t input_bits_;
  uint32_t output_neurons_;
  uint32_t sign_threshold_;
  size_t row_words_;
  std::vector<uint64_t> rows_;
};

// A layered binarized MLP. Immutable after construction; concurrent
// read-only evaluation is safe.
class BnnModel {
 public:
  BnnModel(unsigned block_size, std::vector<BinaryLayer> layers);

  unsigned block_size() const { return block_size_; }
  const std::vector<BinaryLayer>& layers() const { return layers_; }
  uint32_t input_bits() const { return layers_.front().input_bits(); }
  uint32_t output_bits() const { return layers_.back().output_neurons(); }

  uint64_t memory_bytes() const;

 private:
  unsigned block_size_;
  std::vector<BinaryLayer> layers_;
};

// Per-neuron XNOR match counts via the runtime-selected kernel.
std::vector<uint32_t> layer_match_counts(const BinaryLayer& layer, const BitVector& x);

// Reference layer execution: block_size-wide words through the
// mask/shift/add popcount, threshold, pack. The kernel-backed path is
// equivalence-tested against this for every supported block size.
BitVector layer_forward(const BinaryLayer& layer, const BitVector& x, unsigned block_size);

// Sequential layer application; result width = last layer's neuron count.
BitVector model_forward(const BnnModel& model, const BitVector& x);

// Index of the output neuron with the largest raw match count (thresholded
// bits can tie at 1); ties break toward the lowest index. Requires a head
// of at least two neurons.
uint32_t classify(const BnnModel& model, const BitVector& x);

// Raw match counts of the output layer after running the hidden layers.
std::vector<uint32_t> output_match_counts(const BnnModel& model, const BitVector& x);

// ceil(sum of input_bits * output_neurons over layers / 8).
uint64_t model_memory_bytes(const BnnModel& model);

}  // namespace bitnic
