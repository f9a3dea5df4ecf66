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

#include "bitnic/model.hpp"

#include <algorithm>
#include <string>

#include "bitnic/error.hpp"
#include "bitnic/kernels.hpp"
#include "bitnic/popcount.hpp"

namespace bitnic {

BinaryLayer::BinaryLayer(uint32_t input_bits, uint32_t output_neurons)
    : input_bits_(input_bits),
      output_neurons_(output_neurons),
      sign_threshold_((input_bits + 1) / 2),
      row_words_((size_t{input_bits} + 63) / 64),
      rows_(size_t{output_neurons} * row_words_, 0) {
  if (input_bits == 0) throw DimensionError("BinaryLayer: input_bits must be positive");
  if (output_neurons == 0) throw DimensionError("BinaryLayer: output_neurons must be positive");
}

void BinaryLayer::set_row(uint32_t neuron, const BitVector& weights) {
  if (neuron >= output_neurons_) throw DimensionError("BinaryLayer: neuron index out of range");
  if (weights.size() != input_bits_)
    throw DimensionError("BinaryLayer: weight row has " + std::to_string(weights.size()) +
                         " bits, layer expects " + std::to_string(input_bits_));
  for (size_t j = 0; j < row_words_; ++j) rows_[neuron * row_words_ + j] = weights.data()[j];
}

BitVector BinaryLayer::row(uint32_t neuron) const {
  if (neuron >= output_neurons_) throw DimensionError("BinaryLayer: neuron index out of range");
  BitVector out(input_bits_);
  for (size_t j = 0; j < row_words_; ++j) out.data()[j] = rows_[neuron * row_words_ + j];
  return out;
}

BnnModel::BnnModel(unsigned block_size, std::vector<BinaryLayer> layers)
    : block_size_(block_size), layers_(std::move(layers)) {
  if (block_size != 8 && block_size != 16 && block_size != 32 && block_size != 64)
    throw ConfigError("BnnModel: block_size must be 8, 16, 32 or 64");
  if (layers_.empty()) throw ConfigError("BnnModel: model must have at least one layer");
  for (size_t k = 0; k + 1 < layers_.size(); ++k) {
    if (layers_[k].output_neurons() != layers_[k + 1].input_bits())
      throw DimensionError("BnnModel: layer " + std::to_string(k) + " emits " +
                           std::to_string(layers_[k].output_neurons()) + " bits but layer " +
                           std::to_string(k + 1) + " expects " +
                           std::to_string(layers_[k + 1].input_bits()));
  }
}

uint64_t BnnModel::memory_bytes() const {
  uint64_t bits = 0;
  for (const BinaryLayer& l : layers_) bits += uint64_t{l.input_bits()} * l.output_neurons();
  return (bits + 7) / 8;
}

std::vector<uint32_t> layer_match_counts(const BinaryLayer& layer, const BitVector& x) {
  if (x.size() != layer.input_bits())
    throw DimensionError("layer_match_counts: input has " + std::to_string(x.size()) +
                         " bits, layer expects " + std::to_string(layer.input_bits()));
  std::vector<uint32_t> counts(layer.output_neurons());
  kernels::active_kernel().match_counts(layer.packed(), layer.output_neurons(), x.data(),
                                        layer.row_words(), layer.input_bits(), counts.data());
  return counts;
}

namespace {

BitVector pack_output(const std::vector<uint32_t>& counts, uint32_t threshold) {
  BitVector out(static_cast<uint32_t>(counts.size()));
  for (uint32_t n = 0; n < counts.size(); ++n) {
    if (counts[n] >= threshold) out.set(n);
  }
  return out;
}

}  // namespace

BitVector layer_forward(const BinaryLayer& layer, const BitVector& x, unsigned block_size) {
  if (x.size() != layer.input_bits())
    throw DimensionError("layer_forward: input has " + std::to_string(x.size()) +
                         " bits, layer expects " + std::to_string(layer.input_bits()));
  const size_t words = x.word_count(block_size);
  std::vector<uint32_t> counts(layer.output_neurons());
  for (uint32_t neur = 0; neur < layer.output_neurons(); ++neur) {
    const BitVector w = layer.row(neur);
    uint32_t tmp = 0;
    for (size_t j = 0; j < words; ++j) {
      // Mask the partial final word so padding never counts as a match.
      uint64_t match = ~(w.word(block_size, j) ^ x.word(block_size, j));
      const uint32_t valid =
          static_cast<uint32_t>(std::min<size_t>(block_size, x.size() - j * block_size));
      if (valid < 64) match &= (uint64_t{1} << valid) - 1;
      tmp += popcount_word(match, block_size);
    }
    counts[neur] = tmp;
  }
  return pack_output(counts, layer.sign_threshold());
}

BitVector model_forward(const BnnModel& model, const BitVector& x) {
  BitVector cur = x;
  for (const BinaryLayer& layer : model.layers()) {
    cur = pack_output(layer_match_counts(layer, cur), layer.sign_threshold());
  }
  return cur;
}

std::vector<uint32_t> output_match_counts(const BnnModel& model, const BitVector& x) {
  BitVector cur = x;
  const size_t last = model.layers().size() - 1;
  for (size_t k = 0; k < last; ++k) {
    const BinaryLayer& layer = model.layers()[k];
    cur = pack_output(layer_match_counts(layer, cur), layer.sign_threshold());
  }
  return layer_match_counts(model.layers()[last], cur);
}

uint32_t classify(const BnnModel& model, const BitVector& x) {
  if (model.output_bits() < 2)
    throw DimensionError("classify: output layer needs at least 2 neurons");
  const std::vector<uint32_t> counts = output_match_counts(model, x);
  uint32_t best = 0;
  for (uint32_t n = 1; n < counts.size(); ++n) {
    if (counts[n] > counts[best]) best = n;
  }
  return best;
}

uint64_t model_memory_bytes(const BnnModel& model) { return model.memory_bytes(); }

}  // namespace bitnic
