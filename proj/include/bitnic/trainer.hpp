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
#include <utility>
#include <vector>

#include "bitnic/dataset.hpp"
#include "bitnic/model.hpp"

namespace bitnic::train {

struct TrainConfig {
  enum class Mode {
    binarized,   // sign weights/activations in the forward pass, STE backward
    continuous,  // plain tanh MLP, used as the full-precision baseline
  };

  uint32_t epochs = 50;
  float learning_rate = 1e-3f;
  float dropout = 0.25f;  // on hidden activations, training only
  uint32_t batch_size = 32;
  uint64_t seed = 0;
  unsigned bits_per_feature = 16;
  Mode mode = Mode::binarized;
  // Loss is the squared hinge on +/-1 targets.
  float adam_beta1 = 0.9f;
  float adam_beta2 = 0.999f;
  float adam_eps = 1e-8f;

  void validate() const;
};

// MLP with real-valued shadow weights. In binarized mode the forward pass
// uses sign(weight) and sign activations, so the network computes exactly
// what its exported BnnModel computes; shadow weights stay in [-1, 1].
// Pre-activations are scaled by 1/sqrt(fan_in) to keep them in a range
// where the straight-through estimator window |z| <= 1 is meaningful.
class FloatMlp {
 public:
  FloatMlp(std::vector<uint32_t> dims, TrainConfig::Mode mode);

  const std::vector<uint32_t>& dims() const { return dims_; }
  TrainConfig::Mode mode() const { return mode_; }
  size_t layer_count() const { return dims_.size() - 1; }

  // Row-major [out][in] shadow weights of one layer.
  std::vector<float>& weights(size_t layer) { return w_[layer]; }
  const std::vector<float>& weights(size_t layer) const { return w_[layer]; }

  // Output-head logits in evaluation mode (no dropout).
  std::vector<float> logits(const BitVector& x) const;

  // argmax of logits; ties toward the lowest index.
  uint32_t predict(const BitVector& x) const;

 private:
  std::vector<uint32_t> dims_;
  TrainConfig::Mode mode_;
  std::vector<std::vector<float>> w_;
};

// Trains with Adam, squared hinge loss, dropout on hidden outputs and, in
// binarized mode, sign forward + straight-through backward with shadow
// weights clipped to [-1, 1] after every step. Deterministic per seed.
// Throws if the loss stops being finite.
FloatMlp train_mlp(const Dataset& ds, const std::vector<uint32_t>& layer_dims,
                   const TrainConfig& cfg);

// train_mlp restricted to binarized mode.
FloatMlp train_binarized(const Dataset& ds, const std::vector<uint32_t>& layer_dims,
                         const TrainConfig& cfg);

// Per-epoch mean training loss of the last train_mlp call on this thread.
// Exposed for convergence checks.
const std::vector<double>& last_epoch_losses();

// Steps each shadow weight: bit 0 if negative, bit 1 otherwise.
BnnModel binarize(const FloatMlp& mlp, unsigned block_size = 32);

// Fraction of rows whose predicted class equals the label.
double evaluate(const BnnModel& model, const Dataset& ds, unsigned bits_per_feature = 16);
double evaluate(const FloatMlp& mlp, const Dataset& ds, unsigned bits_per_feature = 16);

// Deterministic shuffled split; second element holds test_fraction of rows.
std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double test_fraction, uint64_t seed);

}  // namespace bitnic::train
