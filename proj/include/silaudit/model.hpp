// Copyright 2026 The silaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SILAUDIT_MODEL_HPP_
#define SILAUDIT_MODEL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "silaudit/rng.hpp"

namespace silaudit {
namespace model {

// Fully connected 1-128-128-1 network: ReLU hidden layers, dropout after
// each, sigmoid output. The output is the predicted spoof probability
// (bonafide=0, spoof=1).
struct FcnnParams {
  static constexpr std::size_t kHidden = 128;

  std::vector<double> w1 = std::vector<double>(kHidden, 0.0);  // 128 x 1
  std::vector<double> b1 = std::vector<double>(kHidden, 0.0);
  std::vector<double> w2 =
      std::vector<double>(kHidden * kHidden, 0.0);  // row-major 128 x 128
  std::vector<double> b2 = std::vector<double>(kHidden, 0.0);
  std::vector<double> w3 = std::vector<double>(kHidden, 0.0);  // 1 x 128
  double b3 = 0.0;
};

struct TrainConfig {
  int epochs = 50;
  double learning_rate = 1e-3;
  double weight_decay = 1e-6;
  double dropout = 0.10;
  int batch_size = 64;
  std::uint64_t seed = 0;
};

struct AdamState {
  FcnnParams m;  // first moments, shaped like the parameters
  FcnnParams v;  // second moments
  long step = 0;
};

// Per-unit multipliers: 0 for a dropped unit, 1/(1-p) for a survivor
// (inverted dropout), all 1 in eval mode.
struct DropoutMasks {
  std::vector<double> h1 = std::vector<double>(FcnnParams::kHidden, 1.0);
  std::vector<double> h2 = std::vector<double>(FcnnParams::kHidden, 1.0);
};

struct Example {
  double x = 0.0;
  int label = 0;  // 0 bonafide, 1 spoof
};

struct TrainResult {
  FcnnParams params;
  std::vector<double> epoch_loss;  // mean train loss, one entry per epoch
};

// Weights uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)], biases zero.
// Bit-identical for equal seeds.
FcnnParams init_params(std::uint64_t seed);

DropoutMasks sample_masks(double dropout, Rng& rng);

double forward(const FcnnParams& p, double x, const DropoutMasks& masks);
double forward_eval(const FcnnParams& p, double x);

// -[y log yh + (1-y) log(1-yh)] with yh clamped to [1e-7, 1 - 1e-7].
double bce_loss(double y_hat, int label);

// Exact gradients of bce_loss(forward(x)) with the given masks.
FcnnParams backward(const FcnnParams& p, double x, int label,
                    const DropoutMasks& masks);

// Classic Adam (beta1 0.9, beta2 0.999, eps 1e-8); weight decay is added
// to the gradient before the moment updates.
void adam_step(AdamState& state, FcnnParams& params, const FcnnParams& grads,
               const TrainConfig& cfg);

// Mini-batch training over shuffled data; no early stopping. Requires at
// least one example of each class. Deterministic per cfg.seed.
TrainResult train(std::span<const Example> data, const TrainConfig& cfg);

// Eval-mode forward per feature.
std::vector<double> score(const FcnnParams& p, std::span<const double> xs);

// The parameter-free baseline: i.i.d. uniform [0, 1] scores.
std::vector<double> random_baseline(std::size_t n, Rng& rng);

}  // namespace model
}  // namespace silaudit

#endif  // SILAUDIT_MODEL_HPP_
