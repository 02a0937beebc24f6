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

#include "silaudit/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "silaudit/error.hpp"

namespace silaudit {
namespace model {

namespace {

constexpr std::size_t kH = FcnnParams::kHidden;
constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;
constexpr double kProbEps = 1e-7;

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct ForwardCache {
  std::vector<double> z1 = std::vector<double>(kH);
  std::vector<double> d1 = std::vector<double>(kH);  // relu(z1) * mask
  std::vector<double> z2 = std::vector<double>(kH);
  std::vector<double> d2 = std::vector<double>(kH);
  double z3 = 0.0;
  double y_hat = 0.0;
};

ForwardCache run_forward(const FcnnParams& p, double x,
                         const DropoutMasks& masks) {
  ForwardCache c;
  for (std::size_t i = 0; i < kH; ++i) {
    c.z1[i] = p.w1[i] * x + p.b1[i];
    c.d1[i] = (c.z1[i] > 0.0 ? c.z1[i] : 0.0) * masks.h1[i];
  }
  for (std::size_t i = 0; i < kH; ++i) {
    double z = p.b2[i];
    const double* row = &p.w2[i * kH];
    for (std::size_t j = 0; j < kH; ++j) z += row[j] * c.d1[j];
    c.z2[i] = z;
    c.d2[i] = (z > 0.0 ? z : 0.0) * masks.h2[i];
  }
  double z3 = p.b3;
  for (std::size_t j = 0; j < kH; ++j) z3 += p.w3[j] * c.d2[j];
  c.z3 = z3;
  c.y_hat = sigmoid(z3);
  return c;
}

void accumulate_gradients(const FcnnParams& p, double x, int label,
                          const DropoutMasks& masks, const ForwardCache& c,
                          FcnnParams& grads) {
  // d loss / d z3 for the clamped sigmoid+BCE composition. Inside the
  // clamp region the loss is locally constant in z3.
  double dz3 = 0.0;
  if (c.y_hat > kProbEps && c.y_hat < 1.0 - kProbEps) {
    dz3 = c.y_hat - static_cast<double>(label);
  }

  grads.b3 += dz3;
  std::vector<double> dd2(kH);
  for (std::size_t j = 0; j < kH; ++j) {
    grads.w3[j] += dz3 * c.d2[j];
    dd2[j] = dz3 * p.w3[j];
  }

  std::vector<double> dz2(kH);
  for (std::size_t i = 0; i < kH; ++i) {
    dz2[i] = (c.z2[i] > 0.0) ? dd2[i] * masks.h2[i] : 0.0;
    grads.b2[i] += dz2[i];
  }

  std::vector<double> dd1(kH, 0.0);
  for (std::size_t i = 0; i < kH; ++i) {
    if (dz2[i] == 0.0) continue;
    double* grow = &grads.w2[i * kH];
    const double* row = &p.w2[i * kH];
    for (std::size_t j = 0; j < kH; ++j) {
      grow[j] += dz2[i] * c.d1[j];
      dd1[j] += dz2[i] * row[j];
    }
  }

  for (std::size_t i = 0; i < kH; ++i) {
    const double dz1 = (c.z1[i] > 0.0) ? dd1[i] * masks.h1[i] : 0.0;
    grads.w1[i] += dz1 * x;
    grads.b1[i] += dz1;
  }
}

void scale(FcnnParams& g, double factor) {
  for (double& v : g.w1) v *= factor;
  for (double& v : g.b1) v *= factor;
  for (double& v : g.w2) v *= factor;
  for (double& v : g.b2) v *= factor;
  for (double& v : g.w3) v *= factor;
  g.b3 *= factor;
}

void adam_update(double& theta, double& m, double& v, double grad, double wd,
                 double lr, double bc1, double bc2) {
  const double g = grad + wd * theta;
  m = kBeta1 * m + (1.0 - kBeta1) * g;
  v = kBeta2 * v + (1.0 - kBeta2) * g * g;
  const double m_hat = m / bc1;
  const double v_hat = v / bc2;
  theta -= lr * m_hat / (std::sqrt(v_hat) + kAdamEps);
}

}  // namespace

FcnnParams init_params(std::uint64_t seed) {
  Rng rng(seed);
  FcnnParams p;
  const double bound1 = 1.0;                     // fan_in = 1
  const double bound2 = 1.0 / std::sqrt(static_cast<double>(kH));
  for (double& w : p.w1) w = rng.uniform(-bound1, bound1);
  for (double& w : p.w2) w = rng.uniform(-bound2, bound2);
  for (double& w : p.w3) w = rng.uniform(-bound2, bound2);
  return p;
}

DropoutMasks sample_masks(double dropout, Rng& rng) {
  DropoutMasks masks;
  if (dropout <= 0.0) return masks;
  const double keep = 1.0 - dropout;
  for (double& m : masks.h1) m = rng.uniform01() < dropout ? 0.0 : 1.0 / keep;
  for (double& m : masks.h2) m = rng.uniform01() < dropout ? 0.0 : 1.0 / keep;
  return masks;
}

double forward(const FcnnParams& p, double x, const DropoutMasks& masks) {
  return run_forward(p, x, masks).y_hat;
}

double forward_eval(const FcnnParams& p, double x) {
  static const DropoutMasks identity;
  return run_forward(p, x, identity).y_hat;
}

double bce_loss(double y_hat, int label) {
  const double yh = std::clamp(y_hat, kProbEps, 1.0 - kProbEps);
  return label == 1 ? -std::log(yh) : -std::log(1.0 - yh);
}

FcnnParams backward(const FcnnParams& p, double x, int label,
                    const DropoutMasks& masks) {
  FcnnParams grads;
  const ForwardCache c = run_forward(p, x, masks);
  accumulate_gradients(p, x, label, masks, c, grads);
  return grads;
}

void adam_step(AdamState& state, FcnnParams& params, const FcnnParams& grads,
               const TrainConfig& cfg) {
  ++state.step;
  const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(state.step));
  const double lr = cfg.learning_rate;
  const double wd = cfg.weight_decay;

  for (std::size_t i = 0; i < kH; ++i) {
    adam_update(params.w1[i], state.m.w1[i], state.v.w1[i], grads.w1[i], wd,
                lr, bc1, bc2);
    adam_update(params.b1[i], state.m.b1[i], state.v.b1[i], grads.b1[i], wd,
                lr, bc1, bc2);
    adam_update(params.b2[i], state.m.b2[i], state.v.b2[i], grads.b2[i], wd,
                lr, bc1, bc2);
    adam_update(params.w3[i], state.m.w3[i], state.v.w3[i], grads.w3[i], wd,
                lr, bc1, bc2);
  }
  for (std::size_t i = 0; i < kH * kH; ++i) {
    adam_update(params.w2[i], state.m.w2[i], state.v.w2[i], grads.w2[i], wd,
                lr, bc1, bc2);
  }
  adam_update(params.b3, state.m.b3, state.v.b3, grads.b3, wd, lr, bc1, bc2);
}

TrainResult train(std::span<const Example> data, const TrainConfig& cfg) {
  if (cfg.epochs < 0) throw Error("epochs must be non-negative");
  if (cfg.batch_size < 1) throw Error("batch_size must be positive");
  if (!(cfg.learning_rate > 0.0)) throw Error("learning_rate must be positive");
  if (cfg.dropout < 0.0 || cfg.dropout >= 1.0) {
    throw Error("dropout must be in [0, 1)");
  }

  bool has_bonafide = false;
  bool has_spoof = false;
  for (const Example& e : data) {
    (e.label == 0 ? has_bonafide : has_spoof) = true;
  }
  if (!has_bonafide || !has_spoof) {
    throw Error("training data must contain both classes");
  }

  TrainResult result;
  result.params = init_params(derive_seed(cfg.seed, 0));
  Rng rng(derive_seed(cfg.seed, 1));

  AdamState state;
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const std::size_t batch_size = static_cast<std::size_t>(cfg.batch_size);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffle(order, rng);
    double epoch_loss = 0.0;

    for (std::size_t begin = 0; begin < order.size(); begin += batch_size) {
      const std::size_t end = std::min(begin + batch_size, order.size());
      FcnnParams grads;
      for (std::size_t k = begin; k < end; ++k) {
        const Example& e = data[order[k]];
        const DropoutMasks masks = sample_masks(cfg.dropout, rng);
        const ForwardCache c = run_forward(result.params, e.x, masks);
        epoch_loss += bce_loss(c.y_hat, e.label);
        accumulate_gradients(result.params, e.x, e.label, masks, c, grads);
      }
      scale(grads, 1.0 / static_cast<double>(end - begin));
      adam_step(state, result.params, grads, cfg);
    }
    result.epoch_loss.push_back(epoch_loss /
                                static_cast<double>(data.size()));
  }
  return result;
}

std::vector<double> score(const FcnnParams& p, std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(forward_eval(p, x));
  return out;
}

std::vector<double> random_baseline(std::size_t n, Rng& rng) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.uniform01());
  return out;
}

}  // namespace model
}  // namespace silaudit
