#pragma once

#include <cmath>
#include <cstdint>

#include "m2kt/errors.hpp"
#include "m2kt/tensor.hpp"

namespace m2kt {

enum class OptimizerKind : uint8_t { adam = 0, sgd = 1 };

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam moments congruent to one parameter tensor. Lazily initialized on the
// first step; step_count increments by exactly 1 per step.
struct OptimState {
  Tensor first_moment;
  Tensor second_moment;
  uint64_t step_count = 0;
};

// Standard Adam update with bias correction. Refuses non-finite gradients
// without touching params or state.
inline void adam_step(Tensor& params, const Tensor& grads, OptimState& state, double lr,
                      const AdamConfig& cfg = {}) {
  if (!params.same_shape(grads)) throw DimensionError("adam_step: shape mismatch");
  if (!grads.finite()) throw NumericError("adam_step: non-finite gradient, step refused");
  if (state.first_moment.size() == 0) {
    state.first_moment = Tensor::zeros(params.shape);
    state.second_moment = Tensor::zeros(params.shape);
  }
  if (!state.first_moment.same_shape(params)) {
    throw DimensionError("adam_step: optimizer state incongruent with params");
  }
  state.step_count += 1;
  const double t = static_cast<double>(state.step_count);
  const double c1 = 1.0 - std::pow(cfg.beta1, t);
  const double c2 = 1.0 - std::pow(cfg.beta2, t);
  for (size_t i = 0; i < params.size(); ++i) {
    const double g = grads.data[i];
    double& m = state.first_moment.data[i];
    double& v = state.second_moment.data[i];
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g;
    const double m_hat = m / c1;
    const double v_hat = v / c2;
    params.data[i] -= lr * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
  }
}

inline void sgd_step(Tensor& params, const Tensor& grads, OptimState& state, double lr) {
  if (!params.same_shape(grads)) throw DimensionError("sgd_step: shape mismatch");
  if (!grads.finite()) throw NumericError("sgd_step: non-finite gradient, step refused");
  state.step_count += 1;
  for (size_t i = 0; i < params.size(); ++i) params.data[i] -= lr * grads.data[i];
}

inline void optimizer_step(OptimizerKind kind, Tensor& params, const Tensor& grads,
                           OptimState& state, double lr, const AdamConfig& cfg = {}) {
  if (kind == OptimizerKind::adam) {
    adam_step(params, grads, state, lr, cfg);
  } else {
    sgd_step(params, grads, state, lr);
  }
}

}  // namespace m2kt
