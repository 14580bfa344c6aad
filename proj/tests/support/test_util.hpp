#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "m2kt/mlp.hpp"
#include "m2kt/rng.hpp"
#include "m2kt/tensor.hpp"

namespace m2kt::testing {

// Relative error with an absolute floor so near-zero gradients compare on an
// absolute scale (finite differences carry ~1e-8 truncation noise at h=1e-4).
inline double rel_error(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-3});
  return std::fabs(a - b) / scale;
}

// Central finite difference of f with respect to *x.
inline double central_diff(const std::function<double()>& f, double* x, double h = 1e-4) {
  const double orig = *x;
  *x = orig + h;
  const double fp = f();
  *x = orig - h;
  const double fm = f();
  *x = orig;
  return (fp - fm) / (2.0 * h);
}

inline Tensor random_vector(size_t n, SeededRng& rng, double lo = -1.0, double hi = 1.0) {
  Tensor t = Tensor::zeros({n});
  for (double& v : t.data) v = rng.uniform(lo, hi);
  return t;
}

// Checks every parameter coordinate (and the input) of model against central
// finite differences of scalar(); returns the worst relative error seen.
inline double check_mlp_grads(MlpModel& model, const Tensor& input, const Tensor& out_grad,
                              double h = 1e-4) {
  const MlpGrads grads = mlp_backward(model, input, out_grad);
  auto scalar = [&]() {
    auto [acts, out] = mlp_forward(model, input);
    return dot(out, out_grad);
  };
  double worst = 0.0;
  for (size_t layer = 0; layer < model.num_layers(); ++layer) {
    for (size_t i = 0; i < model.weights[layer].size(); ++i) {
      const double fd = central_diff(scalar, &model.weights[layer].data[i], h);
      worst = std::max(worst, rel_error(grads.weight_grads[layer].data[i], fd));
    }
    for (size_t i = 0; i < model.biases[layer].size(); ++i) {
      const double fd = central_diff(scalar, &model.biases[layer].data[i], h);
      worst = std::max(worst, rel_error(grads.bias_grads[layer].data[i], fd));
    }
  }
  Tensor x = input;
  auto scalar_x = [&]() {
    auto [acts, out] = mlp_forward(model, x);
    return dot(out, out_grad);
  };
  for (size_t i = 0; i < x.size(); ++i) {
    const double fd = central_diff(scalar_x, &x.data[i], h);
    worst = std::max(worst, rel_error(grads.input_grad.data[i], fd));
  }
  return worst;
}

}  // namespace m2kt::testing
