#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "m2kt/errors.hpp"
#include "m2kt/rng.hpp"
#include "m2kt/tensor.hpp"

namespace m2kt {

enum class Activation : uint8_t { relu = 0, tanh = 1, identity = 2, softmax = 3 };

inline const char* activation_name(Activation a) {
  switch (a) {
    case Activation::relu: return "relu";
    case Activation::tanh: return "tanh";
    case Activation::identity: return "identity";
    case Activation::softmax: return "softmax";
  }
  return "?";
}

// Dense feed-forward network. weights[i] is (layer_dims[i+1] x layer_dims[i]),
// biases[i] is (layer_dims[i+1],); activations[i] applies after layer i.
struct MlpModel {
  std::vector<size_t> layer_dims;
  std::vector<Tensor> weights;
  std::vector<Tensor> biases;
  std::vector<Activation> activations;

  size_t num_layers() const { return weights.size(); }
  size_t input_dim() const { return layer_dims.front(); }
  size_t output_dim() const { return layer_dims.back(); }

  void validate() const {
    if (layer_dims.size() < 2) throw DimensionError("MlpModel: need at least one layer");
    if (weights.size() != layer_dims.size() - 1 || biases.size() != weights.size() ||
        activations.size() != weights.size()) {
      throw DimensionError("MlpModel: inconsistent layer counts");
    }
    for (size_t i = 0; i < weights.size(); ++i) {
      if (weights[i].rank() != 2 || weights[i].rows() != layer_dims[i + 1] ||
          weights[i].cols() != layer_dims[i]) {
        throw DimensionError("MlpModel: weight shape mismatch at layer " + std::to_string(i));
      }
      if (biases[i].size() != layer_dims[i + 1]) {
        throw DimensionError("MlpModel: bias shape mismatch at layer " + std::to_string(i));
      }
      weights[i].require_finite("MlpModel weights");
      biases[i].require_finite("MlpModel biases");
      if (i + 1 < weights.size() && activations[i] == Activation::softmax) {
        throw DimensionError("MlpModel: softmax only allowed on the final layer");
      }
    }
    if (activations.back() != Activation::identity && activations.back() != Activation::softmax) {
      throw DimensionError("MlpModel: final activation must be identity or softmax");
    }
  }

  size_t param_count() const {
    size_t n = 0;
    for (size_t i = 0; i < weights.size(); ++i) n += weights[i].size() + biases[i].size();
    return n;
  }
};

// Uniform init in +-sqrt(6 / (fan_in + fan_out)).
inline MlpModel make_mlp(const std::vector<size_t>& dims,
                         const std::vector<Activation>& acts, SeededRng& rng) {
  MlpModel m;
  m.layer_dims = dims;
  m.activations = acts;
  for (size_t i = 0; i + 1 < dims.size(); ++i) {
    const double bound = std::sqrt(6.0 / static_cast<double>(dims[i] + dims[i + 1]));
    Tensor w = Tensor::zeros({dims[i + 1], dims[i]});
    for (double& v : w.data) v = rng.uniform(-bound, bound);
    m.weights.push_back(std::move(w));
    m.biases.push_back(Tensor::zeros({dims[i + 1]}));
  }
  m.validate();
  return m;
}

inline void softmax_inplace(std::vector<double>& v) {
  double mx = v[0];
  for (double x : v) mx = std::max(mx, x);
  double sum = 0.0;
  for (double& x : v) {
    x = std::exp(x - mx);
    sum += x;
  }
  for (double& x : v) x /= sum;
}

// Per-layer pre- and post-activation values of one forward pass.
struct ForwardTrace {
  std::vector<Tensor> pre;
  std::vector<Tensor> post;

  const Tensor& output() const { return post.back(); }
};

// Forward pass. When layer0_extra_bias is given it is added to the first
// layer's pre-activation (the injection pathway used during alignment).
inline ForwardTrace mlp_forward_trace(const MlpModel& model, const Tensor& input,
                                      const Tensor* layer0_extra_bias = nullptr) {
  if (input.size() != model.input_dim()) {
    throw DimensionError("mlp_forward: input length " + std::to_string(input.size()) +
                         " != " + std::to_string(model.input_dim()));
  }
  if (layer0_extra_bias != nullptr && layer0_extra_bias->size() != model.layer_dims[1]) {
    throw DimensionError("mlp_forward: injection bias length mismatch");
  }
  ForwardTrace trace;
  trace.pre.reserve(model.num_layers());
  trace.post.reserve(model.num_layers());
  const std::vector<double>* x = &input.data;
  for (size_t layer = 0; layer < model.num_layers(); ++layer) {
    const size_t in = model.layer_dims[layer];
    const size_t out = model.layer_dims[layer + 1];
    Tensor z = Tensor::zeros({out});
    const double* w = model.weights[layer].data.data();
    for (size_t o = 0; o < out; ++o) {
      const double* row = w + o * in;
      double s = model.biases[layer].data[o];
      for (size_t i = 0; i < in; ++i) s += row[i] * (*x)[i];
      z.data[o] = s;
    }
    if (layer == 0 && layer0_extra_bias != nullptr) {
      for (size_t o = 0; o < out; ++o) z.data[o] += layer0_extra_bias->data[o];
    }
    Tensor y = z;
    switch (model.activations[layer]) {
      case Activation::relu:
        for (double& v : y.data) v = v > 0.0 ? v : 0.0;
        break;
      case Activation::tanh:
        for (double& v : y.data) v = std::tanh(v);
        break;
      case Activation::identity:
        break;
      case Activation::softmax:
        softmax_inplace(y.data);
        break;
    }
    trace.pre.push_back(std::move(z));
    trace.post.push_back(std::move(y));
    x = &trace.post.back().data;
  }
  trace.post.back().require_finite("mlp_forward output");
  return trace;
}

// (post-activations per layer, output) of a forward pass.
inline std::pair<std::vector<Tensor>, Tensor> mlp_forward(const MlpModel& model,
                                                          const Tensor& input) {
  ForwardTrace trace = mlp_forward_trace(model, input);
  Tensor out = trace.output();
  return {std::move(trace.post), std::move(out)};
}

// Final-layer pre-activation (logits), skipping a final softmax. Used by the
// fused softmax cross-entropy path during training.
inline Tensor mlp_forward_logits(const MlpModel& model, const Tensor& input,
                                 const Tensor* layer0_extra_bias = nullptr) {
  ForwardTrace trace = mlp_forward_trace(model, input, layer0_extra_bias);
  return trace.pre.back();
}

struct MlpGrads {
  std::vector<Tensor> weight_grads;
  std::vector<Tensor> bias_grads;
  Tensor input_grad;
};

inline MlpGrads make_zero_grads(const MlpModel& model) {
  MlpGrads g;
  for (size_t i = 0; i < model.num_layers(); ++i) {
    g.weight_grads.push_back(Tensor::zeros(model.weights[i].shape));
    g.bias_grads.push_back(Tensor::zeros(model.biases[i].shape));
  }
  g.input_grad = Tensor::zeros({model.input_dim()});
  return g;
}

namespace detail {

// Backpropagates output_grad through the trace. When through_final_activation
// is false, output_grad is taken with respect to the final pre-activation
// (fused-softmax path). Gradients are accumulated into `grads`.
inline void mlp_backward_into(const MlpModel& model, const Tensor& input,
                              const ForwardTrace& trace, const Tensor& output_grad,
                              bool through_final_activation, MlpGrads& grads) {
  if (output_grad.size() != model.output_dim()) {
    throw DimensionError("mlp_backward: output_grad length mismatch");
  }
  std::vector<double> dz;  // grad w.r.t. current layer pre-activation
  std::vector<double> dy(output_grad.data);
  for (size_t layer = model.num_layers(); layer-- > 0;) {
    const size_t in = model.layer_dims[layer];
    const size_t out = model.layer_dims[layer + 1];
    const Tensor& y = trace.post[layer];
    dz.assign(out, 0.0);
    const bool skip_activation =
        !through_final_activation && layer == model.num_layers() - 1;
    if (skip_activation) {
      dz = dy;
    } else {
      switch (model.activations[layer]) {
        case Activation::relu:
          for (size_t o = 0; o < out; ++o) dz[o] = trace.pre[layer].data[o] > 0.0 ? dy[o] : 0.0;
          break;
        case Activation::tanh:
          for (size_t o = 0; o < out; ++o) dz[o] = dy[o] * (1.0 - y.data[o] * y.data[o]);
          break;
        case Activation::identity:
          dz = dy;
          break;
        case Activation::softmax: {
          double gy = 0.0;
          for (size_t o = 0; o < out; ++o) gy += dy[o] * y.data[o];
          for (size_t o = 0; o < out; ++o) dz[o] = y.data[o] * (dy[o] - gy);
          break;
        }
      }
    }
    const std::vector<double>& x = layer == 0 ? input.data : trace.post[layer - 1].data;
    double* wg = grads.weight_grads[layer].data.data();
    for (size_t o = 0; o < out; ++o) {
      const double d = dz[o];
      grads.bias_grads[layer].data[o] += d;
      double* row = wg + o * in;
      for (size_t i = 0; i < in; ++i) row[i] += d * x[i];
    }
    dy.assign(in, 0.0);
    const double* w = model.weights[layer].data.data();
    for (size_t o = 0; o < out; ++o) {
      const double d = dz[o];
      const double* row = w + o * in;
      for (size_t i = 0; i < in; ++i) dy[i] += row[i] * d;
    }
  }
  for (size_t i = 0; i < dy.size(); ++i) grads.input_grad.data[i] += dy[i];
}

}  // namespace detail

// Exact gradients of <output, output_grad> with respect to every parameter
// and the input.
inline MlpGrads mlp_backward(const MlpModel& model, const Tensor& input,
                             const Tensor& output_grad) {
  ForwardTrace trace = mlp_forward_trace(model, input);
  MlpGrads grads = make_zero_grads(model);
  detail::mlp_backward_into(model, input, trace, output_grad, true, grads);
  for (const Tensor& t : grads.weight_grads) t.require_finite("mlp_backward");
  grads.input_grad.require_finite("mlp_backward");
  return grads;
}

// Variant reusing an existing forward trace (same input).
inline MlpGrads mlp_backward(const MlpModel& model, const Tensor& input,
                             const ForwardTrace& trace, const Tensor& output_grad) {
  MlpGrads grads = make_zero_grads(model);
  detail::mlp_backward_into(model, input, trace, output_grad, true, grads);
  return grads;
}

// loss = -sum target * log softmax(logits); grad = softmax(logits) - target.
inline std::pair<double, Tensor> softmax_cross_entropy(const Tensor& logits,
                                                       const Tensor& target) {
  if (logits.size() != target.size()) {
    throw DimensionError("softmax_cross_entropy: length mismatch");
  }
  double tsum = 0.0;
  for (double t : target.data) tsum += t;
  if (std::fabs(tsum - 1.0) > 1e-9) {
    throw ArgumentError("softmax_cross_entropy: target does not sum to 1");
  }
  double mx = logits.data[0];
  for (double v : logits.data) mx = std::max(mx, v);
  double sum = 0.0;
  for (double v : logits.data) sum += std::exp(v - mx);
  const double log_z = std::log(sum) + mx;
  double loss = 0.0;
  Tensor grad = Tensor::zeros({logits.size()});
  for (size_t i = 0; i < logits.size(); ++i) {
    const double log_p = logits.data[i] - log_z;
    loss -= target.data[i] * log_p;
    grad.data[i] = std::exp(log_p) - target.data[i];
  }
  return {loss, std::move(grad)};
}

inline size_t argmax(const Tensor& v) {
  return static_cast<size_t>(
      std::max_element(v.data.begin(), v.data.end()) - v.data.begin());
}

inline Tensor one_hot(size_t index, size_t n) {
  Tensor t = Tensor::zeros({n});
  t.data[index] = 1.0;
  return t;
}

}  // namespace m2kt
