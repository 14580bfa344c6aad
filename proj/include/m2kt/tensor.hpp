#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "m2kt/errors.hpp"

namespace m2kt {

// Dense row-major tensor of 64-bit floats. Rank 1 and 2 cover everything in
// this project; the flat data vector always has product(shape) entries.
struct Tensor {
  std::vector<size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::initializer_list<double> values)
      : shape{values.size()}, data(values) {}

  static Tensor zeros(std::vector<size_t> s) {
    Tensor t;
    size_t n = 1;
    for (size_t d : s) n *= d;
    t.shape = std::move(s);
    t.data.assign(n, 0.0);
    return t;
  }

  static Tensor from_vector(std::vector<double> values) {
    Tensor t;
    t.shape = {values.size()};
    t.data = std::move(values);
    return t;
  }

  size_t size() const { return data.size(); }

  size_t rank() const { return shape.size(); }

  size_t rows() const {
    if (rank() != 2) throw DimensionError("Tensor::rows: not a matrix");
    return shape[0];
  }

  size_t cols() const {
    if (rank() != 2) throw DimensionError("Tensor::cols: not a matrix");
    return shape[1];
  }

  double operator[](size_t i) const { return data[i]; }
  double& operator[](size_t i) { return data[i]; }

  double at(size_t r, size_t c) const { return data[r * shape[1] + c]; }
  double& at(size_t r, size_t c) { return data[r * shape[1] + c]; }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  bool finite() const {
    for (double v : data) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  void require_finite(const char* op) const {
    if (!finite()) throw NumericError(std::string(op) + ": non-finite value");
  }

  bool operator==(const Tensor& other) const = default;
};

inline double dot(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a.data[i] * b.data[i];
  return s;
}

inline double squared_distance(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw DimensionError("squared_distance: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a.data[i] - b.data[i];
    s += d * d;
  }
  return s;
}

inline double l2_norm(const Tensor& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return std::sqrt(s);
}

inline double l1_distance(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw DimensionError("l1_distance: length mismatch");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::fabs(a.data[i] - b.data[i]);
  return s;
}

}  // namespace m2kt
