#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "m2kt/errors.hpp"
#include "m2kt/rng.hpp"
#include "m2kt/tensor.hpp"

namespace m2kt {

struct KmeansResult {
  std::vector<Tensor> centroids;
  std::vector<size_t> assignments;
  // Within-cluster squared distance after each assignment phase;
  // non-increasing by construction.
  std::vector<double> objective_history;
};

// Lloyd's algorithm. Deterministic under the passed rng: initial centroids
// are k distinct points chosen by partial Fisher-Yates, nearest-centroid ties
// break toward the lowest centroid index, and an emptied cluster is re-seeded
// at the point farthest from its currently assigned centroid.
inline KmeansResult kmeans(const std::vector<Tensor>& points, size_t k, SeededRng& rng,
                           size_t max_iters = 100) {
  if (points.empty()) throw ArgumentError("kmeans: empty input");
  if (k < 1 || k > points.size()) throw ArgumentError("kmeans: k out of range");
  const size_t n = points.size();
  const size_t dim = points[0].size();
  for (const Tensor& p : points) {
    if (p.size() != dim) throw DimensionError("kmeans: inconsistent point dimensions");
  }

  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(n - i));
    std::swap(order[i], order[j]);
  }
  KmeansResult result;
  for (size_t i = 0; i < k; ++i) result.centroids.push_back(points[order[i]]);
  result.assignments.assign(n, 0);

  for (size_t iter = 0; iter < max_iters; ++iter) {
    // Assignment phase.
    bool changed = iter == 0;
    double objective = 0.0;
    for (size_t i = 0; i < n; ++i) {
      size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (size_t c = 0; c < k; ++c) {
        const double d = squared_distance(points[i], result.centroids[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (result.assignments[i] != best) {
        result.assignments[i] = best;
        changed = true;
      }
      objective += best_d;
    }
    result.objective_history.push_back(objective);
    if (!changed) break;

    // Update phase.
    std::vector<Tensor> sums(k, Tensor::zeros({dim}));
    std::vector<size_t> counts(k, 0);
    for (size_t i = 0; i < n; ++i) {
      counts[result.assignments[i]]++;
      Tensor& s = sums[result.assignments[i]];
      for (size_t d = 0; d < dim; ++d) s.data[d] += points[i].data[d];
    }
    for (size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        // Re-seed at the point farthest from its assigned centroid.
        size_t far = 0;
        double far_d = -1.0;
        for (size_t i = 0; i < n; ++i) {
          const double d = squared_distance(points[i], result.centroids[result.assignments[i]]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        result.centroids[c] = points[far];
      } else {
        for (size_t d = 0; d < dim; ++d) {
          result.centroids[c].data[d] = sums[c].data[d] / static_cast<double>(counts[c]);
        }
      }
    }
  }
  return result;
}

}  // namespace m2kt
