#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "m2kt/errors.hpp"
#include "m2kt/rng.hpp"
#include "m2kt/tensor.hpp"

namespace m2kt {

// Two-step modular arithmetic chains mod 10: s1 = (a op1 b) mod 10,
// result = (s1 op2 c) mod 10. The 9 ordered operator pairs are the concept
// taxonomy; each concept owns the 1000 digit combinations.

enum class ChainOp : uint8_t { add = 0, sub = 1, mul = 2 };

constexpr int kNumOps = 3;
constexpr int kNumConcepts = 9;
constexpr int kInstancesPerConcept = 1000;
constexpr int kNumClasses = 10;
constexpr int kInputDim = 36;
constexpr int kTraceSteps = 2;

inline const char* op_name(ChainOp op) {
  switch (op) {
    case ChainOp::add: return "add";
    case ChainOp::sub: return "sub";
    case ChainOp::mul: return "mul";
  }
  return "?";
}

inline ChainOp op_from_name(std::string_view name) {
  if (name == "add") return ChainOp::add;
  if (name == "sub") return ChainOp::sub;
  if (name == "mul") return ChainOp::mul;
  throw ArgumentError("unknown operator name: " + std::string(name));
}

inline int apply_op(int x, ChainOp op, int y) {
  switch (op) {
    case ChainOp::add: return (x + y) % 10;
    case ChainOp::sub: return ((x - y) % 10 + 10) % 10;
    case ChainOp::mul: return (x * y) % 10;
  }
  throw ArgumentError("invalid operator");
}

// Exact task oracle: (s1, result).
inline std::pair<int, int> eval_chain(int a, ChainOp op1, int b, ChainOp op2, int c) {
  if (a < 0 || a > 9 || b < 0 || b > 9 || c < 0 || c > 9) {
    throw ArgumentError("eval_chain: digits must be in 0..9");
  }
  const int s1 = apply_op(a, op1, b);
  return {s1, apply_op(s1, op2, c)};
}

struct ChainInstance {
  int a = 0, b = 0, c = 0;
  ChainOp op1 = ChainOp::add, op2 = ChainOp::add;
  int s1 = 0, result = 0;

  bool operator==(const ChainInstance&) const = default;
};

inline ChainInstance make_instance(int a, ChainOp op1, int b, ChainOp op2, int c) {
  ChainInstance inst;
  inst.a = a;
  inst.b = b;
  inst.c = c;
  inst.op1 = op1;
  inst.op2 = op2;
  auto [s1, result] = eval_chain(a, op1, b, op2, c);
  inst.s1 = s1;
  inst.result = result;
  return inst;
}

// Ordered operator pair; index = 3 * op1 + op2, name "op1-op2".
struct ConceptId {
  int index = 0;
  std::string name;

  ChainOp op1() const { return static_cast<ChainOp>(index / kNumOps); }
  ChainOp op2() const { return static_cast<ChainOp>(index % kNumOps); }

  bool operator==(const ConceptId&) const = default;
};

inline ConceptId concept_from_index(int index) {
  if (index < 0 || index >= kNumConcepts) {
    throw ArgumentError("concept index out of range: " + std::to_string(index));
  }
  ConceptId id;
  id.index = index;
  id.name = std::string(op_name(static_cast<ChainOp>(index / kNumOps))) + "-" +
            op_name(static_cast<ChainOp>(index % kNumOps));
  return id;
}

inline ConceptId concept_from_ops(ChainOp op1, ChainOp op2) {
  return concept_from_index(static_cast<int>(op1) * kNumOps + static_cast<int>(op2));
}

inline ConceptId concept_from_name(std::string_view name) {
  const size_t dash = name.find('-');
  if (dash == std::string_view::npos) {
    throw ArgumentError("malformed concept name: " + std::string(name));
  }
  return concept_from_ops(op_from_name(name.substr(0, dash)),
                          op_from_name(name.substr(dash + 1)));
}

inline ConceptId concept_of(const ChainInstance& inst) {
  return concept_from_ops(inst.op1, inst.op2);
}

inline std::vector<ConceptId> all_concepts() {
  std::vector<ConceptId> out;
  for (int i = 0; i < kNumConcepts; ++i) out.push_back(concept_from_index(i));
  return out;
}

// One-hot layout: [0,10) digit a, [10,13) op1, [13,23) digit b,
// [23,26) op2, [26,36) digit c.
inline Tensor encode_input(const ChainInstance& inst) {
  Tensor x = Tensor::zeros({kInputDim});
  x.data[inst.a] = 1.0;
  x.data[10 + static_cast<int>(inst.op1)] = 1.0;
  x.data[13 + inst.b] = 1.0;
  x.data[23 + static_cast<int>(inst.op2)] = 1.0;
  x.data[26 + inst.c] = 1.0;
  return x;
}

inline ChainInstance decode_input(const Tensor& x) {
  if (x.size() != kInputDim) throw DimensionError("decode_input: expected 36 entries");
  auto hot = [&](int lo, int hi) {
    int found = -1;
    for (int i = lo; i < hi; ++i) {
      if (x.data[i] == 1.0) {
        if (found >= 0) throw ArgumentError("decode_input: not one-hot");
        found = i - lo;
      } else if (x.data[i] != 0.0) {
        throw ArgumentError("decode_input: entries must be 0 or 1");
      }
    }
    if (found < 0) throw ArgumentError("decode_input: missing hot entry");
    return found;
  };
  const int a = hot(0, 10);
  const int op1 = hot(10, 13);
  const int b = hot(13, 23);
  const int op2 = hot(23, 26);
  const int c = hot(26, 36);
  return make_instance(a, static_cast<ChainOp>(op1), b, static_cast<ChainOp>(op2), c);
}

// All 1000 instances of a concept in lexicographic (a, b, c) order.
inline std::vector<ChainInstance> enumerate_concept_inputs(const ConceptId& concept) {
  std::vector<ChainInstance> out;
  out.reserve(kInstancesPerConcept);
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      for (int c = 0; c <= 9; ++c) {
        out.push_back(make_instance(a, concept.op1(), b, concept.op2(), c));
      }
    }
  }
  return out;
}

inline std::vector<ChainInstance> enumerate_concepts(const std::vector<int>& indices) {
  std::vector<ChainInstance> out;
  for (int idx : indices) {
    auto part = enumerate_concept_inputs(concept_from_index(idx));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// n distinct instances drawn without replacement via partial Fisher-Yates.
// For a fixed seed, the first m draws agree for any n >= m, so a probe set
// regenerated with a smaller count is a prefix of the larger one.
inline std::vector<ChainInstance> sample_probes(const ConceptId& concept, size_t n,
                                                SeededRng& rng) {
  if (n < 1 || n > static_cast<size_t>(kInstancesPerConcept)) {
    throw ArgumentError("sample_probes: n out of [1, 1000]");
  }
  std::vector<ChainInstance> pool = enumerate_concept_inputs(concept);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

inline std::vector<ChainInstance> sample_probes(const ConceptId& concept, size_t n,
                                                uint64_t seed) {
  SeededRng rng(seed);
  return sample_probes(concept, n, rng);
}

}  // namespace m2kt
