#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"
#include "groversim/oracle.hpp"
#include "groversim/transforms.hpp"

// Transition amplitudes by explicit summation over intermediate-state paths.
// Exponential in the number of transform steps; an independent check on the
// state-vector engine for small registers, not a simulator in its own right.

namespace groversim::pathsum {

inline constexpr std::uint64_t kMaxLeafPaths = std::uint64_t{1} << 26;
inline constexpr unsigned kMaxVerifyQubits = 4;
inline constexpr std::size_t kMaxVerifySteps = 10;

enum class StepKind { kWalshHadamard, kFlipMarked, kFlipZero };

struct StepOp {
  StepKind kind = StepKind::kWalshHadamard;
  std::vector<BasisIndex> marked;  // kFlipMarked only

  static StepOp walsh_hadamard() { return {StepKind::kWalshHadamard, {}}; }
  static StepOp flip_marked(std::vector<BasisIndex> marked) {
    std::sort(marked.begin(), marked.end());
    return {StepKind::kFlipMarked, std::move(marked)};
  }
  static StepOp flip_zero() { return {StepKind::kFlipZero, {}}; }

  bool diagonal() const noexcept { return kind != StepKind::kWalshHadamard; }

  // Phase of a diagonal step at index r.
  double diagonal_phase(BasisIndex r) const {
    if (kind == StepKind::kFlipZero) return r == 0 ? -1.0 : 1.0;
    return std::binary_search(marked.begin(), marked.end(), r) ? -1.0 : 1.0;
  }
};

// The search program: one transform, then `iterations` copies of the loop
// body (flip marked, transform, flip zero, transform).
inline std::vector<StepOp> search_program_steps(std::vector<BasisIndex> marked,
                                                std::uint64_t iterations) {
  std::vector<StepOp> steps{StepOp::walsh_hadamard()};
  for (std::uint64_t t = 0; t < iterations; ++t) {
    steps.push_back(StepOp::flip_marked(marked));
    steps.push_back(StepOp::walsh_hadamard());
    steps.push_back(StepOp::flip_zero());
    steps.push_back(StepOp::walsh_hadamard());
  }
  return steps;
}

struct Path {
  std::vector<BasisIndex> indices;  // one per step boundary, start first
  double amplitude = 1.0;
};

/// Leaf paths enumerated between fixed endpoints: every transform step but
/// the last branches N ways, diagonal steps do not branch.
inline std::uint64_t leaf_path_bound(unsigned n, const std::vector<StepOp>& steps) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t leaves = 1;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].diagonal()) continue;
    if (leaves > kMaxLeafPaths / size) return kMaxLeafPaths + 1;
    leaves *= size;
  }
  return leaves;
}

/// Calls visit(path) for every path from `start` to `end` with nonzero
/// weight, depth first, in increasing order of intermediate indices.
inline void enumerate_paths(unsigned n, const std::vector<StepOp>& steps, BasisIndex start,
                            BasisIndex end, const std::function<void(const Path&)>& visit) {
  if (n == 0 || n >= 32) throw DomainError("qubit count out of range");
  const BasisIndex size = BasisIndex{1} << n;
  if (start >= size || end >= size) throw DomainError("endpoint out of range");
  if (leaf_path_bound(n, steps) > kMaxLeafPaths) {
    throw ResourceError("path enumeration exceeds 2^26 leaf paths");
  }
  const double edge = 1.0 / std::sqrt(static_cast<double>(size));

  Path path;
  path.indices.reserve(steps.size() + 1);
  path.indices.push_back(start);

  std::function<void(std::size_t, double)> descend = [&](std::size_t step, double weight) {
    const BasisIndex from = path.indices.back();
    if (step == steps.size()) {
      if (from == end) {
        path.amplitude = weight;
        visit(path);
      }
      return;
    }
    const StepOp& op = steps[step];
    const bool last = step + 1 == steps.size();
    auto go = [&](BasisIndex to, double a) {
      path.indices.push_back(to);
      descend(step + 1, weight * a);
      path.indices.pop_back();
    };
    if (op.diagonal()) {
      go(from, op.diagonal_phase(from));
    } else if (last) {
      go(end, wh_sign(end, from) * edge);
    } else {
      for (BasisIndex to = 0; to < size; ++to) go(to, wh_sign(to, from) * edge);
    }
  };
  descend(0, 1.0);
}

inline double path_amplitude(unsigned n, const std::vector<StepOp>& steps, BasisIndex start,
                             BasisIndex end) {
  double total = 0.0;
  enumerate_paths(n, steps, start, end, [&](const Path& p) { total += p.amplitude; });
  return total;
}

/// Runs `steps` on basis state 0 with the state-vector engine and compares
/// every final amplitude with its path sum. Returns the largest deviation.
inline double verify_against_matrix(unsigned n, const std::vector<StepOp>& steps) {
  if (n > kMaxVerifyQubits || steps.size() > kMaxVerifySteps) {
    throw ResourceError("verification limited to " + std::to_string(kMaxVerifyQubits) +
                        " qubits and " + std::to_string(kMaxVerifySteps) + " steps");
  }
  AmplitudeVector v = basis_state(n, 0);
  for (const StepOp& op : steps) {
    switch (op.kind) {
      case StepKind::kWalshHadamard:
        v = walsh_hadamard_fast(std::move(v));
        break;
      case StepKind::kFlipMarked: {
        Oracle oracle = Oracle::from_marked(n, op.marked);
        v = invert_phase_marked(std::move(v), oracle);
        break;
      }
      case StepKind::kFlipZero:
        v = invert_phase_zero(std::move(v));
        break;
    }
  }
  double worst = 0.0;
  for (BasisIndex end = 0; end < v.size(); ++end) {
    worst = std::max(worst, std::abs(v[end] - Complex(path_amplitude(n, steps, 0, end))));
  }
  return worst;
}

}  // namespace groversim::pathsum
