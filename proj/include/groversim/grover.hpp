#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"
#include "groversim/oracle.hpp"
#include "groversim/transforms.hpp"

namespace groversim {

// Snapshots in a trace may hold at most this many amplitudes in total.
inline constexpr std::uint64_t kMaxTraceAmplitudes = std::uint64_t{1} << 24;

struct GroverConfig {
  unsigned qubits = 0;
  Oracle oracle;
  // Loop count eta; std::nullopt resolves via optimal_iterations.
  std::optional<std::uint64_t> iterations = std::nullopt;
  std::uint64_t seed = 0;
  bool trace_every_step = false;
};

struct TraceStep {
  std::string label;        // "i" .. "v"
  std::uint64_t iteration;  // 0 for the initial transform, then 1-based
  AmplitudeVector amplitudes;
};

struct SimulationTrace {
  unsigned qubits = 0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::vector<TraceStep> steps;  // empty unless trace_every_step
  AmplitudeVector final_state;   // state just before measurement
  BasisIndex outcome = 0;
  std::uint64_t oracle_evals = 0;
  double success_probability = 0.0;
  // eta was auto-resolved with at least half the states marked; amplification
  // cannot be relied on in that regime.
  bool degenerate = false;
};

/// One search iteration: flip marked states, transform, flip state 0,
/// transform. Costs one oracle evaluation.
inline AmplitudeVector grover_iteration(AmplitudeVector v, Oracle& oracle) {
  v = invert_phase_marked(std::move(v), oracle);
  v = walsh_hadamard(std::move(v));
  v = invert_phase_zero(std::move(v));
  return walsh_hadamard(std::move(v));
}

/// Total probability on marked states. Analysis only; not counted as an
/// oracle evaluation.
inline double success_probability(const AmplitudeVector& v, const Oracle& oracle) {
  if (oracle.qubits() != v.qubits()) throw DomainError("oracle/state qubit mismatch");
  double p = 0.0;
  oracle.for_each_marked([&](BasisIndex r) { p += std::norm(v[r]); });
  return p;
}

/// Closed-form success probability after t iterations with k of N states
/// marked: sin^2((2t + 1) * asin(sqrt(k / N))).
inline double analytic_success_probability(std::uint64_t state_count,
                                           std::uint64_t marked_count, std::uint64_t t) {
  const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                           static_cast<double>(state_count)));
  const double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
  return s * s;
}

/// Iteration count that maximizes the success probability within the first
/// oscillation period. Ties go to the smaller count.
inline std::uint64_t optimal_iterations(std::uint64_t state_count,
                                        std::uint64_t marked_count = 1) {
  if (marked_count == 0) throw DomainError("at least one state must be marked");
  if (marked_count >= state_count) {
    throw DomainError("marked count " + std::to_string(marked_count) +
                      " must be below the state count " + std::to_string(state_count));
  }
  const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                           static_cast<double>(state_count)));
  // The continuous peak sits at (2t + 1) * theta = pi / 2; the integer argmax
  // is one of its neighbours.
  const double peak = std::numbers::pi / (4.0 * theta) - 0.5;
  const auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(peak)));
  const std::uint64_t hi = lo + 1;
  const double p_lo = analytic_success_probability(state_count, marked_count, lo);
  const double p_hi = analytic_success_probability(state_count, marked_count, hi);
  return p_hi > p_lo + 1e-12 ? hi : lo;
}

inline bool is_degenerate(std::uint64_t state_count, std::uint64_t marked_count) {
  return 2 * marked_count >= state_count;
}

/// Runs the full search program: transform basis state 0, apply eta
/// iterations, measure with the configured seed.
inline SimulationTrace run_grover(GroverConfig config) {
  check_qubit_count(config.qubits);
  if (config.oracle.qubits() != config.qubits) {
    throw DomainError("oracle is defined on " + std::to_string(config.oracle.qubits()) +
                      " qubits, config asks for " + std::to_string(config.qubits));
  }
  Oracle& oracle = config.oracle;
  oracle.reset_eval_count();

  const std::uint64_t states = oracle.state_count();
  std::uint64_t iterations = 0;
  bool degenerate = false;
  if (config.iterations) {
    iterations = *config.iterations;
  } else {
    const std::uint64_t k = oracle.marked_count();
    if (k == 0) throw DomainError("automatic iteration count needs a marked state");
    degenerate = is_degenerate(states, k);
    iterations = k < states ? optimal_iterations(states, k) : 0;
  }

  std::vector<TraceStep> steps;
  if (config.trace_every_step) {
    const std::uint64_t snapshots = 1 + 4 * iterations;
    if (iterations > kMaxTraceAmplitudes || snapshots * states > kMaxTraceAmplitudes) {
      throw ResourceError("trace would hold " + std::to_string(snapshots) +
                          " snapshots of " + std::to_string(states) + " amplitudes");
    }
    steps.reserve(snapshots);
  }
  auto snapshot = [&](const char* label, std::uint64_t t, const AmplitudeVector& v) {
    if (config.trace_every_step) steps.push_back({label, t, v});
  };

  AmplitudeVector v = walsh_hadamard(basis_state(config.qubits, 0));
  snapshot("i", 0, v);
  for (std::uint64_t t = 1; t <= iterations; ++t) {
    if (!config.trace_every_step) {
      v = grover_iteration(std::move(v), oracle);
      continue;
    }
    v = invert_phase_marked(std::move(v), oracle);
    snapshot("ii", t, v);
    v = walsh_hadamard(std::move(v));
    snapshot("iii", t, v);
    v = invert_phase_zero(std::move(v));
    snapshot("iv", t, v);
    v = walsh_hadamard(std::move(v));
    snapshot("v", t, v);
  }

  const double p_success = success_probability(v, oracle);
  Rng rng(config.seed);
  const BasisIndex outcome = measure(v, rng).outcome;
  return SimulationTrace{.qubits = config.qubits,
                         .seed = config.seed,
                         .iterations = iterations,
                         .steps = std::move(steps),
                         .final_state = std::move(v),
                         .outcome = outcome,
                         .oracle_evals = oracle.eval_count(),
                         .success_probability = p_success,
                         .degenerate = degenerate};
}

struct ScanPoint {
  std::uint64_t t;
  double success_probability;
};

/// Exact success probability after t = 0 .. t_max iterations, computed from
/// the state vector (never sampled).
inline std::vector<ScanPoint> scan_probabilities(const GroverConfig& config,
                                                 std::uint64_t t_max) {
  if (t_max < 1) throw DomainError("scan needs at least one iteration");
  check_qubit_count(config.qubits);
  if (config.oracle.qubits() != config.qubits) throw DomainError("oracle/config qubit mismatch");
  Oracle oracle = config.oracle;
  std::vector<ScanPoint> series;
  series.reserve(t_max + 1);
  AmplitudeVector v = walsh_hadamard(basis_state(config.qubits, 0));
  series.push_back({0, success_probability(v, oracle)});
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    v = grover_iteration(std::move(v), oracle);
    series.push_back({t, success_probability(v, oracle)});
  }
  return series;
}

struct ClassicalResult {
  double empirical = 0.0;
  double analytic = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t iterations = 0;
};

/// 1 - (1 - k/N)^iterations: chance that `iterations` independent uniform
/// draws hit one of k marked values.
inline double classical_analytic(std::uint64_t state_count, std::uint64_t marked_count,
                                 std::uint64_t iterations) {
  const double miss = 1.0 - static_cast<double>(marked_count) / static_cast<double>(state_count);
  return 1.0 - std::pow(miss, static_cast<double>(iterations));
}

/// Smallest iteration count whose analytic classical success reaches target.
inline std::uint64_t classical_iterations_needed(std::uint64_t state_count,
                                                 std::uint64_t marked_count, double target) {
  if (marked_count == 0 || marked_count > state_count) throw DomainError("bad marked count");
  if (target <= 0.0) return 0;
  if (marked_count == state_count) return 1;
  const double miss = 1.0 - static_cast<double>(marked_count) / static_cast<double>(state_count);
  auto k = static_cast<std::uint64_t>(std::ceil(std::log1p(-target) / std::log(miss)));
  while (k > 0 && classical_analytic(state_count, marked_count, k - 1) >= target) --k;
  while (classical_analytic(state_count, marked_count, k) < target) ++k;
  return k;
}

/// Monte Carlo of the classical randomized search: draw r uniformly, check
/// f(r), redraw, for `iterations` checks; a trial succeeds if any check hits.
inline ClassicalResult classical_baseline(std::uint64_t state_count,
                                          std::vector<BasisIndex> marked,
                                          std::uint64_t iterations, std::uint64_t trials,
                                          std::uint64_t seed) {
  if (state_count == 0) throw DomainError("state count must be positive");
  if (trials == 0) throw DomainError("trials must be at least 1");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  for (BasisIndex r : marked) {
    if (r >= state_count) {
      throw DomainError("marked index " + std::to_string(r) + " out of range for size " +
                        std::to_string(state_count));
    }
  }
  auto f = [&](BasisIndex r) { return std::binary_search(marked.begin(), marked.end(), r); };

  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    BasisIndex r = uniform_index(rng, state_count);
    for (std::uint64_t i = 0; i < iterations; ++i) {
      if (f(r)) {
        ++hits;
        break;
      }
      r = uniform_index(rng, state_count);
    }
  }
  return {static_cast<double>(hits) / static_cast<double>(trials),
          classical_analytic(state_count, marked.size(), iterations), trials, iterations};
}

}  // namespace groversim
