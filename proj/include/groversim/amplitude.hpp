#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groversim/errors.hpp"

namespace groversim {

using Complex = std::complex<double>;

// Index of a computational basis state. Bit 0 is the least significant qubit.
using BasisIndex = std::uint64_t;

// Seedable generator used for every sampled quantity. The standard fixes the
// output sequence of mt19937_64, so seeded runs replay across platforms.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

inline constexpr unsigned kDefaultQubitCap = 24;
inline constexpr unsigned kHardQubitLimit = 40;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kMeasureNormTolerance = 1e-6;

/// Largest qubit count any state may have. Defaults to 24; the
/// GROVERSIM_MAX_QUBITS environment variable overrides it (clamped to
/// [1, 40]). Unparseable values fall back to the default.
inline unsigned qubit_cap() {
  const char* env = std::getenv("GROVERSIM_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return kDefaultQubitCap;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return kDefaultQubitCap;
  return value > kHardQubitLimit ? kHardQubitLimit : static_cast<unsigned>(value);
}

inline void check_qubit_count(unsigned n) {
  if (n == 0) throw DomainError("qubit count must be at least 1");
  if (n > qubit_cap()) {
    throw ResourceError("qubit count " + std::to_string(n) + " exceeds cap " +
                        std::to_string(qubit_cap()));
  }
}

// Uniform double in [0, 1) from the top 53 bits of one generator output.
// Avoids std::uniform_real_distribution, whose algorithm is unspecified.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be nonzero.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Dense wavefunction over n qubits: one complex amplitude per basis state,
/// indexed directly by BasisIndex.
///
/// The class only guarantees the length invariant (2^n entries, finite
/// values). Unit norm is maintained by the operations in this library and
/// checked where an operation depends on it (see measure()).
class AmplitudeVector {
 public:
  /// Wraps an explicit amplitude list. The length must be a power of two
  /// of at least 2 and every entry finite.
  static AmplitudeVector from_amplitudes(std::vector<Complex> amps) {
    const std::size_t size = amps.size();
    if (size < 2 || !std::has_single_bit(size)) {
      throw DomainError("amplitude count must be a power of two >= 2, got " +
                        std::to_string(size));
    }
    const auto n = static_cast<unsigned>(std::countr_zero(size));
    check_qubit_count(n);
    for (const Complex& a : amps) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw DomainError("amplitudes must be finite");
      }
    }
    return AmplitudeVector(n, std::move(amps));
  }

  static AmplitudeVector from_real(std::span<const double> values) {
    return from_amplitudes(std::vector<Complex>(values.begin(), values.end()));
  }

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }

  const Complex& operator[](BasisIndex r) const noexcept { return amps_[r]; }
  Complex& operator[](BasisIndex r) noexcept { return amps_[r]; }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  auto begin() const noexcept { return amps_.begin(); }
  auto end() const noexcept { return amps_.end(); }

  bool contains(BasisIndex r) const noexcept { return r < amps_.size(); }

  friend bool operator==(const AmplitudeVector&, const AmplitudeVector&) = default;

 private:
  friend AmplitudeVector zero_state(unsigned n);

  AmplitudeVector(unsigned n, std::vector<Complex> amps)
      : qubits_(n), amps_(std::move(amps)) {}

  unsigned qubits_ = 0;
  std::vector<Complex> amps_;
};

// All-zero vector of the right length. Not a valid wavefunction on its own;
// callers fill it in.
inline AmplitudeVector zero_state(unsigned n) {
  check_qubit_count(n);
  return AmplitudeVector(n, std::vector<Complex>(std::size_t{1} << n));
}

inline void check_index(const AmplitudeVector& v, BasisIndex r) {
  if (!v.contains(r)) {
    throw DomainError("basis index " + std::to_string(r) + " out of range for " +
                      std::to_string(v.qubits()) + " qubits");
  }
}

inline AmplitudeVector basis_state(unsigned n, BasisIndex r) {
  AmplitudeVector v = zero_state(n);
  check_index(v, r);
  v[r] = 1.0;
  return v;
}

inline AmplitudeVector uniform_state(unsigned n) {
  AmplitudeVector v = zero_state(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(v.size()));
  for (Complex& c : v.amplitudes()) c = a;
  return v;
}

inline double probability(const AmplitudeVector& v, BasisIndex r) {
  check_index(v, r);
  return std::norm(v[r]);
}

inline double norm(const AmplitudeVector& v) {
  double sum = 0.0;
  for (const Complex& c : v) sum += std::norm(c);
  return std::sqrt(sum);
}

struct Measurement {
  BasisIndex outcome = 0;
  AmplitudeVector collapsed;
};

/// Full measurement in the computational basis. Draws r with probability
/// |amps[r]|^2 using one generator output, then collapses to basis_state(r).
/// Zero-probability states are never returned.
inline Measurement measure(const AmplitudeVector& v, Rng& rng) {
  const double nv = norm(v);
  if (std::abs(nv - 1.0) > kMeasureNormTolerance) {
    throw StateError("cannot measure a state with norm " + std::to_string(nv));
  }
  const double u = uniform_unit(rng) * nv * nv;
  double cumulative = 0.0;
  BasisIndex last_nonzero = 0;
  for (BasisIndex r = 0; r < v.size(); ++r) {
    const double p = std::norm(v[r]);
    if (p == 0.0) continue;
    last_nonzero = r;
    cumulative += p;
    if (u < cumulative) return {r, basis_state(v.qubits(), r)};
  }
  // u landed in the rounding slack above the final cumulative sum.
  return {last_nonzero, basis_state(v.qubits(), last_nonzero)};
}

/// Negates amps[r] wherever selector(r) holds.
template <std::predicate<BasisIndex> Selector>
AmplitudeVector apply_phase_flip(AmplitudeVector v, Selector&& selector) {
  for (BasisIndex r = 0; r < v.size(); ++r) {
    if (selector(r)) v[r] = -v[r];
  }
  return v;
}

/// Relabels basis states: out[p[r]] = in[r]. p must be a bijection on
/// [0, 2^n); a duplicate or out-of-range target is a DomainError.
inline AmplitudeVector apply_permutation(const AmplitudeVector& v,
                                         std::span<const BasisIndex> p) {
  if (p.size() != v.size()) {
    throw DomainError("permutation length " + std::to_string(p.size()) +
                      " does not match state size " + std::to_string(v.size()));
  }
  AmplitudeVector out = zero_state(v.qubits());
  std::vector<bool> hit(v.size(), false);
  for (BasisIndex r = 0; r < v.size(); ++r) {
    const BasisIndex target = p[r];
    if (target >= v.size()) {
      throw DomainError("permutation target " + std::to_string(target) + " out of range");
    }
    if (hit[target]) {
      throw DomainError("permutation is not a bijection: target " +
                        std::to_string(target) + " repeated");
    }
    hit[target] = true;
    out[target] = v[r];
  }
  return out;
}

// Largest elementwise |a[r] - b[r]|. Sizes must match.
inline double max_abs_difference(const AmplitudeVector& a, const AmplitudeVector& b) {
  if (a.size() != b.size()) throw DomainError("size mismatch");
  double worst = 0.0;
  for (BasisIndex r = 0; r < a.size(); ++r) {
    worst = std::max(worst, std::abs(a[r] - b[r]));
  }
  return worst;
}

}  // namespace groversim
