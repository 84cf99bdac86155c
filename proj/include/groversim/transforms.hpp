#pragma once

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"
#include "groversim/oracle.hpp"

namespace groversim {

/// Sign of the Walsh-Hadamard entry (q, r): +1 when q and r share an even
/// number of 1 bits, -1 when odd.
constexpr int wh_sign(BasisIndex q, BasisIndex r) noexcept {
  return (std::popcount(q & r) & 1) == 0 ? 1 : -1;
}

/// Entry (q, r) of the n-qubit Walsh-Hadamard matrix: wh_sign(q, r) / sqrt(2^n).
inline double wh_matrix_entry(unsigned n, BasisIndex q, BasisIndex r) {
  if (n == 0 || n >= 64) throw DomainError("qubit count out of range");
  const BasisIndex size = BasisIndex{1} << n;
  if (q >= size || r >= size) {
    throw DomainError("index out of range for " + std::to_string(n) + " qubits");
  }
  return wh_sign(q, r) / std::sqrt(static_cast<double>(size));
}

/// Reference transform, out[q] = sum_r wh_matrix_entry(n, q, r) * in[r].
/// O(N^2); meant for cross-checking the butterfly on small registers.
inline AmplitudeVector walsh_hadamard_naive(const AmplitudeVector& v) {
  const unsigned n = v.qubits();
  const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
  AmplitudeVector out = zero_state(n);
  for (BasisIndex q = 0; q < v.size(); ++q) {
    Complex acc = 0.0;
    for (BasisIndex r = 0; r < v.size(); ++r) {
      acc += static_cast<double>(wh_sign(q, r)) * v[r];
    }
    out[q] = acc * scale;
  }
  return out;
}

/// In-place butterfly. The radix-2 step on bit k maps each index pair that
/// differs only in bit k to ((x + y) / sqrt2, (x - y) / sqrt2).
///
/// Bits are consumed two at a time as a radix-4 step scaled by exactly 0.5,
/// so dyadic inputs (like every state of the four-state search) transform
/// without rounding. An odd qubit count finishes with one radix-2 step.
inline AmplitudeVector walsh_hadamard_fast(AmplitudeVector v) {
  constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
  // Low bits are finished one cache-resident tile at a time. Must be 4^k.
  constexpr std::size_t kTile = std::size_t{1} << 12;

  // Radix-4 steps for strides half_from, 4 * half_from, ... below half_to.
  auto radix4 = [](Complex* base, std::size_t len, std::size_t half_from, std::size_t half_to) {
    for (std::size_t half = half_from; half < half_to && 4 * half <= len; half <<= 2) {
      for (std::size_t block = 0; block < len; block += 4 * half) {
        for (std::size_t i = block; i < block + half; ++i) {
          const Complex w = base[i];
          const Complex x = base[i + half];
          const Complex y = base[i + 2 * half];
          const Complex z = base[i + 3 * half];
          const Complex s0 = w + x, d0 = w - x, s1 = y + z, d1 = y - z;
          base[i] = (s0 + s1) * 0.5;
          base[i + half] = (d0 + d1) * 0.5;
          base[i + 2 * half] = (s0 - s1) * 0.5;
          base[i + 3 * half] = (d0 - d1) * 0.5;
        }
      }
    }
  };

  const std::size_t size = v.size();
  Complex* a = v.amplitudes().data();
  std::size_t half = 1;
  if (size > kTile) {
    for (std::size_t tile = 0; tile < size; tile += kTile) radix4(a + tile, kTile, 1, kTile);
    half = kTile;
  }
  radix4(a, size, half, size);
  while (4 * half <= size) half <<= 2;
  if (half < size) {
    for (std::size_t i = 0; i < half; ++i) {
      const Complex x = a[i];
      const Complex y = a[i + half];
      a[i] = (x + y) * kInvSqrt2;
      a[i + half] = (x - y) * kInvSqrt2;
    }
  }
  return v;
}

// Transform used by the search driver.
inline AmplitudeVector walsh_hadamard(AmplitudeVector v) {
  return walsh_hadamard_fast(std::move(v));
}

/// Negates the amplitude of every state the oracle marks, and records one
/// evaluation pass on the oracle.
inline AmplitudeVector invert_phase_marked(AmplitudeVector v, Oracle& oracle) {
  if (oracle.qubits() != v.qubits()) {
    throw DomainError("oracle is defined on " + std::to_string(oracle.qubits()) +
                      " qubits, state has " + std::to_string(v.qubits()));
  }
  oracle.record_evaluation();
  oracle.for_each_marked([&](BasisIndex r) { v[r] = -v[r]; });
  return v;
}

inline AmplitudeVector invert_phase_zero(AmplitudeVector v) {
  v[0] = -v[0];
  return v;
}

}  // namespace groversim
