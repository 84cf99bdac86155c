#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"

namespace groversim {

// Wire i of a circuit is bit i of its packed integer encoding. Wire 0 is the
// top line of a schematic.
using BitVector = std::vector<bool>;

inline constexpr unsigned kMaxWires = 64;

enum class GateKind { kNot, kCnot, kToffoli };

constexpr std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kNot: return "NOT";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
  }
  return "?";
}

constexpr std::size_t control_count(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kNot: return 0;
    case GateKind::kCnot: return 1;
    case GateKind::kToffoli: return 2;
  }
  return 0;
}

/// NOT:     A -> NOT A
/// CNOT:    (A, B) -> (A, A XOR B)
/// TOFFOLI: (A, B, C) -> (A, B, AB XOR C)
/// The target is the last wire in each tuple; the others are controls.
struct Gate {
  GateKind kind = GateKind::kNot;
  unsigned target = 0;
  std::vector<unsigned> controls;

  static Gate not_gate(unsigned target) { return {GateKind::kNot, target, {}}; }
  static Gate cnot(unsigned control, unsigned target) {
    return {GateKind::kCnot, target, {control}};
  }
  static Gate toffoli(unsigned c0, unsigned c1, unsigned target) {
    return {GateKind::kToffoli, target, {c0, c1}};
  }

  std::uint64_t control_mask() const noexcept {
    std::uint64_t mask = 0;
    for (unsigned c : controls) mask |= std::uint64_t{1} << c;
    return mask;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline void validate(const Gate& g, unsigned wires) {
  const std::string name(to_string(g.kind));
  if (g.controls.size() != control_count(g.kind)) {
    throw DomainError(name + " takes " + std::to_string(control_count(g.kind)) +
                      " controls, got " + std::to_string(g.controls.size()));
  }
  if (g.target >= wires) {
    throw DomainError(name + " target wire " + std::to_string(g.target) + " out of range");
  }
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const unsigned c = g.controls[i];
    if (c >= wires) {
      throw DomainError(name + " control wire " + std::to_string(c) + " out of range");
    }
    if (c == g.target) throw DomainError(name + " control equals target");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.controls[j] == c) throw DomainError(name + " has a repeated control");
    }
  }
}

struct ReversibleCircuit {
  unsigned wires = 0;
  std::vector<Gate> gates;

  friend bool operator==(const ReversibleCircuit&, const ReversibleCircuit&) = default;
};

inline void validate(const ReversibleCircuit& c) {
  if (c.wires == 0 || c.wires > kMaxWires) {
    throw DomainError("wire count must be in [1, " + std::to_string(kMaxWires) + "]");
  }
  for (const Gate& g : c.gates) validate(g, c.wires);
}

// Packed form: flips the target when every control is 1.
inline std::uint64_t apply_gate(std::uint64_t bits, const Gate& g) noexcept {
  const std::uint64_t mask = g.control_mask();
  if ((bits & mask) == mask) bits ^= std::uint64_t{1} << g.target;
  return bits;
}

inline std::uint64_t pack_bits(const BitVector& bits) {
  if (bits.size() > kMaxWires) throw DomainError("bit vector wider than 64");
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) packed |= std::uint64_t{1} << i;
  }
  return packed;
}

inline BitVector unpack_bits(std::uint64_t packed, unsigned wires) {
  BitVector bits(wires);
  for (unsigned i = 0; i < wires; ++i) bits[i] = ((packed >> i) & 1) != 0;
  return bits;
}

inline BitVector apply_gate(const BitVector& bits, const Gate& g) {
  if (bits.size() > kMaxWires) throw DomainError("bit vector wider than 64");
  validate(g, static_cast<unsigned>(bits.size()));
  return unpack_bits(apply_gate(pack_bits(bits), g), static_cast<unsigned>(bits.size()));
}

// Packed form; the circuit is assumed valid.
inline std::uint64_t run_circuit(const ReversibleCircuit& c, std::uint64_t input) noexcept {
  for (const Gate& g : c.gates) input = apply_gate(input, g);
  return input;
}

inline BitVector run_circuit(const ReversibleCircuit& c, const BitVector& input) {
  validate(c);
  if (input.size() != c.wires) {
    throw DomainError("input has " + std::to_string(input.size()) + " bits, circuit has " +
                      std::to_string(c.wires) + " wires");
  }
  return unpack_bits(run_circuit(c, pack_bits(input)), c.wires);
}

/// One-bit full adder on three wires (A, B, ancilla): a Toffoli writes
/// A AND B into the ancilla, then a CNOT replaces B by A XOR B. With the
/// ancilla at 0 the outputs are (A, SUM, CARRY).
inline ReversibleCircuit adder_circuit() {
  return {3, {Gate::toffoli(0, 1, 2), Gate::cnot(0, 1)}};
}

// Every gate here is its own inverse, so reversing the list inverts the circuit.
inline ReversibleCircuit inverse_circuit(const ReversibleCircuit& c) {
  return {c.wires, {c.gates.rbegin(), c.gates.rend()}};
}

/// True iff `table` (outputs indexed by input) is a permutation of
/// [0, 2^wires).
inline bool check_bijection(std::span<const std::uint64_t> table, unsigned wires) {
  if (wires >= kMaxWires || table.size() != (std::uint64_t{1} << wires)) return false;
  std::vector<bool> seen(table.size(), false);
  for (std::uint64_t out : table) {
    if (out >= table.size() || seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

inline bool check_bijection(std::span<const BitVector> table) {
  if (table.empty()) return false;
  const std::size_t width = table.front().size();
  std::vector<std::uint64_t> packed;
  packed.reserve(table.size());
  for (const BitVector& row : table) {
    if (row.size() != width || width > kMaxWires) return false;
    packed.push_back(pack_bits(row));
  }
  return check_bijection(packed, static_cast<unsigned>(width));
}

/// Output of the circuit for every input, indexed by the packed input.
inline std::vector<std::uint64_t> truth_table(const ReversibleCircuit& c) {
  validate(c);
  if (c.wires > qubit_cap()) {
    throw ResourceError("truth table over " + std::to_string(c.wires) + " wires exceeds cap");
  }
  std::vector<std::uint64_t> table(std::size_t{1} << c.wires);
  for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = run_circuit(c, x);
  return table;
}

/// The circuit as a relabeling of basis states, p(r) = run_circuit(c, r).
/// Feed to apply_permutation to act on a wavefunction.
inline std::vector<BasisIndex> circuit_to_permutation(const ReversibleCircuit& c) {
  std::vector<BasisIndex> p = truth_table(c);
  if (!check_bijection(p, c.wires)) {
    throw std::logic_error("reversible circuit produced a non-bijective table");
  }
  return p;
}

}  // namespace groversim
