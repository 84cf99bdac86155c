#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "groversim/amplitude.hpp"
#include "groversim/reversible.hpp"

namespace {

using namespace groversim;

// Every NOT, CNOT and TOFFOLI placement on `wires` lines.
std::vector<Gate> all_gates(unsigned wires) {
  std::vector<Gate> gates;
  for (unsigned t = 0; t < wires; ++t) {
    gates.push_back(Gate::not_gate(t));
    for (unsigned c = 0; c < wires; ++c) {
      if (c == t) continue;
      gates.push_back(Gate::cnot(c, t));
      for (unsigned c2 = c + 1; c2 < wires; ++c2) {
        if (c2 != t) gates.push_back(Gate::toffoli(c, c2, t));
      }
    }
  }
  return gates;
}

ReversibleCircuit random_circuit(unsigned wires, std::size_t length, std::mt19937_64& gen) {
  const std::vector<Gate> pool = all_gates(wires);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  ReversibleCircuit c{wires, {}};
  for (std::size_t i = 0; i < length; ++i) c.gates.push_back(pool[pick(gen)]);
  return c;
}

TEST(ApplyGate, ToffoliAndCnot) {
  EXPECT_EQ(apply_gate(BitVector{true, true, false}, Gate::toffoli(0, 1, 2)),
            (BitVector{true, true, true}));
  EXPECT_EQ(apply_gate(BitVector{true, false, false}, Gate::toffoli(0, 1, 2)),
            (BitVector{true, false, false}));
  EXPECT_EQ(apply_gate(BitVector{false, true}, Gate::cnot(0, 1)), (BitVector{false, true}));
  EXPECT_EQ(apply_gate(BitVector{true, true}, Gate::cnot(0, 1)), (BitVector{true, false}));
  EXPECT_EQ(apply_gate(BitVector{false}, Gate::not_gate(0)), (BitVector{true}));
}

TEST(ApplyGate, RejectsInvalidIndices) {
  EXPECT_THROW(apply_gate(BitVector{true, false}, Gate::not_gate(2)), DomainError);
  EXPECT_THROW(apply_gate(BitVector{true, false}, Gate::cnot(1, 1)), DomainError);
  EXPECT_THROW(apply_gate(BitVector{true, false, true}, Gate::toffoli(0, 0, 2)), DomainError);
  Gate bad = Gate::cnot(0, 1);
  bad.controls.push_back(2);
  EXPECT_THROW(apply_gate(BitVector{true, false, true}, bad), DomainError);
}

TEST(ApplyGate, SelfInverseOnThreeWires) {
  for (const Gate& g : all_gates(3)) {
    for (std::uint64_t x = 0; x < 8; ++x) {
      const BitVector in = unpack_bits(x, 3);
      EXPECT_EQ(apply_gate(apply_gate(in, g), g), in);
    }
  }
}

TEST(ApplyGate, InvolutionExhaustiveUpToTwelveWires) {
  for (unsigned wires = 1; wires <= 12; ++wires) {
    const std::uint64_t size = std::uint64_t{1} << wires;
    for (const Gate& g : all_gates(wires)) {
      for (std::uint64_t x = 0; x < size; ++x) {
        ASSERT_EQ(apply_gate(apply_gate(x, g), g), x);
      }
      ASSERT_TRUE(check_bijection(truth_table({wires, {g}}), wires));
    }
  }
}

TEST(RunCircuit, AdderTruthTable) {
  const ReversibleCircuit adder = adder_circuit();
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      const BitVector out = run_circuit(adder, BitVector{a, b, false});
      EXPECT_EQ(out[0], a);
      EXPECT_EQ(out[1], a != b) << "SUM";
      EXPECT_EQ(out[2], a && b) << "CARRY";
    }
  }
  EXPECT_EQ(run_circuit(adder, BitVector{true, true, false}), (BitVector{true, false, true}));
  EXPECT_EQ(run_circuit(adder, BitVector{false, false, false}), (BitVector{false, false, false}));
  EXPECT_EQ(run_circuit(adder, BitVector{true, false, false}), (BitVector{true, true, false}));
  EXPECT_EQ(run_circuit(adder, BitVector{false, true, false}), (BitVector{false, true, false}));
  EXPECT_EQ(run_circuit(adder, BitVector{true, true, true}), (BitVector{true, false, false}));
}

TEST(RunCircuit, AdderLayout) {
  const ReversibleCircuit adder = adder_circuit();
  EXPECT_EQ(adder.wires, 3u);
  ASSERT_EQ(adder.gates.size(), 2u);
  EXPECT_EQ(adder.gates[0], Gate::toffoli(0, 1, 2));
  EXPECT_EQ(adder.gates[1], Gate::cnot(0, 1));
}

// Swapping the two gates overwrites B before the carry is taken.
TEST(RunCircuit, GateOrderMatters) {
  const ReversibleCircuit swapped{3, {Gate::cnot(0, 1), Gate::toffoli(0, 1, 2)}};
  EXPECT_NE(run_circuit(swapped, BitVector{true, true, false}),
            run_circuit(adder_circuit(), BitVector{true, true, false}));
}

TEST(RunCircuit, WidthMismatch) {
  EXPECT_THROW(run_circuit(adder_circuit(), BitVector{true, true}), DomainError);
}

TEST(InverseCircuit, ComposesToIdentity) {
  const ReversibleCircuit adder = adder_circuit();
  const ReversibleCircuit inv = inverse_circuit(adder);
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(run_circuit(inv, run_circuit(adder, x)), x);
  EXPECT_TRUE(inverse_circuit({4, {}}).gates.empty());
  const ReversibleCircuit single{1, {Gate::not_gate(0)}};
  EXPECT_EQ(inverse_circuit(single), single);
}

TEST(InverseCircuit, RandomCircuitsUpToTwelveWires) {
  std::mt19937_64 gen(21);
  for (unsigned wires = 1; wires <= 12; ++wires) {
    for (int trial = 0; trial < 4; ++trial) {
      const ReversibleCircuit c = random_circuit(wires, 3 * wires, gen);
      const ReversibleCircuit inv = inverse_circuit(c);
      const std::vector<std::uint64_t> table = truth_table(c);
      ASSERT_TRUE(check_bijection(table, wires));
      for (std::uint64_t x = 0; x < table.size(); ++x) ASSERT_EQ(run_circuit(inv, table[x]), x);
    }
  }
}

TEST(CheckBijection, NandIsNotReversible) {
  // (A, B) -> (A, A NAND B), wire 0 = A.
  std::vector<BitVector> nand;
  for (std::uint64_t x = 0; x < 4; ++x) {
    const bool a = x & 1, b = (x >> 1) & 1;
    nand.push_back({a, !(a && b)});
  }
  EXPECT_FALSE(check_bijection(nand));

  std::vector<BitVector> cnot, identity;
  for (std::uint64_t x = 0; x < 4; ++x) {
    cnot.push_back(apply_gate(unpack_bits(x, 2), Gate::cnot(0, 1)));
    identity.push_back(unpack_bits(x, 2));
  }
  EXPECT_TRUE(check_bijection(cnot));
  EXPECT_TRUE(check_bijection(identity));
}

TEST(CheckBijection, MalformedTables) {
  const std::vector<std::uint64_t> short_table{0, 1, 2};
  const std::vector<std::uint64_t> out_of_range{0, 1, 2, 4};
  EXPECT_FALSE(check_bijection(short_table, 2));
  EXPECT_FALSE(check_bijection(out_of_range, 2));
  EXPECT_FALSE(check_bijection(std::vector<BitVector>{}));
}

TEST(CircuitToPermutation, Examples) {
  EXPECT_EQ(circuit_to_permutation({1, {Gate::not_gate(0)}}), (std::vector<BasisIndex>{1, 0}));
  const std::vector<BasisIndex> p = circuit_to_permutation(adder_circuit());
  ASSERT_EQ(p.size(), 8u);
  EXPECT_TRUE(check_bijection(p, 3));
  const AmplitudeVector lifted = apply_permutation(uniform_state(3), p);
  EXPECT_LE(max_abs_difference(lifted, uniform_state(3)), 0.0);
}

// Lifting a circuit relabels basis states exactly and preserves the norm.
TEST(CircuitToPermutation, LiftConsistency) {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> gauss;
  for (unsigned wires = 1; wires <= 8; ++wires) {
    const ReversibleCircuit c = random_circuit(wires, 2 * wires + 1, gen);
    const std::vector<BasisIndex> p = circuit_to_permutation(c);
    for (std::uint64_t x = 0; x < p.size(); ++x) {
      EXPECT_EQ(apply_permutation(basis_state(wires, x), p), basis_state(wires, run_circuit(c, x)));
    }
    std::vector<Complex> amps(p.size());
    double sum = 0.0;
    for (Complex& a : amps) {
      a = {gauss(gen), gauss(gen)};
      sum += std::norm(a);
    }
    for (Complex& a : amps) a /= std::sqrt(sum);
    const AmplitudeVector v = AmplitudeVector::from_amplitudes(amps);
    EXPECT_NEAR(norm(apply_permutation(v, p)), norm(v), 1e-15);
  }
}

}  // namespace
