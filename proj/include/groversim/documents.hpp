#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"
#include "groversim/grover.hpp"
#include "groversim/reversible.hpp"

// JSON documents exchanged by the command-line tool.
//
// Trace:
//   {"format_version": "1", "n": 2,
//    "rng": {"algorithm": "mt19937_64", "seed": 7},
//    "steps": [{"label": "i", "iteration": 0, "amplitudes": [[0.5, 0.0], ...]}, ...],
//    "outcome": 2, "oracle_evals": 1}
//
// Circuit (wire 0 is the top schematic line):
//   {"format_version": "1", "wires": 3,
//    "gates": [{"type": "TOFFOLI", "target": 2, "controls": [0, 1]}, ...]}
//
// Doubles are written in shortest round-trip form, so re-parsing yields the
// identical value.

namespace groversim::documents {

using nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";

struct TraceStepRecord {
  std::string label;
  std::uint64_t iteration = 0;
  std::vector<Complex> amplitudes;

  friend bool operator==(const TraceStepRecord&, const TraceStepRecord&) = default;
};

struct TraceDocument {
  std::string format_version{kFormatVersion};
  unsigned n = 0;
  std::string rng_algorithm{kRngAlgorithm};
  std::uint64_t seed = 0;
  std::vector<TraceStepRecord> steps;
  BasisIndex outcome = 0;
  std::uint64_t oracle_evals = 0;

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

inline TraceDocument make_trace_document(const SimulationTrace& trace) {
  TraceDocument doc;
  doc.n = trace.qubits;
  doc.seed = trace.seed;
  doc.outcome = trace.outcome;
  doc.oracle_evals = trace.oracle_evals;
  doc.steps.reserve(trace.steps.size());
  for (const TraceStep& s : trace.steps) {
    doc.steps.push_back({s.label, s.iteration, {s.amplitudes.begin(), s.amplitudes.end()}});
  }
  return doc;
}

namespace detail {

// Folds -0.0 into 0.0 so sign flips of zero amplitudes do not show up in output.
inline double clean(double x) { return x + 0.0; }

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw DomainError(where + ": " + what);
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::uint64_t as_uint(const json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    fail(where, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

inline double as_double(const json& value, const std::string& where) {
  if (!value.is_number()) fail(where, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(where, "expected a finite number");
  return x;
}

inline std::string as_string(const json& value, const std::string& where) {
  if (!value.is_string()) fail(where, "expected a string");
  return value.get<std::string>();
}

inline void check_version(const json& doc) {
  if (as_string(field(doc, "format_version", "document"), "format_version") != kFormatVersion) {
    fail("format_version", "unsupported version, expected \"1\"");
  }
}

}  // namespace detail

inline json to_json(const TraceDocument& doc) {
  json steps = json::array();
  for (const TraceStepRecord& s : doc.steps) {
    json amps = json::array();
    for (const Complex& c : s.amplitudes) {
      amps.push_back({detail::clean(c.real()), detail::clean(c.imag())});
    }
    steps.push_back({{"label", s.label}, {"iteration", s.iteration}, {"amplitudes", std::move(amps)}});
  }
  return {{"format_version", doc.format_version},
          {"n", doc.n},
          {"rng", {{"algorithm", doc.rng_algorithm}, {"seed", doc.seed}}},
          {"steps", std::move(steps)},
          {"outcome", doc.outcome},
          {"oracle_evals", doc.oracle_evals}};
}

/// Parses and validates a trace: each step has 2^n amplitudes and unit norm
/// within 1e-10. Errors name the offending field.
inline TraceDocument trace_from_json(const json& j) {
  using namespace detail;
  check_version(j);
  TraceDocument doc;
  const std::uint64_t n = as_uint(field(j, "n", "document"), "n");
  if (n == 0 || n > kHardQubitLimit) fail("n", "qubit count out of range");
  doc.n = static_cast<unsigned>(n);
  const json& rng = field(j, "rng", "document");
  doc.rng_algorithm = as_string(field(rng, "algorithm", "rng"), "rng.algorithm");
  doc.seed = as_uint(field(rng, "seed", "rng"), "rng.seed");
  doc.outcome = as_uint(field(j, "outcome", "document"), "outcome");
  doc.oracle_evals = as_uint(field(j, "oracle_evals", "document"), "oracle_evals");
  if (doc.outcome >= (BasisIndex{1} << n)) fail("outcome", "basis index out of range");

  const json& steps = field(j, "steps", "document");
  if (!steps.is_array()) fail("steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "steps[" + std::to_string(i) + "]";
    TraceStepRecord rec;
    rec.label = as_string(field(steps[i], "label", where), where + ".label");
    rec.iteration = as_uint(field(steps[i], "iteration", where), where + ".iteration");
    const json& amps = field(steps[i], "amplitudes", where);
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
      fail(where + ".amplitudes", "expected " + std::to_string(std::size_t{1} << n) + " entries");
    }
    double sum = 0.0;
    for (std::size_t r = 0; r < amps.size(); ++r) {
      const std::string at = where + ".amplitudes[" + std::to_string(r) + "]";
      if (!amps[r].is_array() || amps[r].size() != 2) fail(at, "expected [re, im]");
      const Complex c(as_double(amps[r][0], at), as_double(amps[r][1], at));
      sum += std::norm(c);
      rec.amplitudes.push_back(c);
    }
    if (std::abs(std::sqrt(sum) - 1.0) > kNormTolerance) fail(where, "amplitudes are not unit norm");
    doc.steps.push_back(std::move(rec));
  }
  return doc;
}

inline json to_json(const ReversibleCircuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    gates.push_back({{"type", std::string(to_string(g.kind))},
                     {"target", g.target},
                     {"controls", g.controls}});
  }
  return {{"format_version", std::string(kFormatVersion)}, {"wires", c.wires}, {"gates", std::move(gates)}};
}

inline ReversibleCircuit circuit_from_json(const json& j) {
  using namespace detail;
  check_version(j);
  ReversibleCircuit c;
  const std::uint64_t wires = as_uint(field(j, "wires", "document"), "wires");
  if (wires == 0 || wires > kMaxWires) fail("wires", "must be in [1, 64]");
  c.wires = static_cast<unsigned>(wires);
  const json& gates = field(j, "gates", "document");
  if (!gates.is_array()) fail("gates", "expected an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string where = "gates[" + std::to_string(i) + "]";
    Gate g;
    const std::string type = as_string(field(gates[i], "type", where), where + ".type");
    if (type == "NOT") {
      g.kind = GateKind::kNot;
    } else if (type == "CNOT") {
      g.kind = GateKind::kCnot;
    } else if (type == "TOFFOLI") {
      g.kind = GateKind::kToffoli;
    } else {
      fail(where + ".type", "unknown gate \"" + type + "\"");
    }
    const std::uint64_t target = as_uint(field(gates[i], "target", where), where + ".target");
    if (target >= wires) fail(where + ".target", "wire out of range");
    g.target = static_cast<unsigned>(target);
    const json& controls = field(gates[i], "controls", where);
    if (!controls.is_array()) fail(where + ".controls", "expected an array");
    for (std::size_t k = 0; k < controls.size(); ++k) {
      const std::string at = where + ".controls[" + std::to_string(k) + "]";
      const std::uint64_t w = as_uint(controls[k], at);
      if (w >= wires) fail(at, "wire out of range");
      g.controls.push_back(static_cast<unsigned>(w));
    }
    try {
      validate(g, c.wires);
    } catch (const DomainError& e) {
      fail(where, e.what());
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
  if (!out) throw DomainError("write failed for " + path);
}

}  // namespace groversim::documents
