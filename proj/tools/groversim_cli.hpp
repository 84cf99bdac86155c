#pragma once

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groversim/documents.hpp"
#include "groversim/groversim.hpp"

namespace groversim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline std::string format_double(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << (x + 0.0);
  return s.str();
}

inline std::optional<std::uint64_t> parse_iterations(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("--iterations must be a non-negative integer or \"auto\", got \"" + text +
                      "\"");
  }
  return value;
}

// Leftmost character is wire 0.
inline BitVector parse_bitstring(const std::string& text) {
  BitVector bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw DomainError("--input must contain only 0 and 1");
    bits.push_back(ch == '1');
  }
  return bits;
}

inline std::string format_bits(const BitVector& bits) {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

struct GroverArgs {
  unsigned qubits = 0;
  std::vector<std::uint64_t> marked;
  std::string iterations = "auto";
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string format = "text";
  std::uint64_t max_iterations = 0;
};

struct ClassicalArgs {
  std::uint64_t size = 0;
  std::vector<std::uint64_t> marked;
  std::uint64_t iterations = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

struct CircuitArgs {
  std::string path;
  std::string input;
  std::string output;
};

inline int grover_run(const GroverArgs& a, std::ostream& out, std::ostream& err) {
  check_qubit_count(a.qubits);
  GroverConfig config{.qubits = a.qubits,
                      .oracle = Oracle::from_marked(a.qubits, a.marked),
                      .iterations = parse_iterations(a.iterations),
                      .seed = a.seed,
                      .trace_every_step = !a.trace_path.empty()};
  const SimulationTrace trace = run_grover(std::move(config));
  if (trace.degenerate) {
    err << "warning: at least half of the states are marked; amplification is not expected "
           "to help\n";
  }
  if (!a.trace_path.empty()) {
    documents::write_file(a.trace_path,
                          documents::to_json(documents::make_trace_document(trace)).dump(2) + "\n");
  }
  if (a.format == "json") {
    const documents::json summary = {{"outcome", trace.outcome},
                                     {"success_probability", trace.success_probability},
                                     {"iterations", trace.iterations},
                                     {"oracle_evals", trace.oracle_evals},
                                     {"degenerate", trace.degenerate},
                                     {"rng", {{"algorithm", std::string(kRngAlgorithm)},
                                              {"seed", trace.seed}}}};
    out << summary.dump() << "\n";
  } else {
    out << "outcome: " << trace.outcome << "\n"
        << "success_probability: " << format_double(trace.success_probability, 15) << "\n"
        << "iterations: " << trace.iterations << "\n"
        << "oracle_evals: " << trace.oracle_evals << "\n"
        << "rng: " << kRngAlgorithm << " seed=" << trace.seed << "\n";
  }
  return kExitOk;
}

inline int grover_scan(const GroverArgs& a, std::ostream& out) {
  check_qubit_count(a.qubits);
  if (a.max_iterations < 1) throw DomainError("--max-iterations must be at least 1");
  const GroverConfig config{.qubits = a.qubits, .oracle = Oracle::from_marked(a.qubits, a.marked)};
  out << "t,success_probability\n";
  for (const ScanPoint& p : scan_probabilities(config, a.max_iterations)) {
    out << p.t << "," << format_double(p.success_probability, 15) << "\n";
  }
  return kExitOk;
}

inline int classical(const ClassicalArgs& a, std::ostream& out) {
  const ClassicalResult r = classical_baseline(a.size, a.marked, a.iterations, a.trials, a.seed);
  out << "empirical: " << format_double(r.empirical, 15) << "\n"
      << "analytic: " << format_double(r.analytic, 15) << "\n"
      << "iterations: " << r.iterations << "\n"
      << "trials: " << r.trials << "\n";
  return kExitOk;
}

inline ReversibleCircuit load_circuit(const std::string& path) {
  return documents::circuit_from_json(documents::parse_json(documents::read_file(path)));
}

inline int circuit_verify(const CircuitArgs& a, std::ostream& out) {
  const ReversibleCircuit c = load_circuit(a.path);
  const bool ok = check_bijection(truth_table(c), c.wires);
  out << "reversible: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitFailure;
}

inline int circuit_run(const CircuitArgs& a, std::ostream& out) {
  const ReversibleCircuit c = load_circuit(a.path);
  out << format_bits(run_circuit(c, parse_bitstring(a.input))) << "\n";
  return kExitOk;
}

inline int circuit_invert(const CircuitArgs& a, std::ostream& out) {
  const std::string text = documents::to_json(inverse_circuit(load_circuit(a.path))).dump(2) + "\n";
  if (a.output.empty()) {
    out << text;
  } else {
    documents::write_file(a.output, text);
  }
  return kExitOk;
}

/// Parses argv and dispatches. Returns the process exit code: 0 success,
/// 2 usage or validation error, 3 resource cap exceeded.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-vector quantum search simulator and reversible-logic toolkit"};
  app.require_subcommand(1);

  GroverArgs ga;
  ClassicalArgs ca;
  CircuitArgs cc;

  auto* grover = app.add_subcommand("grover", "Quantum search on a simulated register");
  grover->require_subcommand(1);

  auto* run_cmd = grover->add_subcommand("run", "Run the search and measure the register");
  run_cmd->add_option("--qubits", ga.qubits, "Register width n")->required();
  run_cmd->add_option("--marked", ga.marked, "Marked basis indices, comma separated")
      ->required()
      ->delimiter(',');
  run_cmd->add_option("--iterations", ga.iterations, "Iteration count or \"auto\"")
      ->capture_default_str();
  run_cmd->add_option("--seed", ga.seed, "Measurement RNG seed (mt19937_64)")->capture_default_str();
  run_cmd->add_option("--trace", ga.trace_path, "Write every step's amplitudes as JSON");
  run_cmd->add_option("--format", ga.format, "Summary format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* scan_cmd = grover->add_subcommand("scan", "Exact success probability per iteration as CSV");
  scan_cmd->add_option("--qubits", ga.qubits, "Register width n")->required();
  scan_cmd->add_option("--marked", ga.marked, "Marked basis indices, comma separated")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("--max-iterations", ga.max_iterations, "Last iteration count T")->required();
  std::string scan_format = "csv";
  scan_cmd->add_option("--format", scan_format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();

  auto* classical_cmd = app.add_subcommand("classical", "Monte Carlo of the classical random search");
  classical_cmd->add_option("--size", ca.size, "Number of candidate values N")->required();
  classical_cmd->add_option("--marked", ca.marked, "Marked values, comma separated")
      ->required()
      ->delimiter(',');
  classical_cmd->add_option("--iterations", ca.iterations, "Draws per trial")->required();
  classical_cmd->add_option("--trials", ca.trials, "Number of trials")->capture_default_str();
  classical_cmd->add_option("--seed", ca.seed, "RNG seed (mt19937_64)")->capture_default_str();

  auto* circuit = app.add_subcommand(
      "circuit",
      "Reversible circuits (NOT/CNOT/TOFFOLI JSON). Bit strings list wire 0 first, i.e. the "
      "top schematic line is the leftmost character");
  circuit->require_subcommand(1);
  auto* verify_cmd = circuit->add_subcommand("verify", "Exhaustively check the circuit is a bijection");
  verify_cmd->add_option("path", cc.path, "Circuit JSON")->required();
  auto* crun_cmd = circuit->add_subcommand("run", "Run the circuit on one input");
  crun_cmd->add_option("path", cc.path, "Circuit JSON")->required();
  crun_cmd->add_option("--input", cc.input, "Input bits, wire 0 first (e.g. 110)")->required();
  auto* invert_cmd = circuit->add_subcommand("invert", "Write the inverse circuit");
  invert_cmd->add_option("path", cc.path, "Circuit JSON")->required();
  invert_cmd->add_option("--output", cc.output, "Destination file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return grover_run(ga, out, err);
    if (scan_cmd->parsed()) return grover_scan(ga, out);
    if (classical_cmd->parsed()) return classical(ca, out);
    if (verify_cmd->parsed()) return circuit_verify(cc, out);
    if (crun_cmd->parsed()) return circuit_run(cc, out);
    if (invert_cmd->parsed()) return circuit_invert(cc, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace groversim::cli
