#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "groversim_cli.hpp"

namespace {

namespace fs = std::filesystem;
using namespace groversim;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "groversim");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string adder_path() { return std::string(GROVERSIM_SAMPLES_DIR) + "/adder.json"; }

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("groversim_cli_test_" + name);
}

TEST(CliGroverRun, WritesFourStateTrace) {
  const fs::path trace = temp_file("trace.json");
  const Result r = run({"grover", "run", "--qubits", "2", "--marked", "2", "--iterations", "1",
                        "--trace", trace.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("outcome: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("success_probability: 1\n"), std::string::npos);

  const documents::TraceDocument doc =
      documents::trace_from_json(documents::parse_json(documents::read_file(trace.string())));
  const std::vector<std::vector<double>> expected = {{0.5, 0.5, 0.5, 0.5},
                                                     {0.5, 0.5, -0.5, 0.5},
                                                     {0.5, -0.5, 0.5, 0.5},
                                                     {-0.5, -0.5, 0.5, 0.5},
                                                     {0.0, 0.0, -1.0, 0.0}};
  ASSERT_EQ(doc.steps.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t r2 = 0; r2 < 4; ++r2) {
      EXPECT_NEAR(doc.steps[i].amplitudes[r2].real(), expected[i][r2], 1e-12);
      EXPECT_EQ(doc.steps[i].amplitudes[r2].imag(), 0.0);
    }
  }
  EXPECT_EQ(doc.outcome, 2u);
  EXPECT_EQ(doc.oracle_evals, 1u);
  fs::remove(trace);
}

TEST(CliGroverRun, DeterministicForSeed) {
  const std::vector<std::string> args = {"grover", "run", "--qubits", "2", "--marked", "2",
                                         "--iterations", "0", "--seed", "7"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliGroverRun, JsonSummary) {
  const Result r = run({"grover", "run", "--qubits", "10", "--marked", "137", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = documents::parse_json(r.out);
  EXPECT_EQ(j["iterations"], 25);
  EXPECT_EQ(j["oracle_evals"], 25);
  EXPECT_GE(j["success_probability"].get<double>(), 0.999);
  EXPECT_EQ(j["outcome"], 137);
}

TEST(CliGroverRun, ValidationErrors) {
  Result r = run({"grover", "run", "--qubits", "1", "--marked", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("marked index"), std::string::npos);
  EXPECT_NE(r.err.find("out of range"), std::string::npos);

  EXPECT_EQ(run({"grover", "run", "--qubits", "2", "--marked", "1", "--iterations", "many"}).code, 2);
  EXPECT_EQ(run({"grover", "run", "--qubits", "2"}).code, 2);
  EXPECT_EQ(run({"grover", "run", "--qubits", "2", "--marked", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"grover", "run", "--qubits", "0", "--marked", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliGroverRun, ResourceCap) {
  EXPECT_EQ(run({"grover", "run", "--qubits", "30", "--marked", "1"}).code, 3);
  ::setenv("GROVERSIM_MAX_QUBITS", "4", 1);
  EXPECT_EQ(run({"grover", "run", "--qubits", "5", "--marked", "1"}).code, 3);
  ::unsetenv("GROVERSIM_MAX_QUBITS");
  EXPECT_EQ(run({"grover", "run", "--qubits", "20", "--marked", "1", "--trace",
                 temp_file("big.json").string()})
                .code,
            3);
}

TEST(CliGroverRun, DegenerateWarning) {
  const Result r = run({"grover", "run", "--qubits", "2", "--marked", "0,1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliGroverScan, FourStateCsv) {
  const Result r = run({"grover", "scan", "--qubits", "2", "--marked", "2", "--max-iterations", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("t,success_probability\n0,0.25\n1,1\n", 0), 0u) << r.out;
}

TEST(CliGroverScan, ArgmaxAtTwentyFive) {
  const Result r =
      run({"grover", "scan", "--qubits", "10", "--marked", "137", "--max-iterations", "60"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  double best = -1.0;
  long best_t = -1;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const long t = std::stol(line.substr(0, comma));
    const double p = std::stod(line.substr(comma + 1));
    if (p > best) {
      best = p;
      best_t = t;
    }
  }
  EXPECT_EQ(best_t, 25);
}

TEST(CliGroverScan, RejectsZeroIterations) {
  EXPECT_EQ(run({"grover", "scan", "--qubits", "2", "--marked", "2", "--max-iterations", "0"}).code,
            2);
}

TEST(CliClassical, Outputs) {
  Result r = run({"classical", "--size", "4", "--marked", "2", "--iterations", "4", "--trials",
                  "100000", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("analytic: 0.68359375\n"), std::string::npos);
  const double empirical = std::stod(r.out.substr(r.out.find("empirical: ") + 11));
  EXPECT_NEAR(empirical, 0.68359375, 0.005);

  r = run({"classical", "--size", "4", "--marked", "2", "--iterations", "0", "--trials", "100"});
  EXPECT_NE(r.out.find("empirical: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("analytic: 0\n"), std::string::npos);

  r = run({"classical", "--size", "1024", "--marked", "5", "--iterations", "1024", "--trials",
           "10000", "--seed", "2"});
  EXPECT_NEAR(std::stod(r.out.substr(r.out.find("empirical: ") + 11)), 0.632, 0.02);

  EXPECT_EQ(run({"classical", "--size", "4", "--marked", "9", "--iterations", "1"}).code, 2);
}

TEST(CliCircuit, RunVerifyInvert) {
  Result r = run({"circuit", "run", adder_path(), "--input", "110"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "101\n");

  r = run({"circuit", "verify", adder_path()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "reversible: true\n");

  EXPECT_EQ(run({"circuit", "run", adder_path(), "--input", "11"}).code, 2);
  EXPECT_EQ(run({"circuit", "run", adder_path(), "--input", "1x0"}).code, 2);

  const fs::path inv = temp_file("inverse.json");
  r = run({"circuit", "invert", adder_path(), "--output", inv.string()});
  ASSERT_EQ(r.code, 0);
  const ReversibleCircuit back = documents::circuit_from_json(
      documents::parse_json(documents::read_file(inv.string())));
  EXPECT_EQ(back, inverse_circuit(adder_circuit()));
  fs::remove(inv);
}

TEST(CliCircuit, ParseFailure) {
  const fs::path bad = temp_file("bad.json");
  documents::write_file(bad.string(),
                        R"({"format_version":"1","wires":2,"gates":[{"type":"CNOT","target":1}]})");
  const Result r = run({"circuit", "verify", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("gates[0]"), std::string::npos);
  fs::remove(bad);
  EXPECT_EQ(run({"circuit", "verify", temp_file("missing.json").string()}).code, 2);
}

}  // namespace
