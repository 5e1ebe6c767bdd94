#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmvram/machine.hpp"
#include "mmvram/pipelines.hpp"
#include "mmvram/scan.hpp"
#include "mmvram/types.hpp"

// Input generation, execution, verification and reporting behind the CLI.
namespace mmvram::harness {

enum class Algo { Scan, SegScan, Scd, Sscr, Mult, Matmul, Parity };

Algo parse_algo(const std::string& name);
const char* to_string(Algo algo);

algo::RevertStrategy parse_strategy(const std::string& name);
const char* to_string(algo::RevertStrategy strategy);

// Reproducible input generation: density is the probability that a
// position starts a segment, values are uniform in [lo, hi].
struct GeneratorSpec {
  std::uint64_t n = 0;
  double density = 0.0;
  Int lo = 0;
  Int hi = 0;
  std::uint64_t seed = 0;
};

algo::SegmentedInput make_segmented_input(const GeneratorSpec& spec);
IntVector make_values(std::uint64_t n, Int lo, Int hi, std::uint64_t seed);
SquareMatrix make_matrix(std::size_t dim, Int lo, Int hi, std::uint64_t seed);

std::uint64_t fnv1a64(const std::vector<Int>& values);

struct RunReport {
  std::string algo;
  std::uint64_t n = 0;
  int s = 0;
  double density = 0.0;
  std::uint64_t steps_total = 0;
  std::uint64_t steps_matmul = 0;
  std::uint64_t steps_vector = 0;
  std::uint64_t steps_scalar = 0;
  std::uint64_t work_matmul = 0;
  std::uint64_t work_vector = 0;
  std::uint64_t work_scalar = 0;
  std::uint64_t work_total = 0;
  std::uint64_t max_vec_len = 0;
  std::uint64_t total_elements = 0;
  int max_required_bits = 0;
  int word_width = 0;
  bool verified = false;
  std::uint64_t output_checksum = 0;

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

RunReport report_from(const std::string& algo_name, std::uint64_t n, int s, double density,
                      const CostLedger& ledger, int word_width, bool verified,
                      std::uint64_t checksum);

struct RunOptions {
  Algo algo = Algo::SegScan;
  MachineConfig config{};
  std::uint64_t n = 16;
  double density = 0.01;
  std::uint64_t seed = 1;
  Int lo = -100;
  Int hi = 100;
  std::optional<std::vector<Int>> values;
  std::optional<std::vector<std::uint8_t>> flags;
  std::optional<std::string> preset;  // "eq3" | "fig2"
  algo::RevertStrategy strategy = algo::RevertStrategy::Instruction;
  std::string parity_bits;
  bool verify = false;
  std::optional<std::string> mtx_path;
  std::optional<int> quantize_bits;
};

struct RunOutcome {
  RunReport report;
  std::vector<Int> output;
  int exit_code = 0;       // 0 ok, 2 verification failure
  std::string detail;      // verification mismatch description
};

RunOutcome run_once(const RunOptions& opts);

struct SweepOptions {
  Algo algo = Algo::Scan;
  MachineConfig config{};
  std::uint64_t n0 = 4;
  std::uint64_t factor = 4;
  std::uint64_t count = 5;
  double density = 0.01;
  std::uint64_t seed = 1;
  Int lo = -100;
  Int hi = 100;
  algo::RevertStrategy strategy = algo::RevertStrategy::Instruction;
};

struct AffineFit {
  double a = 0.0;
  double b = 0.0;
  double max_residual = 0.0;
  bool exact = false;  // computed in exact integer arithmetic
};

struct SweepOutcome {
  std::vector<RunReport> reports;
  AffineFit fit;
};

SweepOutcome sweep(const SweepOptions& opts);

// Fits steps = a * log_s(n) + b; exact integer arithmetic when every n is
// a power of s.
AffineFit fit_affine(const std::vector<std::uint64_t>& ns,
                     const std::vector<std::uint64_t>& steps, int s);

struct VerifyOptions {
  MachineConfig config{};
  bool exhaustive = true;
  std::uint64_t max_n = 10;
  std::vector<int> s_values = {2, 3, 4};
  std::vector<std::uint64_t> random_n = {1000};
  std::vector<double> densities = {0.01};
  std::uint64_t trials = 20;
  std::uint64_t seed = 1;
  Int lo = -3;
  Int hi = 3;
  // Test hook: flips one output element of the named algorithm so the
  // counterexample path can be exercised.
  std::optional<std::string> inject_fault;
};

struct VerifyOutcome {
  bool pass = true;
  std::uint64_t cases_run = 0;
  std::string counterexample;
};

VerifyOutcome verify(const VerifyOptions& opts);

// Named demo presets.
algo::SegmentedInput preset_input(const std::string& name);
int preset_s(const std::string& name);

}  // namespace mmvram::harness
