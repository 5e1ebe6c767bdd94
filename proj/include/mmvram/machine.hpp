#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmvram/types.hpp"

namespace mmvram {

enum class InstructionKind {
  And,
  Or,
  Not,
  Xor,
  Mask,
  IsZero,
  Add,
  Sub,
  Fills,
  Gathers,
  Scatters,
  Revspec,
  ShiftL,
  ShiftR,
  EqScalar,
  LessThanScalar,
  LeqScalar,
  Sum,
  IndexGather,
  Matmul,
  Scalar,
};

const char* to_string(InstructionKind kind);

enum class WorkTablePreset { Measured, Paper };

// Exact rational coefficient for the matrix-multiplication work formula
// work = coeff * rows * s^2.
struct WorkCoeff {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
};

// Closed-form work charge per instruction kind, as a function of the
// operand length n, the declared element width B, and the model
// parameter s. For Matmul, n counts rows of the left operand.
struct WorkChargeTable {
  WorkTablePreset preset = WorkTablePreset::Measured;
  WorkCoeff matmul_coeff{};

  std::uint64_t work(InstructionKind kind, std::uint64_t n, int bits, int s) const;
};

struct MachineConfig {
  int s = 16;
  int word_width = 64;
  bool strict_width = false;
  WorkTablePreset work_table = WorkTablePreset::Measured;
  WorkCoeff matmul_work_coeff{};

  void validate() const;

  // Accepts a JSON object with keys {"s", "word_width", "strict_width",
  // "matmul_work_coeff", "work_table_preset": "measured"|"paper"}.
  static MachineConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct CostLedger {
  std::uint64_t steps_scalar = 0;
  std::uint64_t steps_vector = 0;
  std::uint64_t steps_matmul = 0;
  std::uint64_t work_scalar = 0;
  std::uint64_t work_vector = 0;
  std::uint64_t work_matmul = 0;
  std::uint64_t max_vector_len = 0;
  std::uint64_t total_elements = 0;
  std::uint64_t max_abs_value = 0;
  int max_required_bits = 0;

  std::uint64_t total_steps() const { return steps_scalar + steps_vector + steps_matmul; }
  std::uint64_t total_work() const { return work_scalar + work_vector + work_matmul; }
};

struct TraceEntry {
  InstructionKind kind;
  std::uint64_t n;
  int bits;
};

// Single-threaded deterministic machine state: configuration plus the
// cost ledger every executed instruction reports into. Independent
// machines may run concurrently; a ledger is never shared.
class Machine {
 public:
  explicit Machine(MachineConfig cfg);

  const MachineConfig& config() const { return cfg_; }
  int s() const { return cfg_.s; }
  const CostLedger& ledger() const { return ledger_; }

  // One step on the matching unit plus the charge-table work for (n, bits).
  void charge(InstructionKind kind, std::uint64_t n, int bits);
  void charge_scalar(int bits) { charge(InstructionKind::Scalar, 1, bits); }

  // Records the largest produced magnitude; in strict mode raises
  // OverflowError naming the instruction that produced the value.
  void track_magnitude(const IntVector& v, const char* instruction);
  void track_value(Int v, const char* instruction);

  void enable_trace(bool on) { trace_on_ = on; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  const WorkChargeTable& work_table() const { return table_; }

 private:
  MachineConfig cfg_;
  WorkChargeTable table_;
  CostLedger ledger_;
  bool trace_on_ = false;
  std::vector<TraceEntry> trace_;
};

// Guards a 128-bit intermediate against the simulator's 64-bit storage.
Int narrow_to_storage(Wide v, const char* instruction);

}  // namespace mmvram
