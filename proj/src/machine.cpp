#include "mmvram/machine.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "json.hpp"

namespace mmvram {

const char* to_string(InstructionKind kind) {
  switch (kind) {
    case InstructionKind::And: return "AND";
    case InstructionKind::Or: return "OR";
    case InstructionKind::Not: return "NOT";
    case InstructionKind::Xor: return "XOR";
    case InstructionKind::Mask: return "MASK";
    case InstructionKind::IsZero: return "ISZERO";
    case InstructionKind::Add: return "ADD";
    case InstructionKind::Sub: return "SUB";
    case InstructionKind::Fills: return "FILLS";
    case InstructionKind::Gathers: return "GATHERS";
    case InstructionKind::Scatters: return "SCATTERS";
    case InstructionKind::Revspec: return "REVSPEC";
    case InstructionKind::ShiftL: return "SHIFTL";
    case InstructionKind::ShiftR: return "SHIFTR";
    case InstructionKind::EqScalar: return "EQ";
    case InstructionKind::LessThanScalar: return "LESSTHAN";
    case InstructionKind::LeqScalar: return "LEQ";
    case InstructionKind::Sum: return "SUM";
    case InstructionKind::IndexGather: return "INDEX_GATHER";
    case InstructionKind::Matmul: return "MATMUL";
    case InstructionKind::Scalar: return "SCALAR";
  }
  return "?";
}

std::uint64_t WorkChargeTable::work(InstructionKind kind, std::uint64_t n, int bits,
                                    int s) const {
  const std::uint64_t B = static_cast<std::uint64_t>(bits);
  const std::uint64_t S = static_cast<std::uint64_t>(s);
  switch (kind) {
    case InstructionKind::And:
    case InstructionKind::Or:
    case InstructionKind::Not:
    case InstructionKind::Xor:
      return n;
    case InstructionKind::Mask:
    case InstructionKind::IsZero:
    case InstructionKind::Fills:
    case InstructionKind::ShiftL:
    case InstructionKind::ShiftR:
    case InstructionKind::EqScalar:
    case InstructionKind::LessThanScalar:
    case InstructionKind::LeqScalar:
    case InstructionKind::Sum:
    case InstructionKind::IndexGather:
      return n * B;
    case InstructionKind::Add:
    case InstructionKind::Sub:
      return n * B * B;
    case InstructionKind::Gathers:
    case InstructionKind::Scatters:
      // Measured: bits actually moved. Paper: the literal table figure.
      return preset == WorkTablePreset::Measured ? ceil_div(n, S) * B : S * B;
    case InstructionKind::Revspec:
      return preset == WorkTablePreset::Measured
                 ? ceil_div(n, S) * (S * S * B + B * B)
                 : n * B * S * S + ceil_div(n * B * B, S);
    case InstructionKind::Matmul:
      return matmul_coeff.num * n * S * S / matmul_coeff.den;
    case InstructionKind::Scalar:
      return B;
  }
  return 0;
}

void MachineConfig::validate() const {
  if (s < 2) throw ConfigError("model parameter s must be >= 2");
  if (word_width < 8) throw ConfigError("word_width must be >= 8");
  if (matmul_work_coeff.num == 0 || matmul_work_coeff.den == 0)
    throw ConfigError("matmul_work_coeff must be positive");
}

MachineConfig MachineConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  MachineConfig cfg;
  if (j.contains("s")) cfg.s = j.at("s").get<int>();
  if (j.contains("word_width")) cfg.word_width = j.at("word_width").get<int>();
  if (j.contains("strict_width")) cfg.strict_width = j.at("strict_width").get<bool>();
  if (j.contains("work_table_preset")) {
    const std::string p = j.at("work_table_preset").get<std::string>();
    if (p == "measured")
      cfg.work_table = WorkTablePreset::Measured;
    else if (p == "paper")
      cfg.work_table = WorkTablePreset::Paper;
    else
      throw ConfigError("work_table_preset must be \"measured\" or \"paper\"");
  }
  if (j.contains("matmul_work_coeff")) {
    const auto& c = j.at("matmul_work_coeff");
    if (c.is_number_integer()) {
      const std::int64_t v = c.get<std::int64_t>();
      if (v <= 0) throw ConfigError("matmul_work_coeff must be positive");
      cfg.matmul_work_coeff = {static_cast<std::uint64_t>(v), 1};
    } else if (c.is_number_float()) {
      // Decimal coefficients are kept exact as num/10^k.
      double v = c.get<double>();
      if (!(v > 0)) throw ConfigError("matmul_work_coeff must be positive");
      std::uint64_t den = 1;
      while (v != std::floor(v) && den < 1000000000ull) {
        v *= 10;
        den *= 10;
      }
      std::uint64_t num = static_cast<std::uint64_t>(std::llround(v));
      std::uint64_t g = std::gcd(num, den);
      cfg.matmul_work_coeff = {num / g, den / g};
    } else {
      throw ConfigError("matmul_work_coeff must be a number");
    }
  }
  cfg.validate();
  return cfg;
}

std::string MachineConfig::to_json_text() const {
  nlohmann::json j;
  j["s"] = s;
  j["word_width"] = word_width;
  j["strict_width"] = strict_width;
  j["work_table_preset"] = work_table == WorkTablePreset::Measured ? "measured" : "paper";
  if (matmul_work_coeff.den == 1)
    j["matmul_work_coeff"] = matmul_work_coeff.num;
  else
    j["matmul_work_coeff"] =
        static_cast<double>(matmul_work_coeff.num) / static_cast<double>(matmul_work_coeff.den);
  return j.dump();
}

Machine::Machine(MachineConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  table_.preset = cfg_.work_table;
  table_.matmul_coeff = cfg_.matmul_work_coeff;
}

void Machine::charge(InstructionKind kind, std::uint64_t n, int bits) {
  const std::uint64_t w = table_.work(kind, n, bits, cfg_.s);
  switch (kind) {
    case InstructionKind::Matmul:
      ledger_.steps_matmul += 1;
      ledger_.work_matmul += w;
      break;
    case InstructionKind::Scalar:
      ledger_.steps_scalar += 1;
      ledger_.work_scalar += w;
      break;
    default:
      ledger_.steps_vector += 1;
      ledger_.work_vector += w;
      break;
  }
  // The MMU touches n rows of s elements; every other unit touches n.
  const std::uint64_t elems =
      kind == InstructionKind::Matmul ? n * static_cast<std::uint64_t>(cfg_.s) : n;
  ledger_.total_elements += elems;
  ledger_.max_vector_len = std::max(ledger_.max_vector_len, elems);
  if (trace_on_) trace_.push_back({kind, n, bits});
}

void Machine::track_value(Int v, const char* instruction) {
  const std::uint64_t m = abs_u64(v);
  if (m > ledger_.max_abs_value) {
    ledger_.max_abs_value = m;
    ledger_.max_required_bits = bits_for_magnitude(m);
  }
  if (cfg_.strict_width && cfg_.word_width <= 64) {
    const std::uint64_t limit = cfg_.word_width == 64
                                    ? 0x8000000000000000ull
                                    : 1ull << (cfg_.word_width - 1);
    if (m >= limit)
      throw OverflowError(std::string(instruction) + " produced a value exceeding " +
                          std::to_string(cfg_.word_width) + "-bit words");
  }
}

void Machine::track_magnitude(const IntVector& v, const char* instruction) {
  for (Int e : v.values) track_value(e, instruction);
}

Int narrow_to_storage(Wide v, const char* instruction) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError(std::string(instruction) + " exceeded the simulator's 64-bit storage");
  return static_cast<Int>(v);
}

}  // namespace mmvram
