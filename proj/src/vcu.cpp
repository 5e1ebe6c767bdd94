#include "mmvram/vcu.hpp"

#include <algorithm>

namespace mmvram::vcu {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw LengthError(std::string(op) + ": operand lengths differ (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
}

}  // namespace

FlagVector logic_and(Machine& m, const FlagVector& x, const FlagVector& y) {
  require_same_length(x.size(), y.size(), "AND");
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] & y[i];
  m.charge(InstructionKind::And, x.size(), 1);
  return z;
}

FlagVector logic_or(Machine& m, const FlagVector& x, const FlagVector& y) {
  require_same_length(x.size(), y.size(), "OR");
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] | y[i];
  m.charge(InstructionKind::Or, x.size(), 1);
  return z;
}

FlagVector logic_not(Machine& m, const FlagVector& x) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ^ 1;
  m.charge(InstructionKind::Not, x.size(), 1);
  return z;
}

FlagVector logic_xor(Machine& m, const FlagVector& x, const FlagVector& y) {
  require_same_length(x.size(), y.size(), "XOR");
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ^ y[i];
  m.charge(InstructionKind::Xor, x.size(), 1);
  return z;
}

IntVector mask(Machine& m, const IntVector& x, const FlagVector& y) {
  require_same_length(x.size(), y.size(), "MASK");
  IntVector z(std::vector<Int>(x.size(), 0), x.declared_bits);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i]) z[i] = x[i];
  m.charge(InstructionKind::Mask, x.size(), x.declared_bits);
  m.track_magnitude(z, "MASK");
  return z;
}

FlagVector iszero(Machine& m, const IntVector& x) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] == 0 ? 1 : 0;
  m.charge(InstructionKind::IsZero, x.size(), x.declared_bits);
  return z;
}

IntVector add(Machine& m, const IntVector& x, const IntVector& y) {
  require_same_length(x.size(), y.size(), "ADD");
  const int bits = std::max(x.declared_bits, y.declared_bits);
  IntVector z(std::vector<Int>(x.size(), 0), bits + 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    z[i] = narrow_to_storage(static_cast<Wide>(x[i]) + y[i], "ADD");
  m.charge(InstructionKind::Add, x.size(), bits);
  m.track_magnitude(z, "ADD");
  return z;
}

IntVector sub(Machine& m, const IntVector& x, const IntVector& y) {
  require_same_length(x.size(), y.size(), "SUB");
  const int bits = std::max(x.declared_bits, y.declared_bits);
  IntVector z(std::vector<Int>(x.size(), 0), bits + 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    z[i] = narrow_to_storage(static_cast<Wide>(x[i]) - y[i], "SUB");
  m.charge(InstructionKind::Sub, x.size(), bits);
  m.track_magnitude(z, "SUB");
  return z;
}

IntVector fills(Machine& m, const IntVector& x) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  IntVector z(std::vector<Int>(x.size(), 0), x.declared_bits);
  for (std::size_t b = 0; b < x.size(); b += s) {
    const Int first = x[b];
    for (std::size_t i = b; i < std::min(b + s, x.size()); ++i) z[i] = first;
  }
  m.charge(InstructionKind::Fills, x.size(), x.declared_bits);
  return z;
}

IntVector gathers(Machine& m, const IntVector& x) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t blocks = x.empty() ? 0 : ceil_div(x.size(), s);
  IntVector z(std::vector<Int>(blocks, 0), x.declared_bits);
  for (std::size_t i = 1; i <= blocks; ++i) {
    const std::size_t src = s * i - 1;
    z[i - 1] = src < x.size() ? x[src] : 0;
  }
  m.charge(InstructionKind::Gathers, x.size(), x.declared_bits);
  return z;
}

IntVector scatters(Machine& m, const IntVector& x, std::size_t out_len) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  IntVector z(std::vector<Int>(out_len, 0), x.declared_bits);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const std::size_t dst = s * i - 1;
    if (dst < out_len) z[dst] = x[i - 1];
  }
  m.charge(InstructionKind::Scatters, out_len, x.declared_bits);
  return z;
}

void scatters_merge(Machine& m, IntVector& dest, const IntVector& src) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  for (std::size_t i = 1; i <= src.size(); ++i) {
    const std::size_t dst = s * i - 1;
    if (dst < dest.size()) dest[dst] = src[i - 1];
  }
  dest.declared_bits = std::max(dest.declared_bits, src.declared_bits);
  m.charge(InstructionKind::Scatters, dest.size(), src.declared_bits);
}

IntVector shiftl(Machine& m, const IntVector& x, std::size_t k) {
  IntVector z(std::vector<Int>(x.size(), 0), x.declared_bits);
  for (std::size_t i = 0; i + k < x.size(); ++i) z[i] = x[i + k];
  m.charge(InstructionKind::ShiftL, x.size(), x.declared_bits);
  return z;
}

IntVector shiftr(Machine& m, const IntVector& x, std::size_t k) {
  IntVector z(std::vector<Int>(x.size(), 0), x.declared_bits);
  for (std::size_t i = k; i < x.size(); ++i) z[i] = x[i - k];
  m.charge(InstructionKind::ShiftR, x.size(), x.declared_bits);
  return z;
}

FlagVector shiftl(Machine& m, const FlagVector& x, std::size_t k) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i + k < x.size(); ++i) z[i] = x[i + k];
  m.charge(InstructionKind::ShiftL, x.size(), 1);
  return z;
}

FlagVector shiftr(Machine& m, const FlagVector& x, std::size_t k) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = k; i < x.size(); ++i) z[i] = x[i - k];
  m.charge(InstructionKind::ShiftR, x.size(), 1);
  return z;
}

FlagVector eq_scalar(Machine& m, const IntVector& x, Int c) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] == c ? 1 : 0;
  m.charge(InstructionKind::EqScalar, x.size(), x.declared_bits);
  return z;
}

FlagVector less_than_scalar(Machine& m, const IntVector& x, Int c) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] < c ? 1 : 0;
  m.charge(InstructionKind::LessThanScalar, x.size(), x.declared_bits);
  return z;
}

FlagVector leq_scalar(Machine& m, const IntVector& x, Int c) {
  FlagVector z = FlagVector::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] <= c ? 1 : 0;
  m.charge(InstructionKind::LeqScalar, x.size(), x.declared_bits);
  return z;
}

Int sum(Machine& m, const IntVector& x) {
  Wide acc = 0;
  for (Int e : x.values) acc += e;
  m.charge(InstructionKind::Sum, x.size(), x.declared_bits);
  const Int v = narrow_to_storage(acc, "SUM");
  m.track_value(v, "SUM");
  return v;
}

IntVector revspec(Machine& m, const IntVector& xbar, const IntVector& fbar) {
  require_same_length(xbar.size(), fbar.size(), "REVSPEC");
  const std::size_t s = static_cast<std::size_t>(m.s());
  IntVector z = xbar;
  z.declared_bits = xbar.declared_bits + 1;
  for (std::size_t b = 0; b < xbar.size(); b += s) {
    const std::size_t end = std::min(b + s, xbar.size());
    // The flag scan steps up exactly at segment starts, so the value to
    // subtract for position j is the speculative prefix at the last step
    // before j's segment. Positions still in the block-start segment have
    // no in-block boundary and keep their speculative value.
    Int u = 0;
    bool have_boundary = false;
    for (std::size_t j = b + 1; j < end; ++j) {
      if (fbar[j] != fbar[j - 1]) {
        u = xbar[j - 1];
        have_boundary = true;
      }
      if (have_boundary)
        z[j] = narrow_to_storage(static_cast<Wide>(xbar[j]) - u, "REVSPEC");
    }
  }
  m.charge(InstructionKind::Revspec, xbar.size(),
           std::max(xbar.declared_bits, fbar.declared_bits));
  m.track_magnitude(z, "REVSPEC");
  return z;
}

IntVector index_gather(Machine& m, const IntVector& x, const IntVector& idx) {
  IntVector z(std::vector<Int>(idx.size(), 0), x.declared_bits);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Int j = idx[i];
    if (j < 0 || static_cast<std::size_t>(j) >= x.size())
      throw IndexError("INDEX_GATHER: index " + std::to_string(j) + " out of range [0, " +
                       std::to_string(x.size()) + ")");
    z[i] = x[static_cast<std::size_t>(j)];
  }
  m.charge(InstructionKind::IndexGather, idx.size(), x.declared_bits);
  return z;
}

FlagVector stride_flags(Machine& m, std::size_t n, std::size_t stride) {
  FlagVector z = FlagVector::zeros(n);
  for (std::size_t i = 0; i < n; i += stride) z[i] = 1;
  m.charge(InstructionKind::Fills, n, 1);
  return z;
}

FlagVector block_start_flags(Machine& m, std::size_t n) {
  return stride_flags(m, n, static_cast<std::size_t>(m.s()));
}

FlagVector single_flag(Machine& m, std::size_t n, std::size_t pos) {
  FlagVector z = FlagVector::zeros(n);
  if (pos < n) z[pos] = 1;
  m.charge(InstructionKind::Fills, n, 1);
  return z;
}

}  // namespace mmvram::vcu
