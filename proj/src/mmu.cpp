#include "mmvram/mmu.hpp"

#include <algorithm>

namespace mmvram::mmu {

StructuredMatrix StructuredMatrix::upper_ones(int s) {
  return {Kind::UpperOnes, s, {}};
}

StructuredMatrix StructuredMatrix::carry_broadcast(int s) {
  return {Kind::CarryBroadcast, s, {}};
}

StructuredMatrix StructuredMatrix::diff(int s) {
  return {Kind::Diff, s, {}};
}

StructuredMatrix StructuredMatrix::dense(int s, std::vector<Int> entries) {
  if (entries.size() != static_cast<std::size_t>(s) * static_cast<std::size_t>(s))
    throw DimensionError("dense matrix entries do not match s x s");
  return {Kind::Dense, s, std::move(entries)};
}

StructuredMatrix StructuredMatrix::all_ones(int s) {
  return dense(s, std::vector<Int>(static_cast<std::size_t>(s) * s, 1));
}

Int StructuredMatrix::at(int i, int j) const {
  switch (kind) {
    case Kind::UpperOnes: return i <= j ? 1 : 0;
    case Kind::CarryBroadcast: return (i == j || i == 0) ? 1 : 0;
    case Kind::Diff:
      if (i == j) return 1;
      if (j == i + 1) return -1;
      return 0;
    case Kind::Dense: return entries[static_cast<std::size_t>(i) * s + j];
  }
  return 0;
}

int StructuredMatrix::bit_growth() const {
  switch (kind) {
    case Kind::UpperOnes: return ceil_log2(static_cast<std::uint64_t>(s));
    case Kind::CarryBroadcast: return 1;
    case Kind::Diff: return 1;
    case Kind::Dense: {
      std::uint64_t worst = 1;
      for (int j = 0; j < s; ++j) {
        std::uint64_t col = 0;
        for (int i = 0; i < s; ++i) col += abs_u64(at(i, j));
        worst = std::max(worst, col);
      }
      return ceil_log2(worst);
    }
  }
  return 0;
}

namespace {

// Row-block times A, specialized for the named forms.
void multiply_block(const Int* row, Int* out, const StructuredMatrix& A, int s) {
  switch (A.kind) {
    case StructuredMatrix::Kind::UpperOnes: {
      Wide acc = 0;
      for (int j = 0; j < s; ++j) {
        acc += row[j];
        out[j] = narrow_to_storage(acc, "MATMUL");
      }
      return;
    }
    case StructuredMatrix::Kind::CarryBroadcast: {
      for (int j = 0; j < s; ++j) {
        Wide acc = row[j];
        if (j != 0) acc += row[0];
        out[j] = narrow_to_storage(acc, "MATMUL");
      }
      return;
    }
    case StructuredMatrix::Kind::Diff: {
      for (int j = 0; j < s; ++j) {
        Wide acc = row[j];
        if (j > 0) acc -= row[j - 1];
        out[j] = narrow_to_storage(acc, "MATMUL");
      }
      return;
    }
    case StructuredMatrix::Kind::Dense: {
      for (int j = 0; j < s; ++j) {
        Wide acc = 0;
        for (int i = 0; i < s; ++i)
          acc += static_cast<Wide>(row[i]) * A.entries[static_cast<std::size_t>(i) * s + j];
        out[j] = narrow_to_storage(acc, "MATMUL");
      }
      return;
    }
  }
}

IntVector matmul_impl(Machine& m, const std::vector<Int>& x, int in_bits,
                      const StructuredMatrix& A, std::size_t out_len) {
  const int s = m.s();
  if (A.s != s)
    throw DimensionError("right operand is " + std::to_string(A.s) + " x " +
                         std::to_string(A.s) + ", machine expects s = " + std::to_string(s));
  const std::size_t su = static_cast<std::size_t>(s);
  const std::size_t rows = ceil_div(x.size(), su);
  const std::size_t padded = rows * su;

  std::vector<Int> buf(padded, 0);
  std::copy(x.begin(), x.end(), buf.begin());
  std::vector<Int> out(padded, 0);
  for (std::size_t r = 0; r < rows; ++r)
    multiply_block(buf.data() + r * su, out.data() + r * su, A, s);

  out.resize(std::min(out_len, padded));
  if (out_len > padded) out.resize(out_len, 0);
  IntVector z(std::move(out), in_bits + A.bit_growth());
  m.charge(InstructionKind::Matmul, rows, in_bits);
  m.track_magnitude(z, "MATMUL");
  return z;
}

}  // namespace

IntVector matmul(Machine& m, const IntVector& x, const StructuredMatrix& A,
                 std::size_t out_len) {
  return matmul_impl(m, x.values, x.declared_bits, A, out_len);
}

IntVector matmul(Machine& m, const IntVector& x, const StructuredMatrix& A) {
  return matmul_impl(m, x.values, x.declared_bits, A, x.size());
}

IntVector matmul(Machine& m, const FlagVector& f, const StructuredMatrix& A,
                 std::size_t out_len) {
  std::vector<Int> v(f.bits.begin(), f.bits.end());
  return matmul_impl(m, v, 1, A, out_len);
}

IntVector matmul(Machine& m, const FlagVector& f, const StructuredMatrix& A) {
  std::vector<Int> v(f.bits.begin(), f.bits.end());
  return matmul_impl(m, v, 1, A, f.size());
}

void matmul_offset(Machine& m, IntVector& x, std::size_t start, const StructuredMatrix& A) {
  if (start >= x.size()) throw IndexError("matmul_offset: start out of range");
  std::vector<Int> suffix(x.values.begin() + static_cast<std::ptrdiff_t>(start),
                          x.values.end());
  IntVector result = matmul_impl(m, suffix, x.declared_bits, A, suffix.size());
  std::copy(result.values.begin(), result.values.end(),
            x.values.begin() + static_cast<std::ptrdiff_t>(start));
  x.declared_bits = std::max(x.declared_bits, result.declared_bits);
}

int parity(Machine& m, const FlagVector& bits) {
  const std::size_t su = static_cast<std::size_t>(m.s());
  if (bits.size() > su)
    throw LengthError("parity input longer than the machine's s = " + std::to_string(m.s()));
  std::vector<Int> row(bits.bits.begin(), bits.bits.end());
  IntVector product = matmul_impl(m, row, 1, StructuredMatrix::all_ones(m.s()),
                                  bits.empty() ? 0 : su);
  if (product.empty()) return 0;
  return static_cast<int>(product[0] & 1);
}

}  // namespace mmvram::mmu
