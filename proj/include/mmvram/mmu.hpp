#pragma once

#include "mmvram/machine.hpp"
#include "mmvram/types.hpp"

// Matrix multiplication unit: multiplies a ceil(n/s) x s row-major view
// of a vector by an s x s right operand in one machine step.
namespace mmvram::mmu {

struct StructuredMatrix {
  enum class Kind {
    UpperOnes,       // upper-triangular all-ones: per-block inclusive scans
    CarryBroadcast,  // identity with all-ones first row: adds block-first to the tail
    Diff,            // ones on the diagonal, -1 on the first superdiagonal
    Dense,
  };

  Kind kind = Kind::Dense;
  int s = 0;
  std::vector<Int> entries;  // materialized for Dense only

  static StructuredMatrix upper_ones(int s);
  static StructuredMatrix carry_broadcast(int s);
  static StructuredMatrix diff(int s);
  static StructuredMatrix dense(int s, std::vector<Int> entries);
  static StructuredMatrix all_ones(int s);

  Int at(int i, int j) const;

  // Declared-bit growth of a multiply by this matrix: ceil(log2) of the
  // largest column absolute sum.
  int bit_growth() const;
};

// Zero-pads x to ceil(n/s)*s, reshapes row-major, right-multiplies by A,
// flattens, and truncates to out_len. The two-argument overloads return
// the input length; callers needing the padded tail pass it explicitly.
IntVector matmul(Machine& m, const IntVector& x, const StructuredMatrix& A,
                 std::size_t out_len);
IntVector matmul(Machine& m, const IntVector& x, const StructuredMatrix& A);
IntVector matmul(Machine& m, const FlagVector& f, const StructuredMatrix& A,
                 std::size_t out_len);
IntVector matmul(Machine& m, const FlagVector& f, const StructuredMatrix& A);

// Applies matmul to the suffix x(start:), writing the result back over
// the suffix; the prefix is untouched.
void matmul_offset(Machine& m, IntVector& x, std::size_t start, const StructuredMatrix& A);

// Parity of up to s bits in one matmul step: the bits form the first row
// of the left operand, the right operand is all-ones, and the result is
// the least significant bit of the top-left product element.
int parity(Machine& m, const FlagVector& bits);

}  // namespace mmvram::mmu
