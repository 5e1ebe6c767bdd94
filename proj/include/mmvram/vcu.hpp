#pragma once

#include "mmvram/machine.hpp"
#include "mmvram/types.hpp"

// Vector instruction set. Every call consumes exactly one vector step and
// reports its work charge, regardless of the operand length.
namespace mmvram::vcu {

FlagVector logic_and(Machine& m, const FlagVector& x, const FlagVector& y);
FlagVector logic_or(Machine& m, const FlagVector& x, const FlagVector& y);
FlagVector logic_not(Machine& m, const FlagVector& x);
FlagVector logic_xor(Machine& m, const FlagVector& x, const FlagVector& y);

// z(i) = x(i) where y(i)=1, else 0.
IntVector mask(Machine& m, const IntVector& x, const FlagVector& y);

FlagVector iszero(Machine& m, const IntVector& x);

IntVector add(Machine& m, const IntVector& x, const IntVector& y);
IntVector sub(Machine& m, const IntVector& x, const IntVector& y);

// Broadcasts each s-block's first element across its block.
IntVector fills(Machine& m, const IntVector& x);

// Collects the last element of each s-block; output length ceil(n/s).
// Conceptual zero padding supplies missing tail elements.
IntVector gathers(Machine& m, const IntVector& x);

// Standalone scatter: writes x(i-1) to position s*i-1 of a fresh
// zero vector of length out_len.
IntVector scatters(Machine& m, const IntVector& x, std::size_t out_len);

// In-place scatter used by the block-recursive algorithms: overwrites
// only block-last positions of dest, all other positions keep their
// values. Charged as one SCATTERS step.
void scatters_merge(Machine& m, IntVector& dest, const IntVector& src);

// End-off shifts, zero fill. shiftr moves elements toward higher
// indices: z(i) = x(i-k); shiftl toward lower: z(i) = x(i+k).
IntVector shiftl(Machine& m, const IntVector& x, std::size_t k);
IntVector shiftr(Machine& m, const IntVector& x, std::size_t k);
FlagVector shiftl(Machine& m, const FlagVector& x, std::size_t k);
FlagVector shiftr(Machine& m, const FlagVector& x, std::size_t k);

FlagVector eq_scalar(Machine& m, const IntVector& x, Int c);
FlagVector less_than_scalar(Machine& m, const IntVector& x, Int c);
FlagVector leq_scalar(Machine& m, const IntVector& x, Int c);

// Reduces to a host scalar; charged as one vector step of n*B work.
Int sum(Machine& m, const IntVector& x);

// Per s-block speculation revert: given block-local inclusive scans of
// values (xbar) and flags (fbar), returns the block-local segmented
// scans. Exactly one vector step.
IntVector revspec(Machine& m, const IntVector& xbar, const IntVector& fbar);

// z(i) = x(idx(i)); all-to-all gather plumbing.
IntVector index_gather(Machine& m, const IntVector& x, const IntVector& idx);

// Constant-pattern generators, charged as FILLS-class steps.
FlagVector stride_flags(Machine& m, std::size_t n, std::size_t stride);
FlagVector block_start_flags(Machine& m, std::size_t n);
FlagVector single_flag(Machine& m, std::size_t n, std::size_t pos);

}  // namespace mmvram::vcu
