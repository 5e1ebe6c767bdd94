#pragma once

#include "mmvram/machine.hpp"
#include "mmvram/types.hpp"

// Block-recursive scan and segmented scan built from speculative MMU
// block scans plus vector-unit correction.
namespace mmvram::algo {

// How speculative block scans are corrected. All three strategies produce
// identical outputs on identical inputs.
enum class RevertStrategy {
  Instruction,  // dedicated REVSPEC vector instruction
  Simple,       // per-block correction loop over segment indices
  KoggeStone,   // masked log-depth propagation with standard instructions
};

struct SegmentedInput {
  IntVector x;
  FlagVector f;

  // Validates equal lengths and normalizes index 0 as a segment start.
  SegmentedInput(IntVector x_in, FlagVector f_in);
};

// Inclusive prefix sum: z(i) = sum of x(0..i). Steps follow
// T(n) = T(ceil(n/s)) + 4 for n > s, T(n) = 1 otherwise.
IntVector scan(Machine& m, const IntVector& x);

// Per-block segmented scans, blocks independent: two speculative MMU
// scans plus one revert.
IntVector block_seg_scan(Machine& m, const IntVector& x, const FlagVector& f,
                         RevertStrategy strategy = RevertStrategy::Instruction);

// Full segmented scan: z(i) = x(i) at segment starts, else z(i-1) + x(i).
IntVector seg_scan(Machine& m, const SegmentedInput& input,
                   RevertStrategy strategy = RevertStrategy::Instruction);

// Adds each block's incoming carry (the block-first element of the
// suffix view) to the leading run of elements that continue the previous
// block's last segment. Operates in place on the suffix view.
void update_first_segment(Machine& m, IntVector& z_suffix, const FlagVector& f_suffix);

// Standalone revert routines; z is the speculative block scan
// MATMUL(x, upper_ones) already computed by the caller.
IntVector revert_simple(Machine& m, const IntVector& z, const IntVector& x,
                        const FlagVector& f);
IntVector revert_kogge_stone(Machine& m, const IntVector& z, const IntVector& x,
                             const FlagVector& f);

}  // namespace mmvram::algo
