#pragma once

#include "mmvram/machine.hpp"
#include "mmvram/scan.hpp"
#include "mmvram/types.hpp"

// Practical segmented operations assembled from scan, compress and
// vector differentiation, with full-range speculation.
namespace mmvram::pipeline {

// f with every segment's end marked: f_minus(i) = f(i+1), trailing 1.
FlagVector segment_end_flags(Machine& m, const FlagVector& f);

// Order-preserving selection of x where f is 1. Destination indices come
// from a full scan of f; the selection itself is one all-to-all gather.
IntVector compress(Machine& m, const IntVector& x, const FlagVector& f);

// out(i) = z(i) - z(i-1), z(-1) = 0. The vector path is a shift and a
// subtract; the MMU path multiplies by the differentiation matrix and
// fixes the block-boundary entries on the vector unit.
IntVector diff(Machine& m, const IntVector& z, bool use_mmu = false);

// Segmented sum as diff(compress(scan(x), segment-end flags)); output
// holds one total per segment.
IntVector segmented_sum(Machine& m, const algo::SegmentedInput& input,
                        bool diff_via_mmu = false);

enum class RevertCharge { PerSegment, Fused };

// Segmented scan from two speculative scans, a compress of segment-end
// prefix values, and a per-segment revert on the vector unit.
IntVector segmented_scan(Machine& m, const algo::SegmentedInput& input,
                         RevertCharge charge_mode = RevertCharge::PerSegment);

}  // namespace mmvram::pipeline
