#pragma once

#include "mmvram/machine.hpp"
#include "mmvram/scan.hpp"
#include "mmvram/types.hpp"

// Higher-level operations built on the scan machinery.
namespace mmvram::app {

// School-method integer product: the shifted partial products are summed
// by one scan, and the last scanned element is the result. Signs are
// handled by sign-magnitude wrapping around the scan path.
Int mul_via_scan(Machine& m, Int a, Int b);

// Element-wise product via one segmented scan over the concatenated
// per-element partial-product segments.
IntVector elementwise_mul(Machine& m, const IntVector& x, const IntVector& y);

// Square matrix product with non-negative entries: element-wise products
// of the replicated row/column layouts, then a segmented scan with one
// segment per output entry.
SquareMatrix matmul_via_seg_scan(Machine& m, const SquareMatrix& a, const SquareMatrix& b);

}  // namespace mmvram::app
