#pragma once

#include <cstdint>
#include <vector>

#include "mmvram/types.hpp"

// Brute-force reference implementations used by the tests and the verify
// harness. Direct sequential recurrences only: no machine, no ledger, no
// shared code with the simulator paths.
namespace mmvram::oracle {

std::vector<Int> scan(const std::vector<Int>& x);

// Problem-1 recurrence; index 0 always starts a segment.
std::vector<Int> seg_scan(const std::vector<Int>& x, const std::vector<std::uint8_t>& f);

// Problem-2 per-segment totals.
std::vector<Int> seg_sum(const std::vector<Int>& x, const std::vector<std::uint8_t>& f);

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace mmvram::oracle
