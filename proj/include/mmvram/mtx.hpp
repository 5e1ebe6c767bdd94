#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mmvram/scan.hpp"
#include "mmvram/types.hpp"

// Matrix Market coordinate-format ingestion: nonzero values become the
// value vector in row-major order, and a flag marks the first nonzero of
// each row, as in sparse row reductions.
namespace mmvram::mtx {

struct IngestResult {
  algo::SegmentedInput input;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t nnz = 0;
};

// Real-valued matrices are refused unless quantize_bits is given, in
// which case values are scaled by 2^bits / max|v| and rounded.
IngestResult ingest(const std::string& path, std::optional<int> quantize_bits = {});
IngestResult ingest_stream(std::istream& in, std::optional<int> quantize_bits = {});

}  // namespace mmvram::mtx
