#include "mmvram/mtx.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mmvram::mtx {

namespace {

struct Entry {
  std::uint64_t row;
  std::uint64_t col;
  double value;
};

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

IngestResult ingest(const std::string& path, std::optional<int> quantize_bits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return ingest_stream(in, quantize_bits);
}

IngestResult ingest_stream(std::istream& in, std::optional<int> quantize_bits) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty file", line_no);

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError("missing %%MatrixMarket banner", line_no);
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw ParseError("unsupported object '" + object + "'", line_no);
  if (format != "coordinate")
    throw ParseError("unsupported format '" + format + "' (only coordinate)", line_no);
  if (field == "complex") throw ParseError("unsupported field 'complex'", line_no);
  if (field != "integer" && field != "real" && field != "pattern")
    throw ParseError("unsupported field '" + field + "'", line_no);
  if (field == "real" && !quantize_bits)
    throw ParseError("real-valued matrix requires a quantization bit budget", line_no);
  const bool symmetric = symmetry == "symmetric";
  const bool skew = symmetry == "skew-symmetric";
  if (!symmetric && !skew && symmetry != "general")
    throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);

  // Skip comments, then read the size line.
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) throw ParseError("missing size line", line_no);
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz)) throw ParseError("malformed size line", line_no);
    break;
  }

  std::vector<Entry> entries;
  entries.reserve(nnz);
  for (std::uint64_t k = 0; k < nnz; ++k) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of file", line_no);
    ++line_no;
    if (line.empty() || line[0] == '%') {
      --k;
      continue;
    }
    std::istringstream entry_line(line);
    std::uint64_t r = 0, c = 0;
    double v = 1.0;
    if (!(entry_line >> r >> c)) throw ParseError("malformed entry", line_no);
    if (field != "pattern" && !(entry_line >> v)) throw ParseError("missing value", line_no);
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw ParseError("coordinate out of bounds", line_no);
    entries.push_back({r - 1, c - 1, v});
    if ((symmetric || skew) && r != c) entries.push_back({c - 1, r - 1, skew ? -v : v});
  }

  // Coordinate files carry no order guarantee; flags need row-major order.
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row < b.row || (a.row == b.row && a.col < b.col);
  });

  std::vector<Int> values;
  std::vector<std::uint8_t> flags;
  values.reserve(entries.size());
  flags.reserve(entries.size());

  double scale = 1.0;
  if (field == "real") {
    double max_abs = 0.0;
    for (const Entry& e : entries) max_abs = std::max(max_abs, std::fabs(e.value));
    if (max_abs > 0.0)
      scale = std::ldexp(1.0, *quantize_bits) / max_abs;
    else
      scale = 0.0;
  }

  std::uint64_t prev_row = 0;
  bool first = true;
  for (const Entry& e : entries) {
    Int v;
    if (field == "real")
      v = static_cast<Int>(std::llround(e.value * scale));
    else
      v = static_cast<Int>(std::llround(e.value));
    values.push_back(v);
    flags.push_back(first || e.row != prev_row ? 1 : 0);
    prev_row = e.row;
    first = false;
  }

  IngestResult result{
      algo::SegmentedInput(IntVector::from_values(std::move(values)),
                           FlagVector(std::move(flags))),
      rows, cols, nnz};
  return result;
}

}  // namespace mmvram::mtx
