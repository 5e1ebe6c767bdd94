#include "mmvram/applications.hpp"

#include <algorithm>

#include "mmvram/vcu.hpp"

namespace mmvram::app {

namespace {

// Partial products of |a| against the bits of |b|: c_i = (a << i) if bit
// i of b is set, else 0. Preparing the layout is one constant-depth
// vector step over the m products of up to 2m bits each.
IntVector partial_products(Machine& m, std::uint64_t a_mag, std::uint64_t b_mag) {
  const int mbits = b_mag == 0 ? 1 : std::bit_width(b_mag);
  std::vector<Int> c(static_cast<std::size_t>(mbits), 0);
  for (int i = 0; i < mbits; ++i)
    if ((b_mag >> i) & 1)
      c[static_cast<std::size_t>(i)] =
          narrow_to_storage(static_cast<Wide>(a_mag) << i, "partial products");
  IntVector layout = IntVector::from_values(std::move(c));
  m.charge(InstructionKind::Mask, layout.size(), 2 * mbits);
  m.track_magnitude(layout, "partial products");
  return layout;
}

}  // namespace

Int mul_via_scan(Machine& m, Int a, Int b) {
  const bool negative = (a < 0) != (b < 0);
  IntVector layout = partial_products(m, abs_u64(a), abs_u64(b));
  IntVector scanned = algo::scan(m, layout);
  const Int magnitude = scanned.empty() ? 0 : scanned[scanned.size() - 1];
  return negative ? -magnitude : magnitude;
}

IntVector elementwise_mul(Machine& m, const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) throw LengthError("elementwise_mul: length mismatch");
  const std::size_t n = x.size();
  if (n == 0) return {};

  // Uniform segment width: enough bits for the largest multiplier.
  const std::uint64_t y_max = y.max_abs();
  const std::size_t mbits = y_max == 0 ? 1 : static_cast<std::size_t>(std::bit_width(y_max));
  const std::size_t total = n * mbits;

  std::vector<Int> c(total, 0);
  std::vector<bool> negative(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a_mag = abs_u64(x[i]);
    const std::uint64_t b_mag = abs_u64(y[i]);
    negative[i] = (x[i] < 0) != (y[i] < 0);
    for (std::size_t bit = 0; bit < mbits; ++bit)
      if ((b_mag >> bit) & 1)
        c[i * mbits + bit] =
            narrow_to_storage(static_cast<Wide>(a_mag) << bit, "partial products");
  }
  IntVector layout = IntVector::from_values(std::move(c));
  m.charge(InstructionKind::Mask, total, static_cast<int>(2 * mbits));
  m.track_magnitude(layout, "partial products");

  FlagVector segments = vcu::stride_flags(m, total, mbits);
  IntVector scanned = algo::seg_scan(m, algo::SegmentedInput(std::move(layout), segments));

  // Segment-last positions hold the products.
  std::vector<Int> last_positions(n);
  for (std::size_t i = 0; i < n; ++i)
    last_positions[i] = static_cast<Int>(i * mbits + mbits - 1);
  IntVector z = vcu::index_gather(
      m, scanned, IntVector(std::move(last_positions), bits_for_magnitude(total)));
  for (std::size_t i = 0; i < n; ++i)
    if (negative[i]) z[i] = -z[i];
  return z;
}

SquareMatrix matmul_via_seg_scan(Machine& m, const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim != b.dim) throw DimensionError("matmul_via_seg_scan: shape mismatch");
  const std::size_t n = a.dim;
  if (n == 0) return SquareMatrix(0);
  for (Int v : a.a)
    if (v < 0) throw ConfigError("matmul_via_seg_scan requires non-negative entries");
  for (Int v : b.a)
    if (v < 0) throw ConfigError("matmul_via_seg_scan requires non-negative entries");

  // Segment (i,j) pairs row i of a with column j of b, elementwise:
  // lhs = each row of a repeated n times; rhs = the column sequence of b
  // repeated n times. Preparing both is one constant-depth vector step.
  const std::size_t cube = n * n * n;
  std::vector<Int> lhs(cube), rhs(cube);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t rep = 0; rep < n; ++rep)
      for (std::size_t k = 0; k < n; ++k) lhs[pos++] = a.at(i, k);
  pos = 0;
  for (std::size_t rep = 0; rep < n; ++rep)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) rhs[pos++] = b.at(k, j);
  IntVector lhs_vec = IntVector::from_values(std::move(lhs));
  IntVector rhs_vec = IntVector::from_values(std::move(rhs));
  m.charge(InstructionKind::Mask, cube,
           std::max(lhs_vec.declared_bits, rhs_vec.declared_bits));

  IntVector products = elementwise_mul(m, lhs_vec, rhs_vec);

  FlagVector segments = vcu::stride_flags(m, cube, n);
  IntVector sums = algo::seg_scan(m, algo::SegmentedInput(std::move(products), segments));

  std::vector<Int> last_positions(n * n);
  for (std::size_t e = 0; e < n * n; ++e)
    last_positions[e] = static_cast<Int>(e * n + n - 1);
  IntVector totals = vcu::index_gather(
      m, sums, IntVector(std::move(last_positions), bits_for_magnitude(cube)));

  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.at(i, j) = totals[i * n + j];
  return c;
}

}  // namespace mmvram::app
