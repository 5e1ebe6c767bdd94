#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmvram {

using Int = std::int64_t;
using Wide = __int128;

// -- errors -------------------------------------------------------------

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a produced value exceeds the configured word width (strict
// mode) or the simulator's 64-bit storage.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  std::size_t line_number = 0;
};

// -- helpers ------------------------------------------------------------

inline std::uint64_t abs_u64(Int v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

// Signed bit width: smallest B such that |v| <= max_abs fits a B-bit
// two's-complement word with headroom for the sign.
inline int bits_for_magnitude(std::uint64_t max_abs) {
  if (max_abs == 0) return 1;
  return std::bit_width(max_abs) + 1;
}

inline int ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return std::bit_width(v - 1);
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

// -- value carriers -----------------------------------------------------

// Sequence of signed integers plus a declared per-element bit width.
// Values are stored at full 64-bit precision; declared_bits is a policy
// label that feeds the cost ledger, never a storage truncation.
struct IntVector {
  std::vector<Int> values;
  int declared_bits = 1;

  IntVector() = default;
  IntVector(std::vector<Int> v, int bits) : values(std::move(v)), declared_bits(bits) {}

  // Computes the exact declared width from the data.
  static IntVector from_values(std::vector<Int> v) {
    std::uint64_t m = 0;
    for (Int e : v) m = std::max(m, abs_u64(e));
    int bits = bits_for_magnitude(m);
    return IntVector(std::move(v), bits);
  }

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  Int operator[](std::size_t i) const { return values[i]; }
  Int& operator[](std::size_t i) { return values[i]; }

  std::uint64_t max_abs() const {
    std::uint64_t m = 0;
    for (Int e : values) m = std::max(m, abs_u64(e));
    return m;
  }

  bool operator==(const IntVector& other) const { return values == other.values; }
};

// Sequence of {0,1} values marking segment starts or derived flag scans.
struct FlagVector {
  std::vector<std::uint8_t> bits;

  FlagVector() = default;
  explicit FlagVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {
    for (auto v : bits)
      if (v > 1) throw ConfigError("flag vector entries must be 0 or 1");
  }

  static FlagVector zeros(std::size_t n) { return FlagVector(std::vector<std::uint8_t>(n, 0)); }
  static FlagVector ones(std::size_t n) { return FlagVector(std::vector<std::uint8_t>(n, 1)); }

  std::size_t size() const { return bits.size(); }
  bool empty() const { return bits.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits[i]; }

  std::uint64_t popcount() const {
    std::uint64_t c = 0;
    for (auto b : bits) c += b;
    return c;
  }

  IntVector to_ints() const {
    std::vector<Int> v(bits.begin(), bits.end());
    return IntVector(std::move(v), 1);
  }

  bool operator==(const FlagVector& other) const { return bits == other.bits; }
};

// Host-side view plumbing: padding, slicing and write-back of vector
// ranges cost nothing; only executed instructions are charged.
inline IntVector padded_to(const IntVector& x, std::size_t len) {
  IntVector y = x;
  y.values.resize(len, 0);
  return y;
}

inline FlagVector padded_to(const FlagVector& f, std::size_t len) {
  FlagVector g = f;
  g.bits.resize(len, 0);
  return g;
}

inline IntVector tail_from(const IntVector& x, std::size_t start) {
  IntVector y;
  y.declared_bits = x.declared_bits;
  y.values.assign(x.values.begin() + static_cast<std::ptrdiff_t>(std::min(start, x.size())),
                  x.values.end());
  return y;
}

inline FlagVector tail_from(const FlagVector& f, std::size_t start) {
  FlagVector g;
  g.bits.assign(f.bits.begin() + static_cast<std::ptrdiff_t>(std::min(start, f.size())),
                f.bits.end());
  return g;
}

// Dense square integer matrix, row-major.
struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<Int> a;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : dim(n), a(n * n, 0) {}
  SquareMatrix(std::size_t n, std::vector<Int> data) : dim(n), a(std::move(data)) {
    if (a.size() != n * n) throw DimensionError("matrix data does not match dimension");
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
  Int& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }

  bool operator==(const SquareMatrix& other) const {
    return dim == other.dim && a == other.a;
  }
};

}  // namespace mmvram
