#include "mmvram/oracle.hpp"

namespace mmvram::oracle {

std::vector<Int> scan(const std::vector<Int>& x) {
  std::vector<Int> z(x.size());
  Int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i];
    z[i] = acc;
  }
  return z;
}

std::vector<Int> seg_scan(const std::vector<Int>& x, const std::vector<std::uint8_t>& f) {
  if (x.size() != f.size()) throw LengthError("oracle seg_scan: length mismatch");
  std::vector<Int> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == 0 || f[i] == 1)
      z[i] = x[i];
    else
      z[i] = z[i - 1] + x[i];
  }
  return z;
}

std::vector<Int> seg_sum(const std::vector<Int>& x, const std::vector<std::uint8_t>& f) {
  if (x.size() != f.size()) throw LengthError("oracle seg_sum: length mismatch");
  std::vector<Int> z;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == 0 || f[i] == 1)
      z.push_back(x[i]);
    else
      z.back() += x[i];
  }
  return z;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim != b.dim) throw DimensionError("oracle matmul: shape mismatch");
  SquareMatrix c(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Int aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

}  // namespace mmvram::oracle
