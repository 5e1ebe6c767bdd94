#include "mmvram/pipelines.hpp"

#include <algorithm>

#include "mmvram/mmu.hpp"
#include "mmvram/vcu.hpp"

namespace mmvram::pipeline {

FlagVector segment_end_flags(Machine& m, const FlagVector& f) {
  if (f.empty()) return f;
  FlagVector shifted = vcu::shiftl(m, f, 1);
  FlagVector last = vcu::single_flag(m, f.size(), f.size() - 1);
  return vcu::logic_or(m, shifted, last);
}

IntVector compress(Machine& m, const IntVector& x, const FlagVector& f) {
  if (x.size() != f.size()) throw LengthError("compress: length mismatch");
  if (x.empty()) return {};
  IntVector fhat = algo::scan(m, f.to_ints());
  // fhat(i) - 1 is the destination slot of a selected element; inverting
  // that map into source indices is part of the all-to-all gather wiring.
  std::vector<Int> sources;
  sources.reserve(static_cast<std::size_t>(fhat[fhat.size() - 1]));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i]) sources.push_back(static_cast<Int>(i));
  const int index_bits = bits_for_magnitude(x.size());
  return vcu::index_gather(m, x, IntVector(std::move(sources), index_bits));
}

IntVector diff(Machine& m, const IntVector& z, bool use_mmu) {
  if (z.empty()) return z;
  if (!use_mmu) {
    IntVector prev = vcu::shiftr(m, z, 1);
    return vcu::sub(m, z, prev);
  }
  IntVector within = mmu::matmul(m, z, mmu::StructuredMatrix::diff(m.s()));
  // Block-first entries came out as plain copies; subtract the previous
  // block's last element there.
  IntVector block_lasts = vcu::gathers(m, z);
  IntVector at_lasts = vcu::scatters(m, block_lasts, z.size());
  IntVector at_firsts = vcu::shiftr(m, at_lasts, 1);
  return vcu::sub(m, within, at_firsts);
}

IntVector segmented_sum(Machine& m, const algo::SegmentedInput& input, bool diff_via_mmu) {
  if (input.x.empty()) return {};
  IntVector xhat = algo::scan(m, input.x);
  FlagVector end_flags = segment_end_flags(m, input.f);
  IntVector ends = compress(m, xhat, end_flags);
  return diff(m, ends, diff_via_mmu);
}

IntVector segmented_scan(Machine& m, const algo::SegmentedInput& input,
                         RevertCharge charge_mode) {
  const std::size_t n = input.x.size();
  if (n == 0) return {};
  IntVector xhat = algo::scan(m, input.x);
  IntVector fhat = algo::scan(m, input.f.to_ints());
  FlagVector end_flags = segment_end_flags(m, input.f);
  IntVector ends = compress(m, xhat, end_flags);

  // Revert: subtract the running total at the end of segment k-1 from
  // every element of segment k; segment 0 is untouched. fhat values are
  // the 1-based segment index of each element.
  IntVector z = xhat;
  z.declared_bits = xhat.declared_bits + 1;
  const std::size_t segments = ends.size();
  const int bits = std::max(xhat.declared_bits, ends.declared_bits);
  std::size_t i = 0;
  while (i < n && fhat[i] < 2) ++i;
  for (std::size_t k = 1; k < segments; ++k) {
    const Int seg_label = static_cast<Int>(k) + 1;
    const Int correction = ends[k - 1];
    while (i < n && fhat[i] == seg_label) {
      z[i] = narrow_to_storage(static_cast<Wide>(xhat[i]) - correction, "SUB");
      ++i;
    }
    if (charge_mode == RevertCharge::PerSegment) m.charge(InstructionKind::Sub, n, bits);
  }
  if (charge_mode == RevertCharge::Fused && segments > 1)
    m.charge(InstructionKind::Sub, n, bits);
  m.track_magnitude(z, "SUB");
  return z;
}

}  // namespace mmvram::pipeline
