#include "mmvram/scan.hpp"

#include <algorithm>

#include "mmvram/mmu.hpp"
#include "mmvram/vcu.hpp"

namespace mmvram::algo {

namespace {

std::size_t padded_len(std::size_t n, std::size_t s) {
  return n == 0 ? 0 : ceil_div(n, s) * s;
}

// Padded-length scan: the returned vector keeps the zero-padded tail so
// that block-last extraction at the next level sees the true running
// values (padding with zeros leaves block prefix sums unchanged).
IntVector scan_padded(Machine& m, const IntVector& x) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t n = x.size();
  const auto upper = mmu::StructuredMatrix::upper_ones(m.s());

  IntVector z = mmu::matmul(m, x, upper, padded_len(n, s));
  if (n <= s) return z;

  IntVector block_lasts = vcu::gathers(m, z);
  IntVector scanned_lasts = scan_padded(m, block_lasts);
  vcu::scatters_merge(m, z, scanned_lasts);
  mmu::matmul_offset(m, z, s - 1, mmu::StructuredMatrix::carry_broadcast(m.s()));
  return z;
}

IntVector revert_simple_core(Machine& m, const IntVector& zspec, const IntVector& x,
                             const IntVector& fbar) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  IntVector z = zspec;
  z.declared_bits = zspec.declared_bits + 1;
  for (std::size_t b = 0; b < zspec.size(); b += s) {
    // Block views; the ParFor over blocks is simulated sequentially.
    IntVector fbar_blk;
    fbar_blk.declared_bits = fbar.declared_bits;
    fbar_blk.values.assign(fbar.values.begin() + static_cast<std::ptrdiff_t>(b),
                           fbar.values.begin() + static_cast<std::ptrdiff_t>(b + s));
    const Int mu = fbar_blk[s - 1];
    m.charge_scalar(fbar.declared_bits);
    if (mu == 0 || (mu == 1 && fbar_blk[0] == 1)) continue;  // speculation correct
    if (mu == static_cast<Int>(s)) {
      // Every element starts a segment: restore the input block.
      for (std::size_t i = 0; i < s; ++i) z[b + i] = x[b + i];
      m.charge(InstructionKind::Mask, s, x.declared_bits);
      continue;
    }
    IntVector z_blk;
    z_blk.declared_bits = z.declared_bits;
    z_blk.values.assign(z.values.begin() + static_cast<std::ptrdiff_t>(b),
                        z.values.begin() + static_cast<std::ptrdiff_t>(b + s));
    for (Int idx = fbar_blk[0] + 1; idx <= mu; ++idx) {
      IntVector lt = vcu::less_than_scalar(m, fbar_blk, idx).to_ints();
      const Int offset = vcu::sum(m, lt) - 1;
      m.charge_scalar(fbar.declared_bits);
      FlagVector eq = vcu::eq_scalar(m, fbar_blk, idx);
      // Scalar broadcast of the speculative prefix at the segment boundary;
      // the correction value always reads the unmodified speculative scan.
      IntVector corr(std::vector<Int>(s, zspec[b + static_cast<std::size_t>(offset)]),
                     zspec.declared_bits);
      m.charge(InstructionKind::Fills, s, zspec.declared_bits);
      corr = vcu::mask(m, corr, eq);
      z_blk = vcu::sub(m, z_blk, corr);
    }
    std::copy(z_blk.values.begin(), z_blk.values.end(),
              z.values.begin() + static_cast<std::ptrdiff_t>(b));
    z.declared_bits = std::max(z.declared_bits, z_blk.declared_bits);
  }
  return z;
}

// Full-length masked propagation: a segmented copy-scan of the per-segment
// correction seeds, with propagation barriers at segment starts and block
// starts. ceil(log2(s)) rounds of constant instruction count.
IntVector revert_kogge_core(Machine& m, const IntVector& zspec, const FlagVector& f) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t n = zspec.size();
  if (n == 0) return zspec;

  FlagVector comb = vcu::block_start_flags(m, n);
  FlagVector f_next = vcu::shiftl(m, f, 1);
  FlagVector comb_next = vcu::shiftl(m, comb, 1);
  // Seed positions: elements directly before an in-block segment start.
  FlagVector q = vcu::logic_and(m, f_next, vcu::logic_not(m, comb_next));
  FlagVector barrier = vcu::logic_or(m, f, comb);
  IntVector w = vcu::shiftr(m, vcu::mask(m, zspec, q), 1);

  FlagVector closed = barrier;
  for (std::size_t d = 1; d < s; d <<= 1) {
    IntVector w_shift = vcu::shiftr(m, w, d);
    FlagVector closed_shift = vcu::shiftr(m, closed, d);
    FlagVector open = vcu::logic_not(m, closed);
    IntVector addend = vcu::mask(m, w_shift, open);
    w = vcu::add(m, w, addend);
    closed = vcu::logic_or(m, closed, closed_shift);
  }
  return vcu::sub(m, zspec, w);
}

IntVector revert_core(Machine& m, RevertStrategy strategy, const IntVector& xbar,
                      const IntVector& x_padded, const FlagVector& f_padded,
                      const IntVector& fbar) {
  switch (strategy) {
    case RevertStrategy::Instruction: return vcu::revspec(m, xbar, fbar);
    case RevertStrategy::Simple: return revert_simple_core(m, xbar, x_padded, fbar);
    case RevertStrategy::KoggeStone: return revert_kogge_core(m, xbar, f_padded);
  }
  throw ConfigError("unknown revert strategy");
}

// Padded-length block segmented scan; exactly two matmul steps plus the
// revert cost.
IntVector block_seg_scan_padded(Machine& m, const IntVector& x, const FlagVector& f,
                                RevertStrategy strategy) {
  if (x.size() != f.size()) throw LengthError("block_seg_scan: length mismatch");
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t padded = padded_len(x.size(), s);
  const auto upper = mmu::StructuredMatrix::upper_ones(m.s());
  IntVector xbar = mmu::matmul(m, x, upper, padded);
  IntVector fbar = mmu::matmul(m, f, upper, padded);
  return revert_core(m, strategy, xbar, padded_to(x, padded), padded_to(f, padded), fbar);
}

// Contraction step of the segmented scan. The input is padded to a
// multiple of s with zero values and zero flags; the padded tail of z
// carries continued scan values so block-last extraction stays exact.
IntVector recurse(Machine& m, IntVector z, const FlagVector& f, RevertStrategy strategy) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t len = z.size();
  if (len <= s) return z;

  const auto upper = mmu::StructuredMatrix::upper_ones(m.s());
  IntVector block_flag_counts;
  {
    IntVector fbar = mmu::matmul(m, f, upper, len);
    block_flag_counts = vcu::gathers(m, fbar);
  }
  FlagVector f_blocks = vcu::logic_not(m, vcu::iszero(m, block_flag_counts));
  IntVector z_blocks = vcu::gathers(m, z);
  z_blocks = block_seg_scan_padded(m, z_blocks, f_blocks, strategy);
  z_blocks = recurse(m, std::move(z_blocks), padded_to(f_blocks, z_blocks.size()), strategy);
  vcu::scatters_merge(m, z, z_blocks);

  IntVector z_suffix = tail_from(z, s - 1);
  FlagVector f_suffix = tail_from(f, s - 1);
  update_first_segment(m, z_suffix, f_suffix);
  std::copy(z_suffix.values.begin(), z_suffix.values.end(),
            z.values.begin() + static_cast<std::ptrdiff_t>(s - 1));
  z.declared_bits = std::max(z.declared_bits, z_suffix.declared_bits);
  return z;
}

}  // namespace

SegmentedInput::SegmentedInput(IntVector x_in, FlagVector f_in)
    : x(std::move(x_in)), f(std::move(f_in)) {
  if (x.size() != f.size()) throw LengthError("segmented input: value/flag length mismatch");
  if (!f.empty()) f[0] = 1;
}

IntVector scan(Machine& m, const IntVector& x) {
  IntVector z = scan_padded(m, x);
  z.values.resize(x.size());
  return z;
}

IntVector block_seg_scan(Machine& m, const IntVector& x, const FlagVector& f,
                         RevertStrategy strategy) {
  IntVector z = block_seg_scan_padded(m, x, f, strategy);
  z.values.resize(x.size());
  return z;
}

IntVector seg_scan(Machine& m, const SegmentedInput& input, RevertStrategy strategy) {
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t n = input.x.size();
  if (n == 0) return {};
  const std::size_t padded = padded_len(n, s);
  FlagVector f = padded_to(input.f, padded);
  IntVector z = block_seg_scan_padded(m, padded_to(input.x, padded), f, strategy);
  z = recurse(m, std::move(z), f, strategy);
  z.values.resize(n);
  return z;
}

void update_first_segment(Machine& m, IntVector& z_suffix, const FlagVector& f_suffix) {
  if (z_suffix.size() != f_suffix.size())
    throw LengthError("update_first_segment: length mismatch");
  const std::size_t s = static_cast<std::size_t>(m.s());
  const std::size_t n = z_suffix.size();
  if (n == 0) return;
  const std::size_t padded = padded_len(n, s);

  IntVector z = padded_to(z_suffix, padded);
  FlagVector f = padded_to(f_suffix, padded);

  IntVector fbar = mmu::matmul(m, f, mmu::StructuredMatrix::upper_ones(m.s()), padded);
  IntVector fbar_start = vcu::fills(m, fbar);
  FlagVector same_segment = vcu::iszero(m, vcu::sub(m, fbar, fbar_start));
  // The carry source itself (each block's first element) is excluded along
  // with explicit segment starts; it already holds its corrected value.
  FlagVector comb = vcu::block_start_flags(m, padded);
  FlagVector keep_out = vcu::logic_or(m, f, comb);
  FlagVector update = vcu::logic_and(m, same_segment, vcu::logic_not(m, keep_out));
  IntVector carry = vcu::fills(m, z);
  carry = vcu::mask(m, carry, update);
  z = vcu::add(m, z, carry);

  std::copy(z.values.begin(), z.values.begin() + static_cast<std::ptrdiff_t>(n),
            z_suffix.values.begin());
  z_suffix.declared_bits = z.declared_bits;
}

IntVector revert_simple(Machine& m, const IntVector& z, const IntVector& x,
                        const FlagVector& f) {
  if (z.size() != x.size() || z.size() != f.size())
    throw LengthError("revert_simple: length mismatch");
  const std::size_t padded = padded_len(z.size(), static_cast<std::size_t>(m.s()));
  IntVector fbar = mmu::matmul(m, f, mmu::StructuredMatrix::upper_ones(m.s()), padded);
  IntVector out = revert_simple_core(m, padded_to(z, padded), padded_to(x, padded), fbar);
  out.values.resize(z.size());
  return out;
}

IntVector revert_kogge_stone(Machine& m, const IntVector& z, const IntVector& x,
                             const FlagVector& f) {
  if (z.size() != x.size() || z.size() != f.size())
    throw LengthError("revert_kogge_stone: length mismatch");
  const std::size_t padded = padded_len(z.size(), static_cast<std::size_t>(m.s()));
  IntVector out = revert_kogge_core(m, padded_to(z, padded), padded_to(f, padded));
  out.values.resize(z.size());
  return out;
}

}  // namespace mmvram::algo
