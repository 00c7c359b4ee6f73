#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kasami/bitvector.hpp"
#include "kasami/code.hpp"
#include "kasami/simd/kernels.hpp"

namespace kasami {

/// Rotation with out[i] = x[(i + steps) mod n]. One step maps c(alpha, beta)
/// to c(alpha*theta, beta*eta), and window i of pi_b(x) is the union of
/// coordinate i over shifts 0..b-1. Negative steps rotate the other way.
BitVector cyclic_shift(const BitVector& x, std::int64_t steps);

/// b-symbol weight by definition: the number of cyclic windows
/// (x_i, ..., x_{i+b-1}) that are not all zero. Ground truth for every other path.
std::size_t wb_brute(const BitVector& x, std::size_t b);

/// b-symbol weight as (sum of Hamming weights over the span of x and its first
/// b-1 shifts) / 2^{b-1}. Walks all 2^b combinations, so b is capped at 30.
std::size_t wb_span(const BitVector& x, std::size_t b);

/// Word-parallel b-symbol weight: OR-folds the cyclically extended vector in
/// O(log b) shift passes and counts the surviving bits. Reuses its buffers.
class WindowScanner {
 public:
  explicit WindowScanner(std::size_t n);
  WindowScanner(std::size_t n, const simd::KernelTable& kernels);

  std::size_t weight(const BitVector& x, std::size_t b);

 private:
  std::size_t n_;
  const simd::KernelTable* kernels_;
  std::vector<std::uint64_t> buf_;
};

/// Convenience wrapper over a temporary WindowScanner.
std::size_t wb_packed(const BitVector& x, std::size_t b);

/// b-symbol support I_b(x) with 1-based positions: index i is present when the
/// window starting at coordinate i is nonzero.
struct BSupport {
  std::vector<std::size_t> indices;
  std::vector<std::size_t> complement;
};

BSupport support_b(const BitVector& x, std::size_t b);

struct ScanOptions {
  unsigned workers = 0;  // 0 = available parallelism
  int max_m = 6;         // exhaustive scans refuse larger m
};

/// Throws ScanTooLarge when code.m() exceeds opts.max_m.
void check_scan_size(const KasamiCode& code, const ScanOptions& opts);

/// Minimum b-symbol weight over all nonzero codewords (= d_b(C) by linearity).
std::size_t min_bsym_distance(const KasamiCode& code, std::size_t b, const ScanOptions& opts = {});

}  // namespace kasami
