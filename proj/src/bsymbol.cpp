#include "kasami/bsymbol.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "kasami/error.hpp"
#include "kasami/parallel.hpp"

namespace kasami {

namespace {

void require_b(std::size_t b, std::size_t n) {
  if (b < 1 || b > n)
    throw KasamiError(Errc::BOutOfRange, "b = " + std::to_string(b) + " outside [1, " + std::to_string(n) + "]");
}

}  // namespace

BitVector cyclic_shift(const BitVector& x, std::int64_t steps) {
  const auto n = static_cast<std::int64_t>(x.size());
  BitVector out(x.size());
  if (n == 0) return out;
  const std::int64_t s = ((steps % n) + n) % n;
  for (std::int64_t i = 0; i < n; ++i)
    if (x.test(static_cast<std::size_t>((i + s) % n))) out.set(static_cast<std::size_t>(i));
  return out;
}

std::size_t wb_brute(const BitVector& x, std::size_t b) {
  const std::size_t n = x.size();
  require_b(b, n);
  std::size_t ones = 0;
  for (std::size_t k = 0; k < b; ++k) ones += x.test(k);
  std::size_t weight = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ones) ++weight;
    ones -= x.test(i);
    ones += x.test((i + b) % n);
  }
  return weight;
}

std::size_t wb_span(const BitVector& x, std::size_t b) {
  require_b(b, x.size());
  if (b > 30) throw KasamiError(Errc::ScanTooLarge, "wb_span walks 2^b combinations; b <= 30 required");
  std::vector<BitVector> shifts;
  for (std::size_t k = 0; k < b; ++k) shifts.push_back(cyclic_shift(x, static_cast<std::int64_t>(k)));
  BitVector cur(x.size());
  std::uint64_t total = 0;
  const std::uint64_t combos = std::uint64_t{1} << b;
  for (std::uint64_t i = 1; i < combos; ++i) {
    cur ^= shifts[static_cast<std::size_t>(std::countr_zero(i))];
    total += cur.popcount();
  }
  const std::uint64_t denom = std::uint64_t{1} << (b - 1);
  if (total % denom)
    throw KasamiError(Errc::NonIntegerResult, "span weight sum " + std::to_string(total) +
                                                  " not divisible by 2^" + std::to_string(b - 1));
  return static_cast<std::size_t>(total / denom);
}

WindowScanner::WindowScanner(std::size_t n) : WindowScanner(n, simd::active_kernels()) {}

WindowScanner::WindowScanner(std::size_t n, const simd::KernelTable& kernels)
    : n_(n), kernels_(&kernels), buf_((2 * n + 63) / 64 + (n + 63) / 64 + 8, 0) {}

std::size_t WindowScanner::weight(const BitVector& x, std::size_t b) {
  require_b(b, n_);
  if (x.size() != n_) throw KasamiError(Errc::InvalidInput, "vector length does not match scanner");
  const auto src = x.words();
  if (b == 1) return kernels_->popcount(src.data(), src.size());
  if (b == n_) return x.none() ? 0 : n_;

  // buf holds x twice back to back, so window reads past n wrap around.
  std::fill(buf_.begin(), buf_.end(), 0);
  std::copy(src.begin(), src.end(), buf_.begin());
  for (std::size_t w = 0; w < src.size(); ++w) {
    const std::size_t pos = n_ + 64 * w;
    const unsigned r = pos & 63;
    buf_[pos >> 6] |= src[w] << r;
    if (r) buf_[(pos >> 6) + 1] |= src[w] >> (64 - r);
  }
  const std::size_t words = (2 * n_ + 63) / 64;
  std::size_t span = 1;
  while (2 * span <= b) {
    kernels_->or_shift_right(buf_.data(), words, span);
    span *= 2;
  }
  if (span < b) kernels_->or_shift_right(buf_.data(), words, b - span);

  std::size_t count = kernels_->popcount(buf_.data(), n_ / 64);
  if (n_ & 63) count += static_cast<std::size_t>(std::popcount(buf_[n_ / 64] & ((std::uint64_t{1} << (n_ & 63)) - 1)));
  return count;
}

std::size_t wb_packed(const BitVector& x, std::size_t b) { return WindowScanner(x.size()).weight(x, b); }

BSupport support_b(const BitVector& x, std::size_t b) {
  const std::size_t n = x.size();
  require_b(b, n);
  BSupport s;
  for (std::size_t i = 0; i < n; ++i) {
    bool nonzero = false;
    for (std::size_t k = 0; k < b && !nonzero; ++k) nonzero = x.test((i + k) % n);
    (nonzero ? s.indices : s.complement).push_back(i + 1);
  }
  return s;
}

void check_scan_size(const KasamiCode& code, const ScanOptions& opts) {
  if (code.m() > opts.max_m)
    throw KasamiError(Errc::ScanTooLarge, "exhaustive scan over 2^" + std::to_string(code.dimension()) +
                                              " codewords exceeds the cap m <= " + std::to_string(opts.max_m));
}

std::size_t min_bsym_distance(const KasamiCode& code, std::size_t b, const ScanOptions& opts) {
  require_b(b, code.length());
  check_scan_size(code, opts);
  const unsigned workers = opts.workers ? opts.workers : default_workers();
  return parallel_chunks<std::size_t>(
      code.size(), workers, [] { return std::numeric_limits<std::size_t>::max(); },
      [&](std::size_t& best, std::uint64_t begin, std::uint64_t end) {
        WindowScanner scan(code.length());
        code.walk(begin, end, [&](CodeIndex idx, const BitVector& bits) {
          if (idx) best = std::min(best, scan.weight(bits, b));
        });
      },
      [](std::size_t& acc, const std::size_t& v) { acc = std::min(acc, v); });
}

}  // namespace kasami
