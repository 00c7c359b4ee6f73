// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kasami/simd/kernels.hpp"

namespace kasami::simd {
namespace {

void or_shift_right(std::uint64_t* data, std::size_t words, std::size_t shift) {
  const std::size_t s = shift >> 6;
  const unsigned r = shift & 63;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(r));
  // A count of 64 zeroes every lane, which is what r == 0 needs.
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - r));
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + w));
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + w + s));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + w + s + 1));
    const __m256i v = _mm256_or_si256(_mm256_srl_epi64(lo, lo_count), _mm256_sll_epi64(hi, hi_count));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + w), _mm256_or_si256(cur, v));
  }
  for (; w < words; ++w) {
    const std::uint64_t lo = data[w + s];
    data[w] |= r ? (lo >> r) | (data[w + s + 1] << (64 - r)) : lo;
  }
}

// Nibble-lookup popcount with horizontal byte sums via SAD.
std::uint64_t popcount(const std::uint64_t* data, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + w));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; w < words; ++w) total += static_cast<std::uint64_t>(std::popcount(data[w]));
  return total;
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(a, b));
  }
  for (; w < words; ++w) dst[w] ^= src[w];
}

constexpr KernelTable kAvx2{Isa::Avx2, "avx2", &or_shift_right, &popcount, &xor_into};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept { return &kAvx2; }
}  // namespace detail

}  // namespace kasami::simd
