#include <bit>

#include "kasami/simd/kernels.hpp"

namespace kasami::simd {
namespace {

void or_shift_right(std::uint64_t* data, std::size_t words, std::size_t shift) {
  const std::size_t s = shift >> 6;
  const unsigned r = shift & 63;
  if (r == 0) {
    for (std::size_t w = 0; w < words; ++w) data[w] |= data[w + s];
    return;
  }
  for (std::size_t w = 0; w < words; ++w)
    data[w] |= (data[w + s] >> r) | (data[w + s + 1] << (64 - r));
}

std::uint64_t popcount(const std::uint64_t* data, std::size_t words) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint64_t>(std::popcount(data[w]));
  return c;
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
}

constexpr KernelTable kScalar{Isa::Scalar, "scalar", &or_shift_right, &popcount, &xor_into};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace kasami::simd
