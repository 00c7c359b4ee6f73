#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Word-parallel kernels behind the b-symbol window scans. Every variant must be
// bit-identical to the scalar reference; tests/test_kernels.cpp enforces that.
namespace kasami::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  // data[w] |= bits [64w + shift, 64w + shift + 64) of data, for w in [0, words).
  // Reads reach index words + shift/64 + 1, so callers pad with zero words.
  void (*or_shift_right)(std::uint64_t* data, std::size_t words, std::size_t shift);
  std::uint64_t (*popcount)(const std::uint64_t* data, std::size_t words);
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
};

const KernelTable& scalar_kernels() noexcept;
/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

bool isa_available(Isa isa) noexcept;
Isa best_isa() noexcept;

/// Process-wide kernel table; defaults to best_isa().
const KernelTable& active_kernels() noexcept;
/// Throws KasamiError(InvalidInput) when the requested variant is unavailable.
void select_isa(Isa isa);

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

namespace detail {
const KernelTable* avx2_table() noexcept;
}

}  // namespace kasami::simd
