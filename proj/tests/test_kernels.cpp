#include <doctest.h>

#include <random>
#include <vector>

#include "kasami/bsymbol.hpp"
#include "kasami/error.hpp"
#include "kasami/simd/kernels.hpp"

using namespace kasami;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t count) {
  std::vector<std::uint64_t> v(count);
  for (auto& w : v) w = rng();
  return v;
}

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> v{&simd::scalar_kernels()};
  if (auto* avx = simd::avx2_kernels()) v.push_back(avx);
  return v;
}

}  // namespace

TEST_CASE("scalar or_shift_right matches a bit-by-bit shift") {
  std::mt19937_64 rng(7);
  for (std::size_t words : {1u, 2u, 5u, 17u}) {
    for (std::size_t shift : {0u, 1u, 13u, 63u, 64u, 65u, 127u, 130u}) {
      auto data = random_words(rng, words + shift / 64 + 2);
      auto expect = data;
      for (std::size_t i = 0; i < words * 64; ++i) {
        const std::size_t src = i + shift;
        if ((data[src / 64] >> (src % 64)) & 1) expect[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      simd::scalar_kernels().or_shift_right(data.data(), words, shift);
      CHECK(std::equal(expect.begin(), expect.begin() + words, data.begin()));
    }
  }
}

TEST_CASE("every kernel variant is bit-identical to the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (const auto* k : variants()) {
    CAPTURE(k->name);
    for (std::size_t words = 0; words <= 40; ++words) {
      const auto a = random_words(rng, words + 8);
      CHECK(k->popcount(a.data(), words) == ref.popcount(a.data(), words));

      auto x1 = random_words(rng, words + 8), x2 = x1;
      ref.xor_into(x1.data(), a.data(), words);
      k->xor_into(x2.data(), a.data(), words);
      CHECK(x1 == x2);

      for (std::size_t shift = 0; shift < 200; shift += 7) {
        auto s1 = random_words(rng, words + shift / 64 + 3), s2 = s1;
        ref.or_shift_right(s1.data(), words, shift);
        k->or_shift_right(s2.data(), words, shift);
        REQUIRE(s1 == s2);
      }
    }
  }
}

TEST_CASE("window scanner gives the same weight under every kernel") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {15u, 63u, 64u, 65u, 255u, 1023u}) {
    for (int trial = 0; trial < 6; ++trial) {
      BitVector x(n);
      const int density = trial + 1;
      for (std::size_t i = 0; i < n; ++i) x.set(i, rng() % (4 * density) == 0);
      for (std::size_t b : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{7}, std::size_t{31},
                            std::size_t{64}, std::size_t{65}, n / 2, n - 1, n}) {
        if (b < 1 || b > n) continue;
        const auto expect = wb_brute(x, b);
        for (const auto* k : variants()) {
          WindowScanner scan(n, *k);
          REQUIRE(scan.weight(x, b) == expect);
        }
      }
    }
  }
}

TEST_CASE("isa selection") {
  CHECK(simd::isa_available(simd::Isa::Scalar));
  CHECK(simd::parse_isa("scalar") == simd::Isa::Scalar);
  CHECK(simd::parse_isa("avx2") == simd::Isa::Avx2);
  CHECK_FALSE(simd::parse_isa("neon").has_value());
  const auto before = simd::active_kernels().isa;
  simd::select_isa(simd::Isa::Scalar);
  CHECK(simd::active_kernels().isa == simd::Isa::Scalar);
  if (!simd::isa_available(simd::Isa::Avx2)) CHECK_THROWS_AS(simd::select_isa(simd::Isa::Avx2), KasamiError);
  simd::select_isa(before);
}
