#include <atomic>
#include <string>

#include "kasami/error.hpp"
#include "kasami/simd/kernels.hpp"

namespace kasami::simd {

#ifndef KASAMI_HAVE_AVX2_KERNELS
namespace detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace detail
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(KASAMI_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{nullptr};
  return slot;
}

}  // namespace

const KernelTable* avx2_kernels() noexcept { return cpu_has_avx2() ? detail::avx2_table() : nullptr; }

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2_kernels() != nullptr;
  }
  return false;
}

Isa best_isa() noexcept { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

static const KernelTable& table_for(Isa isa) noexcept {
  if (isa == Isa::Avx2 && avx2_kernels()) return *avx2_kernels();
  return scalar_kernels();
}

const KernelTable& active_kernels() noexcept {
  auto& slot = active_slot();
  const KernelTable* t = slot.load(std::memory_order_acquire);
  if (!t) {
    t = &table_for(best_isa());
    slot.store(t, std::memory_order_release);
  }
  return *t;
}

void select_isa(Isa isa) {
  if (!isa_available(isa))
    throw KasamiError(Errc::InvalidInput, "instruction set " + std::string(isa_name(isa)) + " is unavailable");
  active_slot().store(&table_for(isa), std::memory_order_release);
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  return std::nullopt;
}

}  // namespace kasami::simd
