#include "kasami/code.hpp"

#include <bit>
#include <cstdio>
#include <string>

#include "kasami/error.hpp"
#include "kasami/simd/kernels.hpp"

namespace kasami {

namespace {

void require_subfield(const FieldTower& f, FieldElement beta) {
  if (!f.valid(beta) || !f.in_subfield(beta)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "beta = 0x%x is not in GF(2^m)", beta.bits);
    throw KasamiError(Errc::BetaNotInSubfield, buf);
  }
}

}  // namespace

KasamiCode::KasamiCode(FieldTower field) : field_(std::move(field)) {
  const int m = field_.m();
  for (int k = 0; k < 2 * m; ++k) basis_.push_back(codeword(FieldElement{1u << k}, {}).bits);
  for (int k = 0; k < m; ++k) basis_.push_back(codeword({}, field_.from_subfield_coords(1u << k)).bits);
}

Codeword KasamiCode::codeword(FieldElement alpha, FieldElement beta) const {
  if (!field_.valid(alpha)) throw KasamiError(Errc::InvalidInput, "alpha out of range");
  require_subfield(field_, beta);
  const std::uint32_t n = field_.n(), q = field_.q();
  Codeword c{BitVector(n), std::make_pair(alpha, beta)};
  for (std::uint32_t i = 1; i <= n; ++i) {
    const int a = field_.trace_full(field_.mul(alpha, field_.exp(i)));
    const int b = field_.trace_sub_unchecked(field_.mul(beta, field_.exp(std::uint64_t(i) * (q + 1))));
    if (a ^ b) c.bits.set(i - 1);
  }
  return c;
}

FieldElement KasamiCode::beta_of(CodeIndex idx) const noexcept {
  return field_.from_subfield_coords(static_cast<std::uint32_t>(idx >> (2 * m())));
}

CodeIndex KasamiCode::index_of(FieldElement alpha, FieldElement beta) const {
  if (!field_.valid(alpha)) throw KasamiError(Errc::InvalidInput, "alpha out of range");
  require_subfield(field_, beta);
  return CodeIndex{alpha.bits} | (CodeIndex{field_.subfield_coords(beta)} << (2 * m()));
}

BitVector KasamiCode::bits_of(CodeIndex idx) const {
  BitVector v(length());
  for (int k = 0; k < dimension(); ++k)
    if ((idx >> k) & 1) v ^= basis_[k];
  return v;
}

void KasamiCode::walk(std::uint64_t begin, std::uint64_t end,
                      const std::function<void(CodeIndex, const BitVector&)>& fn) const {
  if (begin >= end) return;
  const auto& kern = simd::active_kernels();
  CodeIndex gray = begin ^ (begin >> 1);
  BitVector bits = bits_of(gray);
  const std::size_t words = bits.word_count();
  for (std::uint64_t i = begin;;) {
    fn(gray, bits);
    if (++i == end) break;
    const int k = std::countr_zero(i);
    gray ^= CodeIndex{1} << k;
    kern.xor_into(bits.words().data(), basis_[k].words().data(), words);
  }
}

std::int64_t exp_sum_direct(FieldElement alpha, FieldElement beta, const KasamiCode& code) {
  const auto& f = code.field();
  require_subfield(f, beta);
  const std::uint32_t q = f.q();
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i < f.n(); ++i) {
    const FieldElement x = f.exp(i);
    const int t = f.trace_full(f.mul(alpha, x)) ^
                  f.trace_sub_unchecked(f.mul(beta, f.exp(std::uint64_t(i) * (q + 1))));
    s += t ? -1 : 1;
  }
  return s;
}

std::int64_t exp_sum_closed(FieldElement alpha, FieldElement beta, const KasamiCode& code) {
  const auto& f = code.field();
  require_subfield(f, beta);
  const std::int64_t q = f.q();
  if (beta.is_zero()) return alpha.is_zero() ? q * q - 1 : -1;
  const int t = f.trace(f.div(f.norm(alpha), beta), TraceLevel::Subfield);
  return t ? q - 1 : -q - 1;
}

std::uint32_t hamming_weight_from_sum(std::int64_t s, const KasamiCode& code) {
  const std::int64_t n = code.length();
  const std::int64_t diff = n - s;
  if (diff < 0 || diff > 2 * n || diff % 2)
    throw KasamiError(Errc::ParityViolation, "S = " + std::to_string(s) + " cannot be a character sum of length " +
                                                 std::to_string(n));
  return static_cast<std::uint32_t>(diff / 2);
}

}  // namespace kasami
