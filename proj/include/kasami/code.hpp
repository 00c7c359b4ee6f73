#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kasami/bitvector.hpp"
#include "kasami/field.hpp"

namespace kasami {

struct Codeword {
  BitVector bits;
  std::optional<std::pair<FieldElement, FieldElement>> origin;  // (alpha, beta)
};

/// Packed coordinates of a codeword in the GF(2)-basis used for enumeration:
/// the low 2m bits are alpha in the polynomial basis (theta^0..theta^{2m-1}),
/// the next m bits are beta's coordinates on eta^0..eta^{m-1}.
using CodeIndex = std::uint64_t;

/// The binary Kasami code c(alpha, beta) = (T_{2m}(alpha x) + T_m(beta x^{q+1}))
/// with x running over theta, theta^2, ..., theta^{q^2-1}. Storage slot i holds
/// the evaluation at x = theta^{i+1}.
class KasamiCode {
 public:
  explicit KasamiCode(FieldTower field);

  const FieldTower& field() const noexcept { return field_; }
  int m() const noexcept { return field_.m(); }
  std::size_t length() const noexcept { return field_.n(); }
  int dimension() const noexcept { return 3 * field_.m(); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << dimension(); }
  std::uint32_t min_distance() const noexcept {
    return (std::uint32_t{1} << (2 * m() - 1)) - (std::uint32_t{1} << (m() - 1));
  }

  /// Literal evaluation of every coordinate. Throws BetaNotInSubfield.
  Codeword codeword(FieldElement alpha, FieldElement beta) const;

  FieldElement alpha_of(CodeIndex idx) const noexcept {
    return FieldElement{static_cast<std::uint32_t>(idx & ((std::uint64_t{1} << (2 * m())) - 1))};
  }
  FieldElement beta_of(CodeIndex idx) const noexcept;
  /// Inverse of (alpha_of, beta_of). Throws BetaNotInSubfield.
  CodeIndex index_of(FieldElement alpha, FieldElement beta) const;

  /// Codeword bits by XOR of basis rows; equal to codeword(alpha_of(idx), beta_of(idx)).bits.
  BitVector bits_of(CodeIndex idx) const;
  /// Generator rows: c(theta^k, 0) for k < 2m, then c(0, eta^k) for k < m.
  const std::vector<BitVector>& basis() const noexcept { return basis_; }

  /// Gray-code walk over indices [begin, end) of the enumeration order; calls
  /// fn(index, bits) once per codeword. `bits` is only valid during the call.
  void walk(std::uint64_t begin, std::uint64_t end,
            const std::function<void(CodeIndex, const BitVector&)>& fn) const;

 private:
  FieldTower field_;
  std::vector<BitVector> basis_;
};

/// The character sum S(alpha, beta) over x in GF(q^2)^* by literal summation.
std::int64_t exp_sum_direct(FieldElement alpha, FieldElement beta, const KasamiCode& code);
/// S(alpha, beta) from its four-case closed form, using only traces and the norm.
std::int64_t exp_sum_closed(FieldElement alpha, FieldElement beta, const KasamiCode& code);
/// Hamming weight (q^2 - 1 - S) / 2. Throws ParityViolation when S is impossible.
std::uint32_t hamming_weight_from_sum(std::int64_t s, const KasamiCode& code);

}  // namespace kasami
