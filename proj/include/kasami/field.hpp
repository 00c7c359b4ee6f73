#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kasami {

/// Polynomial-basis bit pattern of an element of GF(2^{2m}). Subfield elements
/// of GF(2^m) use the same representation (they are the fixed points of x -> x^q).
struct FieldElement {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) noexcept {
    return FieldElement{a.bits ^ b.bits};
  }
  friend constexpr FieldElement& operator+=(FieldElement& a, FieldElement b) noexcept {
    a.bits ^= b.bits;
    return a;
  }
  friend constexpr bool operator==(FieldElement, FieldElement) noexcept = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) noexcept = default;
};

enum class TraceLevel {
  Subfield,  // T_m : GF(2^m) -> GF(2)
  Full,      // T_{2m} : GF(2^{2m}) -> GF(2)
};

inline constexpr int kMinM = 2;
inline constexpr int kMaxM = 10;

/// Default modulus for GF(2^degree): the Conway polynomial, as a bit-mask with
/// bit i holding the coefficient of x^i. Available for even degrees 4..20.
std::uint64_t default_modulus(int degree);

/// True if `poly` (bit-mask) is a primitive polynomial of its degree over GF(2).
bool is_primitive_polynomial(std::uint64_t poly);

/// Arithmetic context for GF(2^m) inside GF(2^{2m}) with theta the class of x
/// and eta = theta^{q+1}. Immutable after construction.
class FieldTower {
 public:
  static FieldTower build(int m, std::optional<std::uint64_t> modulus_override = std::nullopt);

  int m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Multiplicative group order of the big field, q^2 - 1; also the code length.
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return q_ * q_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {}; }
  FieldElement one() const noexcept { return FieldElement{1}; }
  FieldElement theta() const noexcept { return exp(1); }
  FieldElement eta() const noexcept { return exp(q_ + 1); }

  /// theta^k for any k >= 0.
  FieldElement exp(std::uint64_t k) const noexcept { return FieldElement{exp_[k % n_]}; }
  /// Discrete log base theta; throws InvalidInput on zero.
  std::uint32_t log(FieldElement a) const;

  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.is_zero() || b.is_zero()) return {};
    return FieldElement{exp_[log_[a.bits] + log_[b.bits]]};
  }
  FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;

  bool in_subfield(FieldElement a) const noexcept {
    return a.is_zero() || log_[a.bits] % (q_ + 1) == 0;
  }
  /// The map x -> x^{q+1}; always lands in GF(2^m).
  FieldElement norm(FieldElement a) const noexcept { return pow(a, q_ + 1); }

  /// T_m or T_{2m}. Throws NotInSubfield for a subfield trace of a non-subfield element.
  int trace(FieldElement x, TraceLevel level) const;
  int trace_full(FieldElement x) const noexcept { return full_trace_[x.bits]; }
  /// Unchecked T_m; x must already be known to lie in GF(2^m).
  int trace_sub_unchecked(FieldElement x) const noexcept { return sub_trace_[x.bits] & 1; }

  /// Minimal polynomial of a over GF(2) as a bit-mask.
  std::uint64_t minimal_polynomial(FieldElement a) const;

  /// Coordinates of a subfield element on the GF(2)-basis eta^0, ..., eta^{m-1}
  /// (bit k = coefficient of eta^k). Throws NotInSubfield.
  std::uint32_t subfield_coords(FieldElement a) const;
  FieldElement from_subfield_coords(std::uint32_t coords) const noexcept;

  /// All elements of GF(2^m): 0 followed by eta^0, eta^1, ..., eta^{q-2}.
  std::vector<FieldElement> subfield_elements() const;

  bool valid(FieldElement a) const noexcept { return a.bits < size(); }

 private:
  FieldTower() = default;

  int m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t modulus_ = 0;
  std::vector<std::uint32_t> exp_;  // 2n entries so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> full_trace_;
  std::vector<std::uint8_t> sub_trace_;  // 0/1 on the subfield, 0xFF elsewhere
  std::vector<std::uint32_t> sub_coords_;  // by eta-exponent
  std::vector<FieldElement> eta_basis_;
};

}  // namespace kasami
