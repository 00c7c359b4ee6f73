#include "kasami/field.hpp"

#include <array>
#include <bit>
#include <string>

#include "kasami/error.hpp"

namespace kasami {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidM: return "InvalidM";
    case Errc::BadModulus: return "BadModulus";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::BetaNotInSubfield: return "BetaNotInSubfield";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::BOutOfRange: return "BOutOfRange";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::ScanTooLarge: return "ScanTooLarge";
    case Errc::ZeroAlphaBeta: return "ZeroAlphaBeta";
    case Errc::MbUndefined: return "MbUndefined";
    case Errc::NotABasis: return "NotABasis";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

// Conway polynomials over GF(2), indexed by degree. The roots are compatible
// across the tower: theta^{(2^{2m}-1)/(2^m-1)} = eta is the Conway root of degree m.
constexpr std::array<std::uint64_t, 21> kConway = {
    0,       0x3,     0x7,     0xb,     0x13,    0x25,    0x5b,
    0x83,    0x11d,   0x211,   0x46f,   0x805,   0x10eb,  0x201b,
    0x40a9,  0x8035,  0x1002d, 0x20009, 0x41403, 0x80027, 0x1006f3,
};

int degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const int d = degree(p);
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> d) & 1) a ^= p;
  }
  return r;
}

std::uint64_t powmod_x(std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1, base = 2;
  if ((base >> degree(p)) & 1) base ^= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

std::uint64_t default_modulus(int deg) {
  if (deg < 4 || deg > 2 * kMaxM || deg % 2)
    throw KasamiError(Errc::InvalidM, "no default modulus for degree " + std::to_string(deg));
  return kConway[static_cast<std::size_t>(deg)];
}

bool is_primitive_polynomial(std::uint64_t poly) {
  if (poly < 3 || !(poly & 1)) return false;
  const int d = degree(poly);
  if (d > 40) return false;
  const std::uint64_t order = (std::uint64_t{1} << d) - 1;
  // x has multiplicative order 2^d - 1 modulo poly; this also forces irreducibility.
  if (powmod_x(order, poly) != 1) return false;
  for (auto r : prime_factors(order))
    if (powmod_x(order / r, poly) == 1) return false;
  return true;
}

FieldTower FieldTower::build(int m, std::optional<std::uint64_t> modulus_override) {
  if (m < kMinM || m > kMaxM)
    throw KasamiError(Errc::InvalidM, "m must lie in [" + std::to_string(kMinM) + ", " +
                                          std::to_string(kMaxM) + "], got " + std::to_string(m));
  const int deg = 2 * m;
  std::uint64_t modulus = modulus_override.value_or(default_modulus(deg));
  if (degree(modulus) != deg)
    throw KasamiError(Errc::BadModulus, "modulus degree must be " + std::to_string(deg));
  if (!is_primitive_polynomial(modulus))
    throw KasamiError(Errc::BadModulus, "modulus is not a primitive polynomial");

  FieldTower f;
  f.m_ = m;
  f.q_ = std::uint32_t{1} << m;
  f.n_ = f.q_ * f.q_ - 1;
  f.modulus_ = modulus;
  const std::uint32_t size = f.q_ * f.q_;
  f.exp_.resize(2 * std::size_t{f.n_});
  f.log_.assign(size, 0);
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < f.n_; ++i) {
    f.exp_[i] = static_cast<std::uint32_t>(x);
    f.log_[x] = i;
    x <<= 1;
    if (x & size) x ^= modulus;
  }
  for (std::uint32_t i = f.n_; i < 2 * f.n_; ++i) f.exp_[i] = f.exp_[i - f.n_];

  // T_{2m} is linear: tabulate it on the basis x^k and extend by parity.
  std::uint32_t basis_trace = 0;
  for (int k = 0; k < deg; ++k) {
    FieldElement y{std::uint32_t{1} << k}, s{};
    for (int i = 0; i < deg; ++i) {
      s += y;
      y = f.mul(y, y);
    }
    basis_trace |= (s.bits & 1u) << k;
  }
  f.full_trace_.resize(size);
  for (std::uint32_t v = 0; v < size; ++v)
    f.full_trace_[v] = static_cast<std::uint8_t>(std::popcount(v & basis_trace) & 1);

  f.sub_trace_.assign(size, 0xFF);
  f.sub_trace_[0] = 0;
  for (std::uint32_t i = 0; i + 1 < f.q_; ++i) {
    FieldElement e = f.exp(std::uint64_t{i} * (f.q_ + 1)), y = e, s{};
    for (int k = 0; k < m; ++k) {
      s += y;
      y = f.mul(y, y);
    }
    f.sub_trace_[e.bits] = static_cast<std::uint8_t>(s.bits & 1u);
  }

  for (int k = 0; k < m; ++k) f.eta_basis_.push_back(f.exp(std::uint64_t(k) * (f.q_ + 1)));
  f.sub_coords_.assign(f.q_ - 1, 0);
  for (std::uint32_t coords = 1; coords < f.q_; ++coords)
    f.sub_coords_[f.log_[f.from_subfield_coords(coords).bits] / (f.q_ + 1)] = coords;
  return f;
}

std::uint32_t FieldTower::log(FieldElement a) const {
  if (a.is_zero()) throw KasamiError(Errc::InvalidInput, "log of zero");
  return log_[a.bits];
}

FieldElement FieldTower::pow(FieldElement a, std::uint64_t k) const noexcept {
  if (k == 0) return one();
  if (a.is_zero()) return {};
  return exp((std::uint64_t{log_[a.bits]} * (k % n_)) % n_);
}

FieldElement FieldTower::inv(FieldElement a) const {
  if (a.is_zero()) throw KasamiError(Errc::InvalidInput, "inverse of zero");
  return exp(n_ - log_[a.bits]);
}

FieldElement FieldTower::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

int FieldTower::trace(FieldElement x, TraceLevel level) const {
  if (!valid(x)) throw KasamiError(Errc::InvalidInput, "element out of range");
  if (level == TraceLevel::Full) return full_trace_[x.bits];
  const auto t = sub_trace_[x.bits];
  if (t == 0xFF) throw KasamiError(Errc::NotInSubfield, "x^q != x");
  return t;
}

std::uint64_t FieldTower::minimal_polynomial(FieldElement a) const {
  // Product of (X + c) over the distinct conjugates c of a, with coefficients in GF(2^{2m}).
  std::vector<FieldElement> poly{one()};
  FieldElement c = a;
  do {
    std::vector<FieldElement> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += mul(poly[i], c);
    }
    poly = std::move(next);
    c = mul(c, c);
  } while (c != a);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].bits > 1) throw KasamiError(Errc::InvalidInput, "minimal polynomial not over GF(2)");
    mask |= std::uint64_t{poly[i].bits} << i;
  }
  return mask;
}

std::uint32_t FieldTower::subfield_coords(FieldElement a) const {
  if (!valid(a) || !in_subfield(a)) throw KasamiError(Errc::NotInSubfield, "x^q != x");
  return a.is_zero() ? 0 : sub_coords_[log_[a.bits] / (q_ + 1)];
}

FieldElement FieldTower::from_subfield_coords(std::uint32_t coords) const noexcept {
  FieldElement e{};
  for (int k = 0; k < m_; ++k)
    if ((coords >> k) & 1) e += eta_basis_[static_cast<std::size_t>(k)];
  return e;
}

std::vector<FieldElement> FieldTower::subfield_elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  out.push_back(zero());
  for (std::uint32_t i = 0; i + 1 < q_; ++i) out.push_back(exp(std::uint64_t{i} * (q_ + 1)));
  return out;
}

}  // namespace kasami
