#include "kasami/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kasami/error.hpp"
#include "kasami/gf2.hpp"

namespace kasami {

namespace {

using u128 = unsigned __int128;

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

void require_window(int j) {
  if (j < 1 || j > 40) throw KasamiError(Errc::BOutOfRange, "window index j = " + std::to_string(j));
}

void require_nonzero(const FieldTower& f, FieldElement alpha, FieldElement beta) {
  if (alpha.is_zero() || beta.is_zero()) throw KasamiError(Errc::ZeroAlphaBeta, "alpha and beta must be nonzero");
  if (!f.valid(alpha)) throw KasamiError(Errc::InvalidInput, "alpha out of range");
  if (!f.valid(beta) || !f.in_subfield(beta)) throw KasamiError(Errc::BetaNotInSubfield, "beta not in GF(2^m)");
}

// Visits every u in GF(2)^{j-1} in Gray-code order with theta_j and omega_j kept
// up to date incrementally.
template <class Fn>
void for_each_u(int j, const FieldTower& f, Fn&& fn) {
  const std::uint32_t q = f.q();
  auto theta_pow = [&](int i) { return f.exp(static_cast<std::uint64_t>(i)); };
  auto eta_pow = [&](int i) { return f.exp(static_cast<std::uint64_t>(i) * (q + 1)); };
  FieldElement th = f.one() + theta_pow(j);
  FieldElement om = f.one() + eta_pow(j);
  std::uint64_t u = 0;
  const std::uint64_t count = pow2(j - 1);
  for (std::uint64_t i = 0;;) {
    fn(u, th, om);
    if (++i == count) break;
    const int k = std::countr_zero(i);
    u ^= std::uint64_t{1} << k;
    th += theta_pow(k + 1);
    om += eta_pow(k + 1);
  }
}

}  // namespace

ThetaOmegaPair theta_omega(int j, std::uint64_t u, const FieldTower& f) {
  require_window(j);
  if (j < 64 && (u >> (j - 1)) != 0) throw KasamiError(Errc::InvalidInput, "u has more than j-1 coefficients");
  ThetaOmegaPair p{j, u, f.one() + f.exp(static_cast<std::uint64_t>(j)),
                   f.one() + f.exp(static_cast<std::uint64_t>(j) * (f.q() + 1))};
  for (int i = 1; i < j; ++i) {
    if ((u >> (i - 1)) & 1) {
      p.theta_j += f.exp(static_cast<std::uint64_t>(i));
      p.omega_j += f.exp(static_cast<std::uint64_t>(i) * (f.q() + 1));
    }
  }
  return p;
}

GammaSets gamma_sets(int j, const FieldTower& f) {
  require_window(j);
  GammaSets g;
  for_each_u(j, f, [&](std::uint64_t u, FieldElement th, FieldElement om) {
    if (om.is_zero()) g.gamma1.push_back(u);
    if (th.is_zero()) g.gamma2.push_back(u);
  });
  std::sort(g.gamma1.begin(), g.gamma1.end());
  std::sort(g.gamma2.begin(), g.gamma2.end());
  return g;
}

std::uint64_t gamma1_size_formula(int j, int m) {
  if (j < m) return 0;
  if (j == m) return 1;
  return pow2(j - m - 1);
}

std::uint64_t gamma2_size_formula(int j, int m) { return gamma1_size_formula(j, 2 * m); }

std::uint64_t t_count_cap(int j, int m) {
  return pow2(j - 1) - gamma1_size_formula(j, m) - gamma2_size_formula(j, m);
}

Regime regime_of(int b, int m) noexcept {
  if (b <= m) return Regime::Low;
  if (b <= 2 * m) return Regime::Mid;
  if (b <= 3 * m) return Regime::High;
  return Regime::Saturated;
}

std::string_view regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::Low: return "b<=m";
    case Regime::Mid: return "m<b<=2m";
    case Regime::High: return "2m<b<=3m";
    case Regime::Saturated: return "b>3m";
  }
  return "?";
}

std::uint64_t t_count(int j, FieldElement alpha, FieldElement beta, int b, const FieldTower& f) {
  require_window(j);
  require_nonzero(f, alpha, beta);
  if (j > b - 1) throw KasamiError(Errc::BOutOfRange, "need 1 <= j <= b-1");
  const FieldElement lambda = f.div(f.norm(alpha), beta);
  std::uint64_t count = 0;
  for_each_u(j, f, [&](std::uint64_t, FieldElement th, FieldElement om) {
    if (th.is_zero() || om.is_zero()) return;
    count += f.trace(f.mul(lambda, f.div(f.norm(th), om)), TraceLevel::Subfield);
  });
  return count;
}

IndexSetReport index_set_report(int j, FieldElement alpha, FieldElement beta, int b, const FieldTower& f) {
  IndexSetReport r;
  r.j = j;
  r.regime = regime_of(b, f.m());
  r.t_count = t_count(j, alpha, beta, b, f);
  for_each_u(j, f, [&](std::uint64_t, FieldElement th, FieldElement om) {
    if (om.is_zero()) ++r.gamma1_size;
    if (th.is_zero()) ++r.gamma2_size;
    if (!th.is_zero() && !om.is_zero()) r.a_set.push_back(f.div(f.norm(th), om));
  });
  std::sort(r.a_set.begin(), r.a_set.end());
  r.a_set.erase(std::unique(r.a_set.begin(), r.a_set.end()), r.a_set.end());
  return r;
}

HierarchyTables::HierarchyTables(const FieldTower& f, int max_j) : field_(&f) {
  if (max_j < 0 || max_j > 32) throw KasamiError(Errc::ScanTooLarge, "window tables limited to j <= 32");
  const std::uint32_t q = f.q();
  std::vector<std::uint32_t> counts(q - 1);
  for (int j = 1; j <= max_j; ++j) {
    Window w;
    std::fill(counts.begin(), counts.end(), 0);
    for_each_u(j, f, [&](std::uint64_t, FieldElement th, FieldElement om) {
      if (om.is_zero()) ++w.gamma1;
      if (th.is_zero()) ++w.gamma2;
      if (th.is_zero() || om.is_zero()) return;
      ++counts[f.log(f.div(f.norm(th), om)) / (q + 1)];
    });
    for (std::uint32_t k = 0; k + 1 < q; ++k)
      if (counts[k]) w.hist.emplace_back(k, counts[k]);
    windows_.push_back(std::move(w));
  }
}

const HierarchyTables::Window& HierarchyTables::window(int j) const {
  if (j < 1 || j > max_j()) throw KasamiError(Errc::BOutOfRange, "window tables do not cover j = " + std::to_string(j));
  return windows_[static_cast<std::size_t>(j - 1)];
}

std::vector<std::uint64_t> HierarchyTables::t_counts(FieldElement alpha, FieldElement beta, int b) const {
  const FieldTower& f = *field_;
  require_nonzero(f, alpha, beta);
  const std::uint32_t q = f.q();
  // T_m(lambda * eta^k) for every k, where lambda = alpha^{q+1} / beta.
  const std::uint64_t lambda_log = f.log(f.div(f.norm(alpha), beta));
  std::vector<std::uint8_t> tr(q - 1);
  for (std::uint32_t k = 0; k + 1 < q; ++k)
    tr[k] = static_cast<std::uint8_t>(f.trace_sub_unchecked(f.exp(lambda_log + std::uint64_t(k) * (q + 1))));
  std::vector<std::uint64_t> out;
  for (int j = 1; j <= b - 1; ++j) {
    std::uint64_t t = 0;
    for (auto [k, mult] : window(j).hist) t += tr[k] * std::uint64_t{mult};
    out.push_back(t);
  }
  return out;
}

namespace {

std::uint64_t wb_closed_impl(FieldElement alpha, FieldElement beta, int b, const KasamiCode& code,
                             const std::vector<std::uint64_t>* tcounts, const HierarchyTables* tables) {
  const FieldTower& f = code.field();
  const int m = f.m();
  const std::int64_t n = f.n();
  if (b < 1 || b > n) throw KasamiError(Errc::BOutOfRange, "b = " + std::to_string(b) + " outside [1, n]");
  if (!f.valid(alpha)) throw KasamiError(Errc::InvalidInput, "alpha out of range");
  if (!f.valid(beta) || !f.in_subfield(beta)) throw KasamiError(Errc::BetaNotInSubfield, "beta not in GF(2^m)");

  if (alpha.is_zero() && beta.is_zero()) return 0;
  const Regime regime = regime_of(b, m);
  if (regime == Regime::Saturated) return static_cast<std::uint64_t>(n);
  if (alpha.is_zero()) {
    if (regime != Regime::Low) return static_cast<std::uint64_t>(n);
    return (pow2(b) - 1) * (pow2(2 * m - b) + pow2(m - b));
  }
  if (beta.is_zero()) {
    if (regime == Regime::High) return static_cast<std::uint64_t>(n);
    return (pow2(b) - 1) * pow2(2 * m - b);
  }

  const std::int64_t q = f.q();
  const std::int64_t s = exp_sum_closed(alpha, beta, code);
  std::vector<std::uint64_t> local;
  if (!tcounts) {
    if (tables) {
      local = tables->t_counts(alpha, beta, b);
    } else {
      for (int j = 1; j < b; ++j) local.push_back(t_count(j, alpha, beta, b, f));
    }
    tcounts = &local;
  }
  std::int64_t weighted = 0;  // sum_{j=1}^{b-1} (b - j) #T(j)
  for (int j = 1; j < b; ++j) weighted += (b - j) * static_cast<std::int64_t>((*tcounts)[static_cast<std::size_t>(j - 1)]);

  // Everything below is 2^b * w_b so the arithmetic stays in integers.
  const std::int64_t two_b = std::int64_t{1} << b;
  std::int64_t scaled = 0;
  switch (regime) {
    case Regime::Low:
      // 2^{2m} + 2^m - 2^{2m-b} - 2^{m-b} - b(S + 2^m + 1)/2^b - 2^{m+1-b} sum
      scaled = two_b * (q * q + q) - q * q - q - b * (s + q + 1) - 2 * q * weighted;
      break;
    case Regime::Mid:
    case Regime::High:
      // 2^{2m} + 2^m - 2^{2m-b} - 1 - b(S + 2^m + 1)/2^b - 2^{m+1-b} sum; the two ranges coincide
      scaled = two_b * (q * q + q - 1) - q * q - b * (s + q + 1) - 2 * q * weighted;
      break;
    case Regime::Saturated:
      break;
  }
  if (scaled < 0 || scaled % two_b)
    throw KasamiError(Errc::NonIntegerResult, "closed form gave " + std::to_string(scaled) + "/2^" + std::to_string(b));
  return static_cast<std::uint64_t>(scaled / two_b);
}

}  // namespace

std::uint64_t wb_closed(FieldElement alpha, FieldElement beta, int b, const KasamiCode& code,
                        const HierarchyTables& tables) {
  return wb_closed_impl(alpha, beta, b, code, nullptr, &tables);
}

std::uint64_t wb_closed(FieldElement alpha, FieldElement beta, int b, const KasamiCode& code) {
  return wb_closed_impl(alpha, beta, b, code, nullptr, nullptr);
}

std::uint64_t generalized_weight(int b, int m) {
  if (b < 1 || b > 3 * m) throw KasamiError(Errc::BOutOfRange, "generalized weights need 1 <= b <= 3m");
  if (b <= m) return (pow2(b) - 1) * (pow2(2 * m - b) - pow2(m - b));
  if (b <= 2 * m) return pow2(2 * m) - pow2(m) - pow2(2 * m - b) + 1;
  return pow2(2 * m) - pow2(3 * m - b);
}

DistanceRange distance_range(int b, int m) {
  const std::uint64_t n = pow2(2 * m) - 1;
  if (b < 1 || static_cast<std::uint64_t>(b) > n) throw KasamiError(Errc::BOutOfRange, "need 1 <= b <= n");
  switch (regime_of(b, m)) {
    case Regime::Low: return {generalized_weight(b, m), (pow2(b) - 1) * pow2(2 * m - b)};
    case Regime::Mid: return {generalized_weight(b, m), (pow2(b) - 1) * pow2(2 * m - b)};
    case Regime::High: return {generalized_weight(b, m), n};
    case Regime::Saturated: return {n, n};
  }
  return {};
}

MbInvariant mb_invariant(int b, const FieldTower& f) {
  if (b < 3 || b > f.m())
    throw KasamiError(Errc::BOutOfRange, "m(b) is defined for 3 <= b <= m, got b = " + std::to_string(b));
  MbInvariant result;
  std::vector<FieldElement> set{f.one()};
  for (int i = 1; i <= b - 1; ++i) {
    for_each_u(i, f, [&](std::uint64_t, FieldElement th, FieldElement om) {
      set.push_back(f.div(f.norm(th), om));  // omega_i != 0 because i < m
    });
    std::vector<FieldElement> distinct = set;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != pow2(i)) break;
    std::vector<std::uint64_t> rows;
    for (auto e : distinct) rows.push_back(f.subfield_coords(e));
    if (gf2::rank(rows) != distinct.size()) break;
    result.value = i;
    result.witness_set = set;
  }
  return result;
}

std::uint64_t mb_lower_bound_formula(int b, int m, int mb) {
  if (b < 1 || b > m || mb < 0 || mb >= b) throw KasamiError(Errc::BOutOfRange, "need 0 <= mb < b <= m");
  // 2^m * (b - mb + 1) * 2^{1+mb-b} = (b - mb + 1) * 2^{m+1+mb-b}, an integer since b <= m.
  const std::int64_t v = static_cast<std::int64_t>(pow2(2 * m) - pow2(2 * m - b) + pow2(m - b) + pow2(m)) -
                         static_cast<std::int64_t>(b - mb + 1) * static_cast<std::int64_t>(pow2(m + 1 + mb - b));
  return static_cast<std::uint64_t>(v);
}

std::uint64_t mb_lower_bound(int b, const FieldTower& f) {
  const int m = f.m();
  if (b < 1 || b > m) throw KasamiError(Errc::BOutOfRange, "bound needs 1 <= b <= m");
  if (b <= 2) return mb_lower_bound_formula(b, m, b - 1);
  const auto inv = mb_invariant(b, f);
  // m(b) = 1 is reported by mb_invariant but lies outside the range the bound is stated for.
  if (!inv.value || *inv.value < 2)
    throw KasamiError(Errc::MbUndefined, "no m(b) >= 2 for b = " + std::to_string(b));
  return mb_lower_bound_formula(b, m, *inv.value);
}

IdentityCheck window_sum_identity(int b) {
  if (b < 1 || b > 120) throw KasamiError(Errc::BOutOfRange, "identity checked for 1 <= b <= 120");
  u128 lhs = 0;
  for (int j = 1; j <= b - 1; ++j) lhs += static_cast<u128>(b - j) << (j - 1);
  const u128 rhs = (u128{1} << b) - 1 - static_cast<u128>(b);
  return {"window_sum", to_decimal(lhs), to_decimal(rhs), lhs == rhs};
}

IdentityCheck partial_window_sum_identity(int b, int mb) {
  if (b < 1 || b > 120 || mb < 0 || mb >= b) throw KasamiError(Errc::BOutOfRange, "need 0 <= mb < b <= 120");
  u128 lhs = 0;
  for (int j = 1; j <= mb; ++j) lhs += static_cast<u128>(b - j) << (j - 1);
  const u128 rhs = (static_cast<u128>(b - mb + 1) << mb) - static_cast<u128>(b) - 1;
  return {"partial_window_sum", to_decimal(lhs), to_decimal(rhs), lhs == rhs};
}

std::vector<IdentityCheck> counting_identities(int b, int mb) {
  return {window_sum_identity(b), partial_window_sum_identity(b, mb)};
}

std::uint64_t basis_intersection_count(std::span<const FieldElement> basis, std::uint64_t subset_mask,
                                       const FieldTower& f) {
  std::vector<std::uint64_t> rows;
  for (auto e : basis) {
    if (!f.valid(e) || !f.in_subfield(e)) throw KasamiError(Errc::NotABasis, "element outside GF(2^m)");
    rows.push_back(f.subfield_coords(e));
  }
  if (gf2::rank(rows) != rows.size()) throw KasamiError(Errc::NotABasis, "elements are linearly dependent");
  if (basis.size() < 64 && (subset_mask >> basis.size()))
    throw KasamiError(Errc::InvalidInput, "subset mask selects missing elements");
  std::uint64_t count = 0;
  for (auto x : f.subfield_elements()) {
    bool all = true;
    for (std::size_t i = 0; i < basis.size() && all; ++i)
      if ((subset_mask >> i) & 1) all = f.trace_sub_unchecked(f.mul(x, basis[i])) == 1;
    count += all;
  }
  return count;
}

}  // namespace kasami
