#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kasami/code.hpp"
#include "kasami/field.hpp"

namespace kasami {

/// Shift-combination elements for a window index j and coefficient vector u,
/// where bit (i-1) of u holds u_i for 1 <= i <= j-1:
///   theta_j = 1 + sum u_i theta^i + theta^j,  omega_j = 1 + sum u_i eta^i + eta^j.
struct ThetaOmegaPair {
  int j = 1;
  std::uint64_t u = 0;
  FieldElement theta_j;
  FieldElement omega_j;
};

ThetaOmegaPair theta_omega(int j, std::uint64_t u, const FieldTower& field);

/// Degenerate coefficient vectors: gamma1 makes omega_j vanish, gamma2 theta_j.
struct GammaSets {
  std::vector<std::uint64_t> gamma1;
  std::vector<std::uint64_t> gamma2;
};

GammaSets gamma_sets(int j, const FieldTower& field);
std::uint64_t gamma1_size_formula(int j, int m);
std::uint64_t gamma2_size_formula(int j, int m);
/// Number of non-degenerate u for window j: 2^{j-1} - #gamma1(j) - #gamma2(j).
/// This is the largest value the trace count can take.
std::uint64_t t_count_cap(int j, int m);

/// The four ranges of b that select a closed-form branch.
enum class Regime { Low, Mid, High, Saturated };  // b<=m, m<b<=2m, 2m<b<=3m, b>3m
Regime regime_of(int b, int m) noexcept;
std::string_view regime_name(Regime r) noexcept;

/// Counts u outside gamma1(j) u gamma2(j) with
/// T_m((alpha^{q+1}/beta) * theta_j^{q+1}/omega_j) = 1, by literal enumeration.
std::uint64_t t_count(int j, FieldElement alpha, FieldElement beta, int b, const FieldTower& field);

struct IndexSetReport {
  int j = 0;
  Regime regime = Regime::Low;
  std::uint64_t gamma1_size = 0;
  std::uint64_t gamma2_size = 0;
  std::uint64_t t_count = 0;
  std::vector<FieldElement> a_set;  // distinct theta_j^{q+1}/omega_j over non-degenerate u, sorted
};

IndexSetReport index_set_report(int j, FieldElement alpha, FieldElement beta, int b, const FieldTower& field);

/// Per-window tables shared by every (alpha, beta): the degenerate counts and
/// the multiset of theta_j^{q+1}/omega_j keyed by eta-exponent. Built once,
/// read-only afterwards.
class HierarchyTables {
 public:
  HierarchyTables(const FieldTower& field, int max_j);

  int max_j() const noexcept { return static_cast<int>(windows_.size()); }
  std::uint64_t gamma1_size(int j) const { return window(j).gamma1; }
  std::uint64_t gamma2_size(int j) const { return window(j).gamma2; }

  /// t_count for every j in 1..b-1 (index 0 holds j = 1).
  std::vector<std::uint64_t> t_counts(FieldElement alpha, FieldElement beta, int b) const;

 private:
  struct Window {
    std::uint64_t gamma1 = 0;
    std::uint64_t gamma2 = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hist;  // (eta-exponent, multiplicity)
  };
  const Window& window(int j) const;

  const FieldTower* field_;
  std::vector<Window> windows_;
};

/// Closed-form b-symbol weight of c(alpha, beta) from S(alpha, beta) and the
/// trace counts. `tables` must cover j <= min(b, 3m) - 1.
std::uint64_t wb_closed(FieldElement alpha, FieldElement beta, int b, const KasamiCode& code,
                        const HierarchyTables& tables);
/// Same, with trace counts from literal enumeration.
std::uint64_t wb_closed(FieldElement alpha, FieldElement beta, int b, const KasamiCode& code);

/// Generalized Hamming weight d_b of the [2^{2m}-1, 3m] Kasami code, 1 <= b <= 3m.
std::uint64_t generalized_weight(int b, int m);

/// Range of the minimum b-symbol distance d_b(C) for 1 <= b <= n.
struct DistanceRange {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};
DistanceRange distance_range(int b, int m);

struct MbInvariant {
  std::optional<int> value;               // m(b); empty when no i qualifies
  std::vector<FieldElement> witness_set;  // {1} u A_1(1) u ... u A_1(m(b))
};

/// Largest i <= b-1 such that {1} u A_1(1) u ... u A_1(i) has 2^i elements that
/// are GF(2)-linearly independent. Requires 3 <= b <= m.
MbInvariant mb_invariant(int b, const FieldTower& field);

/// 2^{2m} - 2^{2m-b} + 2^{m-b} + 2^m (1 - (b - mb + 1) 2^{1+mb-b}), for 0 <= mb < b <= m.
std::uint64_t mb_lower_bound_formula(int b, int m, int mb);
/// Lower bound on d_b(C) for 1 <= b <= m. b = 1 and b = 2 use mb = b - 1 (always
/// attained); b >= 3 uses m(b) and throws MbUndefined unless m(b) >= 2.
std::uint64_t mb_lower_bound(int b, const FieldTower& field);

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

/// sum_{j=1}^{b-1} (b-j) 2^{j-1} = 2^b - 1 - b, exact for b <= 120.
IdentityCheck window_sum_identity(int b);
/// sum_{j=1}^{mb} (b-j) 2^{j-1} = (b - mb + 1) 2^{mb} - b - 1, exact for mb < b <= 120.
IdentityCheck partial_window_sum_identity(int b, int mb);
std::vector<IdentityCheck> counting_identities(int b, int mb);

/// #{x in GF(2^m) : T_m(x * basis[i]) = 1 for all i in subset_mask}.
/// Throws NotABasis when the elements are not independent subfield elements.
std::uint64_t basis_intersection_count(std::span<const FieldElement> basis, std::uint64_t subset_mask,
                                       const FieldTower& field);

}  // namespace kasami
