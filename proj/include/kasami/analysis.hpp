#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kasami/bitvector.hpp"
#include "kasami/bsymbol.hpp"
#include "kasami/code.hpp"

namespace kasami {

/// Number of codewords per b-symbol weight.
struct WeightEnumerator {
  int m = 0;
  int b = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  /// Smallest nonzero weight, or 0 when only the zero word is present.
  std::uint64_t min_nonzero_weight() const noexcept;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Histogram of w_b over all 2^{3m} codewords. Throws ScanTooLarge above opts.max_m.
WeightEnumerator weight_enumerator_scan(const KasamiCode& code, int b, const ScanOptions& opts = {});

/// Histogram of the closed-form weights over all codewords (no bit-level work).
WeightEnumerator weight_enumerator_closed(const KasamiCode& code, int b, const ScanOptions& opts = {});

/// Symbol-pair (b = 2) enumerator from its closed form. Throws InvalidM for m < 2.
WeightEnumerator pair_distribution_closed(int m);

/// 1 + (2^{3m} - 1) T^n, the enumerator for every b > 3m.
WeightEnumerator saturated_enumerator(int m, int b);

/// Ascending-weight polynomial "1 + 15T^9 + ..."; a coefficient of 1 is omitted.
std::string enumerator_to_text(const WeightEnumerator& e);
/// Inverse of enumerator_to_text (m and b are left at 0). Throws InvalidInput.
WeightEnumerator parse_enumerator(std::string_view text);

/// sum_{i=0}^{k-1} ceil(d / 2^i).
std::uint64_t griesmer_sum(std::uint64_t k, std::uint64_t d);

struct ShortenedCodeParams {
  std::uint64_t length = 0;
  std::uint64_t dimension = 0;
  std::uint64_t min_distance = 0;
  std::uint64_t griesmer_sum = 0;
  bool is_griesmer = false;
  std::uint64_t shift_rank = 0;           // rank of c0, shift(c0), ..., shift^{b-1}(c0)
  std::vector<std::size_t> complement;    // 1-based coordinates outside I_b(c0)
  std::vector<std::string> warnings;
};

/// Keeps the codewords vanishing outside I_b(c0) and restricts them to I_b(c0).
/// Throws InvalidInput if c0 is not a codeword, RankDeficient if the b shifts of
/// c0 are dependent. When known_db is given and w_b(c0) differs, a warning is added.
ShortenedCodeParams shorten_on_complement(const KasamiCode& code, const BitVector& c0, int b,
                                          std::optional<std::uint64_t> known_db = std::nullopt);

/// The lowest-index codeword of minimum nonzero b-symbol weight, with that weight.
std::pair<CodeIndex, std::uint64_t> find_min_weight_codeword(const KasamiCode& code, int b,
                                                             const ScanOptions& opts = {});

/// A pair (alpha0, beta0) with S = q - 1 and every trace count at its cap for
/// j <= b-1, the condition under which the shortened code for m < b <= 2m is
/// Griesmer. Searches all nonzero pairs in index order.
std::optional<std::pair<FieldElement, FieldElement>> griesmer_witness(const KasamiCode& code, int b);

}  // namespace kasami
