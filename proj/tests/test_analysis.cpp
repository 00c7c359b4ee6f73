#include <doctest.h>

#include "kasami/analysis.hpp"
#include "kasami/error.hpp"
#include "kasami/hierarchy.hpp"

using namespace kasami;

namespace {

std::string scan_text(int m, int b) {
  return enumerator_to_text(weight_enumerator_scan(KasamiCode(FieldTower::build(m)), b));
}

}  // namespace

TEST_CASE("symbol-pair tables") {
  CHECK(scan_text(2, 2) == "1 + 15T^9 + 15T^11 + 15T^12 + 15T^13 + 3T^15");
  CHECK(scan_text(3, 2) == "1 + 126T^42 + 126T^46 + 63T^48 + 126T^50 + 70T^54");
  CHECK(scan_text(4, 2) == "1 + 1020T^180 + 1020T^188 + 255T^192 + 1020T^196 + 780T^204");
}

TEST_CASE("closed symbol-pair distribution equals the scan for m = 2..5") {
  for (int m = 2; m <= 5; ++m) {
    const KasamiCode code(FieldTower::build(m));
    CHECK(pair_distribution_closed(m).counts == weight_enumerator_scan(code, 2).counts);
  }
  CHECK_THROWS_AS(pair_distribution_closed(1), KasamiError);
}

TEST_CASE("higher-b tables") {
  CHECK(scan_text(2, 3) == "1 + 15T^12 + 15T^13 + 30T^14 + 3T^15");
  CHECK(scan_text(2, 4) == "1 + 15T^13 + 15T^14 + 33T^15");
  CHECK(scan_text(3, 4) == "1 + 63T^55 + 63T^56 + 63T^58 + 63T^59 + 126T^60 + 63T^62 + 70T^63");
  CHECK(scan_text(2, 5) == "1 + 15T^14 + 48T^15");
  CHECK(scan_text(2, 6) == "1 + 63T^15");
  CHECK(scan_text(4, 3) ==
        "1 + 255T^210 + 510T^214 + 510T^218 + 765T^222 + 255T^224 + 765T^226 + 510T^230 + 510T^234 + 15T^238");
}

TEST_CASE("enumerator invariants and the closed-form histogram") {
  for (int m = 2; m <= 3; ++m) {
    const KasamiCode code(FieldTower::build(m));
    for (int b = 1; b <= static_cast<int>(code.length()); b += (m == 2 ? 1 : 5)) {
      const auto e = weight_enumerator_scan(code, b);
      CHECK(e.total() == code.size());
      CHECK(e.counts.at(0) == 1);
      CHECK(e.counts.rbegin()->first <= code.length());
      CHECK(e.min_nonzero_weight() == min_bsym_distance(code, static_cast<std::size_t>(b)));
      CHECK(weight_enumerator_closed(code, b).counts == e.counts);
    }
  }
}

TEST_CASE("every b beyond 3m gives the saturated enumerator") {
  const KasamiCode c2(FieldTower::build(2));
  for (int b = 7; b <= 15; ++b) CHECK(weight_enumerator_scan(c2, b).counts == saturated_enumerator(2, b).counts);
  const KasamiCode c3(FieldTower::build(3));
  for (int b : {10, 31, 63}) CHECK(weight_enumerator_scan(c3, b).counts == saturated_enumerator(3, b).counts);
  CHECK(enumerator_to_text(saturated_enumerator(2, 7)) == "1 + 63T^15");
  CHECK_THROWS_AS(saturated_enumerator(2, 6), KasamiError);
}

TEST_CASE("enumerator text round-trip") {
  WeightEnumerator zero;
  zero.counts[0] = 1;
  CHECK(enumerator_to_text(zero) == "1");
  const auto e = weight_enumerator_scan(KasamiCode(FieldTower::build(2)), 2);
  const auto parsed = parse_enumerator(enumerator_to_text(e));
  CHECK(parsed.counts == e.counts);
  CHECK(parse_enumerator("1 + T^5 + 2T").counts == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {1, 2}, {5, 1}});
  CHECK(enumerator_to_text(parse_enumerator("1 + T^5")) == "1 + T^5");
  CHECK_THROWS_AS(parse_enumerator("1 + + T^2"), KasamiError);
  CHECK_THROWS_AS(parse_enumerator("1 + 3X^2"), KasamiError);
  CHECK_THROWS_AS(parse_enumerator(""), KasamiError);
}

TEST_CASE("griesmer sums") {
  CHECK(griesmer_sum(2, 6) == 9);
  CHECK(griesmer_sum(3, 120) == 210);
  for (int m = 2; m <= 8; ++m)
    for (int b = 1; b <= m; ++b) {
      const std::uint64_t d1 = (std::uint64_t{1} << (2 * m - 1)) - (std::uint64_t{1} << (m - 1));
      CHECK(griesmer_sum(b, d1) == generalized_weight(b, m));
    }
}

TEST_CASE("shortening the small example codeword") {
  const KasamiCode code(FieldTower::build(2));
  const auto p = shorten_on_complement(code, BitVector::from_string("011001110010000"), 2, 9);
  CHECK(p.length == 9);
  CHECK(p.dimension == 2);
  CHECK(p.min_distance == 6);
  CHECK(p.is_griesmer);
  CHECK(p.shift_rank == 2);
  CHECK(p.complement == std::vector<std::size_t>{4, 9, 12, 13, 14, 15});
  CHECK(p.warnings.empty());
}

TEST_CASE("shortening a minimum 3-symbol codeword at m = 4") {
  const KasamiCode code(FieldTower::build(4));
  const auto [idx, weight] = find_min_weight_codeword(code, 3);
  CHECK(weight == 210);
  const auto p = shorten_on_complement(code, code.bits_of(idx), 3, 210);
  CHECK(p.length == 210);
  CHECK(p.dimension == 3);
  CHECK(p.min_distance == 120);
  CHECK(p.is_griesmer);
  CHECK(p.shift_rank == 3);
  CHECK(p.complement.size() == 45);
}

TEST_CASE("shortening rejects non-codewords and flags non-minimal ones") {
  const KasamiCode code(FieldTower::build(2));
  CHECK_THROWS_AS(shorten_on_complement(code, BitVector::from_string("100000000000000"), 2), KasamiError);
  CHECK_THROWS_AS(shorten_on_complement(code, BitVector(15), 2), KasamiError);
  CHECK_THROWS_AS(shorten_on_complement(code, BitVector::from_string("0110"), 2), KasamiError);
  CodeIndex heavy = 1;
  while (weight_enumerator_scan(code, 2).min_nonzero_weight() == wb_brute(code.bits_of(heavy), 2)) ++heavy;
  const auto p = shorten_on_complement(code, code.bits_of(heavy), 2, 9);
  CHECK(p.warnings.size() == 1);
}

TEST_CASE("minimum-weight codeword search is independent of the worker count") {
  const KasamiCode code(FieldTower::build(3));
  const auto one = find_min_weight_codeword(code, 4, {1, 6});
  const auto many = find_min_weight_codeword(code, 4, {4, 6});
  CHECK(one == many);
  CHECK(one.second == 55);
}

TEST_CASE("no cap-attaining pair exists at small m") {
  for (int m = 2; m <= 3; ++m) {
    const KasamiCode code(FieldTower::build(m));
    for (int b = m + 1; b <= 2 * m; ++b) CHECK_FALSE(griesmer_witness(code, b).has_value());
  }
  CHECK_THROWS_AS(griesmer_witness(KasamiCode(FieldTower::build(2)), 2), KasamiError);
}
