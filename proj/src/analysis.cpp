#include "kasami/analysis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "kasami/error.hpp"
#include "kasami/gf2.hpp"
#include "kasami/hierarchy.hpp"
#include "kasami/parallel.hpp"

namespace kasami {

namespace {

using Histogram = std::map<std::uint64_t, std::uint64_t>;

void merge_histogram(Histogram& acc, const Histogram& h) {
  for (auto [w, c] : h) acc[w] += c;
}

void require_b(const KasamiCode& code, int b) {
  if (b < 1 || static_cast<std::size_t>(b) > code.length())
    throw KasamiError(Errc::BOutOfRange, "b = " + std::to_string(b) + " outside [1, n]");
}

unsigned workers_of(const ScanOptions& opts) { return opts.workers ? opts.workers : default_workers(); }

}  // namespace

std::uint64_t WeightEnumerator::total() const noexcept {
  std::uint64_t t = 0;
  for (auto [w, c] : counts) t += c;
  return t;
}

std::uint64_t WeightEnumerator::min_nonzero_weight() const noexcept {
  for (auto [w, c] : counts)
    if (w && c) return w;
  return 0;
}

WeightEnumerator weight_enumerator_scan(const KasamiCode& code, int b, const ScanOptions& opts) {
  require_b(code, b);
  check_scan_size(code, opts);
  WeightEnumerator e{code.m(), b, {}};
  e.counts = parallel_chunks<Histogram>(
      code.size(), workers_of(opts), [] { return Histogram{}; },
      [&](Histogram& h, std::uint64_t begin, std::uint64_t end) {
        WindowScanner scan(code.length());
        code.walk(begin, end, [&](CodeIndex, const BitVector& bits) {
          ++h[scan.weight(bits, static_cast<std::size_t>(b))];
        });
      },
      merge_histogram);
  return e;
}

WeightEnumerator weight_enumerator_closed(const KasamiCode& code, int b, const ScanOptions& opts) {
  require_b(code, b);
  check_scan_size(code, opts);
  const HierarchyTables tables(code.field(), std::min(b, 3 * code.m()) - 1);
  WeightEnumerator e{code.m(), b, {}};
  e.counts = parallel_chunks<Histogram>(
      code.size(), workers_of(opts), [] { return Histogram{}; },
      [&](Histogram& h, std::uint64_t begin, std::uint64_t end) {
        for (CodeIndex i = begin; i < end; ++i) ++h[wb_closed(code.alpha_of(i), code.beta_of(i), b, code, tables)];
      },
      merge_histogram);
  return e;
}

WeightEnumerator pair_distribution_closed(int m) {
  if (m < 2 || m > 20) throw KasamiError(Errc::InvalidM, "pair distribution needs 2 <= m <= 20");
  const std::uint64_t a = std::uint64_t{1} << (2 * m - 2);  // 2^{2m-2}
  const std::uint64_t c = std::uint64_t{1} << (m - 2);      // 2^{m-2}
  const std::uint64_t big = std::uint64_t{1} << (3 * m - 2);
  WeightEnumerator e{m, 2, {}};
  e.counts[0] = 1;
  e.counts[3 * a] += 4 * a - 1;
  e.counts[3 * (a + c)] += big - 4 * a + 3 * c;
  e.counts[3 * (a - c)] += big - c;
  e.counts[3 * a - c] += big - c;
  e.counts[3 * a + c] += big - c;
  return e;
}

WeightEnumerator saturated_enumerator(int m, int b) {
  if (m < 1 || m > 20) throw KasamiError(Errc::InvalidM, "m out of range");
  const std::uint64_t n = (std::uint64_t{1} << (2 * m)) - 1;
  if (b <= 3 * m || static_cast<std::uint64_t>(b) > n)
    throw KasamiError(Errc::BOutOfRange, "saturated enumerator needs 3m < b <= n");
  WeightEnumerator e{m, b, {}};
  e.counts[0] = 1;
  e.counts[n] = (std::uint64_t{1} << (3 * m)) - 1;
  return e;
}

std::string enumerator_to_text(const WeightEnumerator& e) {
  std::string out;
  for (auto [w, c] : e.counts) {
    if (!c) continue;
    if (!out.empty()) out += " + ";
    if (w == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "T^" + std::to_string(w);
  }
  return out.empty() ? "0" : out;
}

WeightEnumerator parse_enumerator(std::string_view text) {
  auto fail = [&](const std::string& why) -> WeightEnumerator {
    throw KasamiError(Errc::InvalidInput, "cannot parse enumerator '" + std::string(text) + "': " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s, std::uint64_t& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && p == s.data() + s.size() && !s.empty();
  };
  WeightEnumerator e;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    const std::string_view term = trim(rest.substr(0, plus));
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    if (term.empty()) return fail("empty term");
    std::uint64_t coeff = 1, weight = 0;
    const auto t = term.find('T');
    if (t == std::string_view::npos) {
      if (!number(term, coeff)) return fail("bad constant");
    } else {
      if (t > 0 && !number(term.substr(0, t), coeff)) return fail("bad coefficient");
      const std::string_view power = term.substr(t + 1);
      if (power.empty()) {
        weight = 1;
      } else if (power.front() != '^' || !number(power.substr(1), weight)) {
        return fail("bad exponent");
      }
    }
    e.counts[weight] += coeff;
  }
  if (e.counts.empty()) return fail("no terms");
  return e;
}

std::uint64_t griesmer_sum(std::uint64_t k, std::uint64_t d) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < k && i < 64; ++i) s += (d + (std::uint64_t{1} << i) - 1) >> i;
  return s;
}

ShortenedCodeParams shorten_on_complement(const KasamiCode& code, const BitVector& c0, int b,
                                          std::optional<std::uint64_t> known_db) {
  require_b(code, b);
  if (c0.size() != code.length()) throw KasamiError(Errc::InvalidInput, "c0 has the wrong length");
  if (c0.none()) throw KasamiError(Errc::InvalidInput, "c0 is the zero word");
  {
    std::vector<BitVector> rows = code.basis();
    rows.push_back(c0);
    if (gf2::rank(rows) != static_cast<std::size_t>(code.dimension()))
      throw KasamiError(Errc::InvalidInput, "c0 is not a codeword");
  }

  ShortenedCodeParams p;
  std::vector<BitVector> shifts;
  for (int k = 0; k < b; ++k) shifts.push_back(cyclic_shift(c0, k));
  p.shift_rank = gf2::rank(shifts);
  if (p.shift_rank != static_cast<std::uint64_t>(b))
    throw KasamiError(Errc::RankDeficient, "shifts of c0 have rank " + std::to_string(p.shift_rank) + " < b");

  const BSupport support = support_b(c0, static_cast<std::size_t>(b));
  p.complement = support.complement;
  p.length = support.indices.size();
  if (known_db && p.length != *known_db)
    p.warnings.push_back("w_b(c0) = " + std::to_string(p.length) + " differs from d_b = " + std::to_string(*known_db) +
                         "; c0 is not of minimum weight");

  // Generator rows restricted to the complement; their left kernel spans the
  // codewords vanishing there.
  std::vector<BitVector> restricted;
  for (const auto& row : code.basis()) {
    BitVector r(p.complement.size());
    for (std::size_t i = 0; i < p.complement.size(); ++i) r.set(i, row.test(p.complement[i] - 1));
    restricted.push_back(std::move(r));
  }
  std::vector<BitVector> gens;
  for (std::uint64_t mask : gf2::left_kernel(restricted)) {
    BitVector w(code.length());
    for (std::size_t i = 0; i < code.basis().size(); ++i)
      if ((mask >> i) & 1) w ^= code.basis()[i];
    gens.push_back(std::move(w));
  }
  p.dimension = gens.size();
  if (p.dimension > 30) throw KasamiError(Errc::ScanTooLarge, "shortened code too large to enumerate");

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  BitVector cur(code.length());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << p.dimension); ++i) {
    cur ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min<std::uint64_t>(best, cur.popcount());
  }
  p.min_distance = p.dimension ? best : 0;
  p.griesmer_sum = griesmer_sum(p.dimension, p.min_distance);
  p.is_griesmer = p.dimension > 0 && p.length == p.griesmer_sum;
  return p;
}

std::pair<CodeIndex, std::uint64_t> find_min_weight_codeword(const KasamiCode& code, int b, const ScanOptions& opts) {
  require_b(code, b);
  check_scan_size(code, opts);
  using Best = std::pair<std::uint64_t, CodeIndex>;  // (weight, index), compared lexicographically
  const Best best = parallel_chunks<Best>(
      code.size(), workers_of(opts), [] { return Best{std::numeric_limits<std::uint64_t>::max(), 0}; },
      [&](Best& acc, std::uint64_t begin, std::uint64_t end) {
        WindowScanner scan(code.length());
        code.walk(begin, end, [&](CodeIndex idx, const BitVector& bits) {
          if (idx) acc = std::min(acc, Best{scan.weight(bits, static_cast<std::size_t>(b)), idx});
        });
      },
      [](Best& acc, const Best& v) { acc = std::min(acc, v); });
  return {best.second, best.first};
}

std::optional<std::pair<FieldElement, FieldElement>> griesmer_witness(const KasamiCode& code, int b) {
  const FieldTower& f = code.field();
  const int m = f.m();
  if (b <= m || b > 2 * m) throw KasamiError(Errc::BOutOfRange, "witness search needs m < b <= 2m");
  const HierarchyTables tables(f, b - 1);
  const auto q = static_cast<std::int64_t>(f.q());
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    const FieldElement alpha{a};
    for (auto beta : f.subfield_elements()) {
      if (beta.is_zero() || exp_sum_closed(alpha, beta, code) != q - 1) continue;
      const auto t = tables.t_counts(alpha, beta, b);
      bool capped = true;
      for (int j = 1; j < b && capped; ++j) capped = t[static_cast<std::size_t>(j - 1)] == t_count_cap(j, m);
      if (capped) return std::pair{alpha, beta};
    }
  }
  return std::nullopt;
}

}  // namespace kasami
