// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "kasami/analysis.hpp"
#include "kasami/commands.hpp"
#include "kasami/error.hpp"
#include "kasami/hierarchy.hpp"

using namespace kasami;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

const KasamiCode& code_for(int m) {
  static std::vector<std::unique_ptr<KasamiCode>> cache(kMaxM + 1);
  if (!cache[m]) cache[m] = std::make_unique<KasamiCode>(FieldTower::build(m));
  return *cache[m];
}

void golden(Outcome& out, int m, int b, const std::string& printed) {
  const auto got = weight_enumerator_scan(code_for(m), b);
  if (got.counts != parse_enumerator(printed).counts)
    out.fail("(" + std::to_string(m) + "," + std::to_string(b) + ") expected " + printed + ", got " +
             enumerator_to_text(got));
}

Outcome symbol_pair_tables() {
  Outcome out;
  golden(out, 2, 2, "1 + 15T^9 + 15T^11 + 15T^12 + 15T^13 + 3T^15");
  golden(out, 3, 2, "1 + 126T^42 + 126T^46 + 63T^48 + 126T^50 + 70T^54");
  golden(out, 4, 2, "1 + 1020T^180 + 1020T^188 + 255T^192 + 1020T^196 + 780T^204");
  for (int m = 2; m <= 5; ++m)
    if (pair_distribution_closed(m).counts != weight_enumerator_scan(code_for(m), 2).counts)
      out.fail("closed form differs from scan at m=" + std::to_string(m));
  if (out.pass) out.detail = "3 reference tables; closed form = scan for m=2..5";
  return out;
}

Outcome higher_b_tables() {
  Outcome out;
  golden(out, 2, 3, "1 + 15T^12 + 15T^13 + 30T^14 + 3T^15");
  golden(out, 2, 4, "1 + 15T^13 + 15T^14 + 33T^15");
  golden(out, 3, 4, "1 + 63T^55 + 63T^56 + 63T^58 + 63T^59 + 126T^60 + 63T^62 + 70T^63");
  golden(out, 2, 5, "1 + 15T^14 + 48T^15");
  golden(out, 2, 6, "1 + 63T^15");
  golden(out, 3, 7, "1 + 61T^61 + 64T^62 + 386T^63");
  golden(out, 4, 3,
         "1 + 255T^210 + 510T^214 + 510T^218 + 765T^222 + 255T^224 + 765T^226 + 510T^230 + 510T^234 + 15T^238");
  if (out.pass) out.detail = "7 reference tables";
  return out;
}

Outcome formula_vs_oracle() {
  Outcome out;
  std::uint64_t compared = 0;
  auto compare = [&](const KasamiCode& code, const HierarchyTables& tables, CodeIndex idx, int b) {
    const auto closed = wb_closed(code.alpha_of(idx), code.beta_of(idx), b, code, tables);
    const auto brute = wb_brute(code.bits_of(idx), static_cast<std::size_t>(b));
    ++compared;
    if (closed != brute && out.pass)
      out.fail("m=" + std::to_string(code.m()) + " index " + std::to_string(idx) + " b=" + std::to_string(b) +
               ": closed " + std::to_string(closed) + " vs brute " + std::to_string(brute));
  };
  for (int m = 2; m <= 3; ++m) {
    const auto& code = code_for(m);
    const HierarchyTables tables(code.field(), 3 * m - 1);
    for (CodeIndex i = 0; i < code.size(); ++i)
      for (int b = 1; b <= static_cast<int>(code.length()); ++b) compare(code, tables, i, b);
  }
  std::mt19937_64 rng(20240607);
  for (int m = 4; m <= 5; ++m) {
    const auto& code = code_for(m);
    const HierarchyTables tables(code.field(), 3 * m - 1);
    for (int s = 0; s < 10000; ++s) {
      const CodeIndex idx = 1 + rng() % (code.size() - 1);
      compare(code, tables, idx, 1 + static_cast<int>(rng() % code.length()));
    }
  }
  if (out.pass) out.detail = std::to_string(compared) + " comparisons (m=2,3 exhaustive; 10^4 samples at m=4,5)";
  return out;
}

Outcome character_sum() {
  Outcome out;
  std::uint64_t compared = 0;
  for (int m = 2; m <= 4; ++m) {
    const auto& code = code_for(m);
    for (CodeIndex i = 0; i < code.size(); ++i, ++compared) {
      const auto a = code.alpha_of(i), b = code.beta_of(i);
      if (exp_sum_direct(a, b, code) != exp_sum_closed(a, b, code) && out.pass)
        out.fail("m=" + std::to_string(m) + " index " + std::to_string(i));
    }
  }
  if (out.pass) out.detail = std::to_string(compared) + " pairs for m=2..4";
  return out;
}

Outcome counting_lemmas() {
  Outcome out;
  for (int m = 2; m <= 5; ++m) {
    const auto& f = code_for(m).field();
    for (int j = 1; j <= 3 * m - 1; ++j) {
      const auto g = gamma_sets(j, f);
      const std::set<std::uint64_t> g1(g.gamma1.begin(), g.gamma1.end());
      bool disjoint = true;
      for (auto u : g.gamma2) disjoint = disjoint && !g1.count(u);
      if (g.gamma1.size() != gamma1_size_formula(j, m) || g.gamma2.size() != gamma2_size_formula(j, m) || !disjoint)
        out.fail("degenerate sets at m=" + std::to_string(m) + ", j=" + std::to_string(j));
    }
  }
  for (int b = 1; b <= 64; ++b)
    for (int mb = 0; mb < b; ++mb)
      for (const auto& id : counting_identities(b, mb))
        if (!id.holds) out.fail(id.name + " at b=" + std::to_string(b));
  for (int m = 2; m <= 6; ++m) {
    const auto& f = code_for(m).field();
    std::vector<FieldElement> basis;
    for (int k = 0; k < m; ++k) basis.push_back(f.from_subfield_coords(1u << k));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      if (basis_intersection_count(basis, mask, f) != (std::uint64_t{1} << (m - std::popcount(mask))))
        out.fail("intersection count at m=" + std::to_string(m) + ", mask " + std::to_string(mask));
  }
  if (out.pass) out.detail = "set sizes j<=3m-1 for m<=5; identities b<=64; intersections m<=6";
  return out;
}

Outcome mb_table() {
  Outcome out;
  struct Row {
    int m, b, mb;
  };
  const std::vector<Row> rows{{3, 3, 1}, {4, 3, 2}, {4, 4, 2}, {5, 4, 2}, {6, 4, 2}, {7, 4, 2}, {8, 4, 3},
                              {5, 5, 2}, {6, 5, 2}, {7, 5, 2}, {8, 5, 3}, {6, 6, 2}, {7, 6, 2}};
  int matched = 0;
  for (auto [m, b, expect] : rows) {
    const auto& f = code_for(m).field();
    const auto got = mb_invariant(b, f).value;
    if (got == expect) {
      ++matched;
      continue;
    }
    std::string why = "(" + std::to_string(m) + "," + std::to_string(b) + ") expected " + std::to_string(expect) +
                      ", got " + (got ? std::to_string(*got) : "undefined") + " with modulus 0x";
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(f.modulus()));
    why += buf;
    // Name the first primitive polynomial of the same degree that reproduces the row.
    for (std::uint64_t p = (std::uint64_t{1} << (2 * m)) + 1; p < (std::uint64_t{2} << (2 * m)); p += 2) {
      if (!is_primitive_polynomial(p)) continue;
      if (mb_invariant(b, FieldTower::build(m, p)).value == expect) {
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(p));
        why += std::string(" (0x") + buf + " gives " + std::to_string(expect) + ")";
        break;
      }
    }
    out.fail(why);
  }
  if (out.pass) out.detail = std::to_string(matched) + " rows";
  else out.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows; " + out.detail;
  return out;
}

Outcome hierarchy_bounds() {
  Outcome out;
  for (int m = 2; m <= 3; ++m) {
    const auto& code = code_for(m);
    std::uint64_t prev = 0;
    for (int b = 1; b <= static_cast<int>(code.length()); ++b) {
      const std::uint64_t d = min_bsym_distance(code, static_cast<std::size_t>(b));
      const auto range = distance_range(b, m);
      const std::string at = "(m=" + std::to_string(m) + ", b=" + std::to_string(b) + ", d=" + std::to_string(d) + ")";
      if (b <= 3 * m && generalized_weight(b, m) > d) out.fail("generalized weight above d_b " + at);
      if (d < range.lower || d > range.upper) out.fail("outside range " + at);
      if (m == 2) {
        if (b <= 3 * m && d <= prev) out.fail("chain not increasing " + at);
        if (b >= 3 * m && d != code.length()) out.fail("chain not saturated " + at);
      }
      prev = d;
    }
  }
  if (out.pass) out.detail = "all b for m=2,3; chain d_1<...<d_6=...=d_15=15 at m=2";
  return out;
}

Outcome griesmer_shortening() {
  Outcome out;
  auto report = [&](const ShortenedCodeParams& p, std::uint64_t n, std::uint64_t k, std::uint64_t d, int b) {
    const std::string got = "[" + std::to_string(p.length) + "," + std::to_string(p.dimension) + "," +
                            std::to_string(p.min_distance) + "]";
    if (p.length != n || p.dimension != k || p.min_distance != d || !p.is_griesmer ||
        p.shift_rank != static_cast<std::uint64_t>(b))
      out.fail("got " + got + " griesmer=" + (p.is_griesmer ? "true" : "false") + " rank=" + std::to_string(p.shift_rank));
    return got;
  };
  const auto small = shorten_on_complement(code_for(2), BitVector::from_string("011001110010000"), 2, 9);
  const auto a = report(small, 9, 2, 6, 2);
  const auto& c4 = code_for(4);
  const auto [idx, w] = find_min_weight_codeword(c4, 3);
  const auto big = shorten_on_complement(c4, c4.bits_of(idx), 3, w);
  const auto b = report(big, 210, 3, 120, 3);
  if (out.pass) out.detail = a + " and " + b + ", both Griesmer, shift ranks 2 and 3";
  return out;
}

Outcome saturated_enumerators() {
  Outcome out;
  auto check_b = [&](int m, int b) {
    if (weight_enumerator_scan(code_for(m), b).counts != saturated_enumerator(m, b).counts)
      out.fail("m=" + std::to_string(m) + ", b=" + std::to_string(b));
  };
  for (int b = 7; b <= 15; ++b) check_b(2, b);
  for (int b : {10, 11, 20, 32, 50, 62, 63}) check_b(3, b);
  if (out.pass) out.detail = "b=7..15 at m=2; b in {10,11,20,32,50,62,63} at m=3";
  return out;
}

Outcome determinism() {
  Outcome out;
  CommandOptions o;
  o.m = 3;
  o.b = 4;
  const unsigned max_workers = std::max(1u, std::thread::hardware_concurrency());
  std::string reference;
  for (unsigned w : {1u, 2u, max_workers, 8u}) {
    o.workers = w;
    const auto r = cmd_table(o);
    const std::string text = render(r, Format::Text) + render(r, Format::Json) + render(r, Format::Csv);
    if (reference.empty()) reference = text;
    else if (text != reference) out.fail("output differs at " + std::to_string(w) + " workers");
  }
  if (out.pass) out.detail = "text/json/csv identical for 1, 2, " + std::to_string(max_workers) + " (max) and 8 workers";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"symbol-pair tables and closed form", symbol_pair_tables},
      {"higher-b tables", higher_b_tables},
      {"closed-form weights vs brute force", formula_vs_oracle},
      {"character sum closed form", character_sum},
      {"counting lemmas", counting_lemmas},
      {"m(b) table", mb_table},
      {"hierarchy and bounds", hierarchy_bounds},
      {"Griesmer shortening", griesmer_shortening},
      {"saturated enumerator", saturated_enumerators},
      {"determinism across workers", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), s);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
