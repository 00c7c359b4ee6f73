#include "kasami/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kasami/error.hpp"
#include "kasami/hierarchy.hpp"
#include "kasami/parallel.hpp"

namespace kasami {

namespace {

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

ScanOptions scan_options(const CommandOptions& o, int default_cap) {
  return ScanOptions{o.workers, o.max_m.value_or(default_cap)};
}

RunReport start(const char* command, const KasamiCode& code, std::optional<int> b) {
  RunReport r;
  r.command = command;
  r.m = code.m();
  r.b = b;
  r.modulus = code.field().modulus();
  return r;
}

void require_b(const KasamiCode& code, int b) {
  if (b < 1 || static_cast<std::size_t>(b) > code.length())
    throw KasamiError(Errc::BOutOfRange, "b = " + std::to_string(b) + " outside [1, " + std::to_string(code.length()) + "]");
}

void check(RunReport& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string counterexample(const KasamiCode& code, CodeIndex idx, int b, std::uint64_t expected, std::uint64_t got) {
  return "counterexample (alpha=" + hex(code.alpha_of(idx).bits) + ", beta=" + hex(code.beta_of(idx).bits) +
         ", b=" + std::to_string(b) + ", expected=" + std::to_string(expected) + ", got=" + std::to_string(got) + ")";
}

void compare_enumerators(RunReport& r, const std::string& name, const WeightEnumerator& expected,
                         const WeightEnumerator& got) {
  const bool same = expected.counts == got.counts;
  check(r, name, same, same ? enumerator_to_text(expected)
                            : "expected " + enumerator_to_text(expected) + ", got " + enumerator_to_text(got));
}

std::optional<std::uint64_t> theorem_bound(int b, const FieldTower& f) {
  if (b > f.m()) return std::nullopt;
  try {
    return mb_lower_bound(b, f);
  } catch (const KasamiError& e) {
    if (e.code() == Errc::MbUndefined) return std::nullopt;
    throw;
  }
}

// Per-codeword comparisons for cmd_verify. Each suite remembers its first
// failure in index order and how many comparisons it made.
struct Failure {
  CodeIndex idx = 0;
  int b = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
};

struct SuiteState {
  std::uint64_t compared = 0;
  std::uint64_t failed = 0;
  std::optional<Failure> first;

  void record(bool ok, CodeIndex idx, int b, std::uint64_t expected, std::uint64_t got) {
    ++compared;
    if (ok) return;
    ++failed;
    if (!first) first = Failure{idx, b, expected, got};
  }
  void merge(const SuiteState& o) {
    compared += o.compared;
    failed += o.failed;
    if (!first) first = o.first;
  }
};

constexpr int kSpanMaxB = 8;

struct VerifyState {
  SuiteState exp_sum, hamming, span, packed, closed;
  std::vector<std::uint64_t> min_weight;  // index b - 1, over nonzero codewords
};

}  // namespace

bool RunReport::ok() const noexcept { return first_failure() == nullptr; }

const CheckResult* RunReport::first_failure() const noexcept {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

RunReport cmd_table(const CommandOptions& o) {
  const KasamiCode code(FieldTower::build(o.m, o.modulus));
  require_b(code, o.b);
  const ScanOptions scan = scan_options(o, 6);
  RunReport r = start("table", code, o.b);
  r.enumerator = weight_enumerator_scan(code, o.b, scan);
  const auto& e = *r.enumerator;
  check(r, "total", e.total() == code.size(), std::to_string(e.total()) + " codewords");
  check(r, "zero_word", e.counts.count(0) && e.counts.at(0) == 1, "coefficient of T^0");
  if (o.b == 2) compare_enumerators(r, "pair_closed_form", pair_distribution_closed(o.m), e);
  if (o.b > 3 * o.m) compare_enumerators(r, "saturated_closed_form", saturated_enumerator(o.m, o.b), e);
  compare_enumerators(r, "case_formula_histogram", weight_enumerator_closed(code, o.b, scan), e);
  return r;
}

RunReport cmd_verify(const CommandOptions& o) {
  const KasamiCode code(FieldTower::build(o.m, o.modulus));
  const FieldTower& f = code.field();
  const int m = code.m();
  const int n = static_cast<int>(code.length());
  const int b_max = o.b_max <= 0 ? n : std::min(o.b_max, n);
  RunReport r = start("verify", code, b_max);
  r.values.emplace_back("b_max", std::to_string(b_max));

  const ScanOptions scan = scan_options(o, 5);
  const bool exhaustive = !o.sample;
  std::vector<CodeIndex> sampled;
  if (exhaustive) {
    check_scan_size(code, scan);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<CodeIndex> pick(1, code.size() - 1);
    sampled.resize(*o.sample);
    for (auto& s : sampled) s = pick(rng);
    r.values.emplace_back("sampled_codewords", std::to_string(*o.sample));
    r.values.emplace_back("seed", std::to_string(o.seed));
  }
  const std::uint64_t total = exhaustive ? code.size() : sampled.size();
  const HierarchyTables tables(f, std::min(b_max, 3 * m) - 1);
  const CodeIndex fault_idx = exhaustive ? 1 : (sampled.empty() ? 0 : sampled.front());
  const int fault_b = std::min(2, b_max);

  VerifyState v = parallel_chunks<VerifyState>(
      total, o.workers ? o.workers : default_workers(),
      [&] { return VerifyState{{}, {}, {}, {}, {}, std::vector<std::uint64_t>(b_max, ~std::uint64_t{0})}; },
      [&](VerifyState& st, std::uint64_t begin, std::uint64_t end) {
        WindowScanner scanner(code.length());
        for (std::uint64_t pos = begin; pos < end; ++pos) {
          const CodeIndex idx = exhaustive ? pos : sampled[pos];
          const FieldElement alpha = code.alpha_of(idx), beta = code.beta_of(idx);
          const BitVector bits = code.bits_of(idx);
          if (idx) {
            const auto direct = exp_sum_direct(alpha, beta, code);
            const auto closed = exp_sum_closed(alpha, beta, code);
            st.exp_sum.record(direct == closed, idx, 0, static_cast<std::uint64_t>(direct),
                              static_cast<std::uint64_t>(closed));
            const auto from_sum = hamming_weight_from_sum(closed, code);
            st.hamming.record(from_sum == bits.popcount(), idx, 1, bits.popcount(), from_sum);
          }
          for (int b = 1; b <= b_max; ++b) {
            const auto brute = wb_brute(bits, static_cast<std::size_t>(b));
            if (idx) st.min_weight[b - 1] = std::min<std::uint64_t>(st.min_weight[b - 1], brute);
            const auto packed = scanner.weight(bits, static_cast<std::size_t>(b));
            st.packed.record(packed == brute, idx, b, brute, packed);
            if (b <= kSpanMaxB) {
              const auto span = wb_span(bits, static_cast<std::size_t>(b));
              st.span.record(span == brute, idx, b, brute, span);
            }
            std::uint64_t closed = wb_closed(alpha, beta, b, code, tables);
            if (o.inject_fault && idx == fault_idx && b == fault_b) closed ^= 1;
            st.closed.record(closed == brute, idx, b, brute, closed);
          }
        }
      },
      [](VerifyState& acc, const VerifyState& c) {
        acc.exp_sum.merge(c.exp_sum);
        acc.hamming.merge(c.hamming);
        acc.span.merge(c.span);
        acc.packed.merge(c.packed);
        acc.closed.merge(c.closed);
        for (std::size_t i = 0; i < acc.min_weight.size(); ++i) acc.min_weight[i] = std::min(acc.min_weight[i], c.min_weight[i]);
      });

  auto suite = [&](const char* name, const SuiteState& s) {
    std::string detail = std::to_string(s.compared) + " comparisons";
    if (s.first) {
      detail = std::to_string(s.failed) + " of " + detail + " failed; " +
               counterexample(code, s.first->idx, s.first->b, s.first->expected, s.first->got);
    }
    check(r, name, s.failed == 0, detail);
  };
  suite("exp_sum_direct_vs_closed", v.exp_sum);
  suite("hamming_weight_from_sum", v.hamming);
  suite("wb_span_vs_brute", v.span);
  suite("wb_packed_vs_brute", v.packed);
  suite("wb_closed_vs_brute", v.closed);

  {
    bool ok = true;
    std::string detail;
    const int j_max = std::min(3 * m - 1, 22);
    for (int j = 1; j <= j_max && ok; ++j) {
      const auto g = gamma_sets(j, f);
      std::vector<std::uint64_t> both;
      std::set_intersection(g.gamma1.begin(), g.gamma1.end(), g.gamma2.begin(), g.gamma2.end(),
                            std::back_inserter(both));
      ok = g.gamma1.size() == gamma1_size_formula(j, m) && g.gamma2.size() == gamma2_size_formula(j, m) &&
           both.empty();
      if (!ok)
        detail = "j=" + std::to_string(j) + ": sizes " + std::to_string(g.gamma1.size()) + "/" +
                 std::to_string(g.gamma2.size()) + ", expected " + std::to_string(gamma1_size_formula(j, m)) + "/" +
                 std::to_string(gamma2_size_formula(j, m)) + ", overlap " + std::to_string(both.size());
    }
    check(r, "degenerate_set_sizes", ok, ok ? "j <= " + std::to_string(j_max) : detail);
  }

  {
    bool ok = true;
    std::string detail = "b <= 64";
    for (int b = 1; b <= 64 && ok; ++b)
      for (int mb = 0; mb < b && ok; ++mb)
        for (const auto& id : counting_identities(b, mb))
          if (!id.holds) {
            ok = false;
            detail = id.name + " at b=" + std::to_string(b) + ", mb=" + std::to_string(mb) + ": " + id.lhs + " != " + id.rhs;
          }
    check(r, "counting_identities", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int b = 1; b <= std::min(b_max, 3 * m) && ok; ++b) {
      const auto range = distance_range(b, m);
      const auto gw = generalized_weight(b, m);
      ok = gw == range.lower && range.lower <= range.upper;
      if (ok)
        if (auto bound = theorem_bound(b, f)) {
          ok = gw <= *bound && *bound <= range.upper;
          if (!ok)
            detail = "b=" + std::to_string(b) + ": m(b) bound " + std::to_string(*bound) + " outside [" +
                     std::to_string(gw) + ", " + std::to_string(range.upper) + "]";
        }
      if (!ok && detail.empty()) detail = "ordering fails at b=" + std::to_string(b);
    }
    check(r, "bound_ordering", ok, ok ? "b <= " + std::to_string(std::min(b_max, 3 * m)) : detail);
  }

  if (exhaustive) {
    std::string observed;
    bool ok = true;
    std::string first_bad;
    for (int b = 1; b <= b_max; ++b) {
      const std::uint64_t d = v.min_weight[b - 1];
      observed += (b > 1 ? " " : "") + std::to_string(b) + ":" + std::to_string(d);
      const auto range = distance_range(b, m);
      bool here = range.lower <= d && d <= range.upper;
      if (b < b_max && b < 3 * m) here = here && d < v.min_weight[b];
      if (b >= 3 * m) here = here && d == static_cast<std::uint64_t>(n);
      if (!here && ok) first_bad = "b=" + std::to_string(b) + " observed " + std::to_string(d);
      ok = ok && here;
    }
    r.values.emplace_back("observed_d_b", observed);
    check(r, "hierarchy_chain_and_ranges", ok, ok ? "observed d_b within bounds" : first_bad);

    bool bound_ok = true;
    std::string bound_detail = "no m(b) bound applies";
    for (int b = 1; b <= std::min(b_max, m); ++b) {
      const auto bound = theorem_bound(b, f);
      if (!bound) continue;
      if (bound_ok) bound_detail = "holds for b <= " + std::to_string(std::min(b_max, m));
      if (*bound > v.min_weight[b - 1] && bound_ok) {
        bound_ok = false;
        bound_detail = "b=" + std::to_string(b) + ": bound " + std::to_string(*bound) + " > observed " +
                       std::to_string(v.min_weight[b - 1]);
      }
    }
    check(r, "mb_lower_bound_le_observed", bound_ok, bound_detail);

    if (b_max >= 2) compare_enumerators(r, "pair_enumerator_closed_vs_scan", pair_distribution_closed(m),
                                        weight_enumerator_scan(code, 2, scan));
    if (b_max > 3 * m)
      compare_enumerators(r, "saturated_enumerator_closed_vs_scan", saturated_enumerator(m, 3 * m + 1),
                          weight_enumerator_scan(code, 3 * m + 1, scan));
  }
  return r;
}

RunReport cmd_bounds(const CommandOptions& o) {
  const KasamiCode code(FieldTower::build(o.m, o.modulus));
  require_b(code, o.b);
  const int m = code.m();
  RunReport r = start("bounds", code, o.b);
  const auto range = distance_range(o.b, m);
  const bool has_gw = o.b <= 3 * m;
  const std::uint64_t gw = has_gw ? generalized_weight(o.b, m) : 0;
  const auto bound = theorem_bound(o.b, code.field());
  const std::uint64_t observed = min_bsym_distance(code, static_cast<std::size_t>(o.b), scan_options(o, 6));
  r.values.emplace_back("generalized_weight", has_gw ? std::to_string(gw) : "n/a");
  r.values.emplace_back("mb_lower_bound", bound ? std::to_string(*bound) : "n/a");
  r.values.emplace_back("observed_d_b", std::to_string(observed));
  r.values.emplace_back("range_lower", std::to_string(range.lower));
  r.values.emplace_back("range_upper", std::to_string(range.upper));
  if (has_gw)
    check(r, "generalized_weight_le_observed", gw <= observed, std::to_string(gw) + " <= " + std::to_string(observed));
  if (bound) check(r, "mb_bound_le_observed", *bound <= observed, std::to_string(*bound) + " <= " + std::to_string(observed));
  check(r, "observed_in_range", range.lower <= observed && observed <= range.upper,
        std::to_string(range.lower) + " <= " + std::to_string(observed) + " <= " + std::to_string(range.upper));
  return r;
}

RunReport cmd_mb(const CommandOptions& o) {
  const KasamiCode code(FieldTower::build(o.m, o.modulus));
  RunReport r = start("mb", code, o.b);
  const auto inv = mb_invariant(o.b, code.field());
  r.values.emplace_back("m_b", inv.value ? std::to_string(*inv.value) : "undefined");
  std::string witness;
  for (auto e : inv.witness_set) witness += (witness.empty() ? "" : " ") + hex(e.bits);
  r.values.emplace_back("witness_set", witness.empty() ? "{}" : "{" + witness + "}");
  if (inv.value)
    r.values.emplace_back("lower_bound", std::to_string(mb_lower_bound_formula(o.b, code.m(), *inv.value)));
  return r;
}

RunReport cmd_shorten(const CommandOptions& o) {
  const KasamiCode code(FieldTower::build(o.m, o.modulus));
  require_b(code, o.b);
  const int m = code.m();
  const ScanOptions scan = scan_options(o, 6);
  RunReport r = start("shorten", code, o.b);

  const std::uint64_t d_b = min_bsym_distance(code, static_cast<std::size_t>(o.b), scan);
  BitVector c0;
  std::optional<std::pair<FieldElement, FieldElement>> witness;
  if (o.codeword) {
    c0 = BitVector::from_string(*o.codeword);
  } else if (o.b > m && o.b <= 2 * m && (witness = griesmer_witness(code, o.b))) {
    c0 = code.codeword(witness->first, witness->second).bits;
  } else {
    c0 = code.bits_of(find_min_weight_codeword(code, o.b, scan).first);
  }
  const auto p = shorten_on_complement(code, c0, o.b, d_b);

  r.values.emplace_back("c0", c0.to_string());
  r.values.emplace_back("parameters", "[" + std::to_string(p.length) + ", " + std::to_string(p.dimension) + ", " +
                                          std::to_string(p.min_distance) + "]");
  r.values.emplace_back("griesmer_sum", std::to_string(p.griesmer_sum));
  r.values.emplace_back("griesmer", bool_text(p.is_griesmer));
  r.values.emplace_back("shift_rank", std::to_string(p.shift_rank));
  r.values.emplace_back("complement_size", std::to_string(p.complement.size()));
  if (o.b > m && o.b <= 2 * m)
    r.values.emplace_back("cap_witness", witness ? "(" + hex(witness->first.bits) + ", " + hex(witness->second.bits) + ")"
                                                 : "none");
  for (const auto& w : p.warnings) r.values.emplace_back("warning", w);

  check(r, "shift_rank_equals_b", p.shift_rank == static_cast<std::uint64_t>(o.b), std::to_string(p.shift_rank));
  // Griesmer is only claimed when the minimum is reached by the structured codeword.
  bool claimed = false;
  if (!o.codeword && o.b <= m) claimed = o.b <= 2 || mb_invariant(o.b, code.field()).value == o.b - 1;
  if (!o.codeword && witness) claimed = true;
  if (claimed) {
    check(r, "length_equals_d_b", p.length == d_b, std::to_string(p.length) + " vs " + std::to_string(d_b));
    check(r, "griesmer", p.is_griesmer,
          std::to_string(p.length) + " vs " + std::to_string(p.griesmer_sum));
  }
  return r;
}

std::string render(const RunReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      if (r.enumerator) out << enumerator_to_text(*r.enumerator) << '\n';
      for (const auto& [k, v] : r.values) out << k << ": " << v << '\n';
      for (const auto& c : r.checks)
        out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail)
            << '\n';
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json j;
      j["command"] = r.command;
      j["m"] = r.m;
      j["b"] = r.b ? nlohmann::ordered_json(*r.b) : nlohmann::ordered_json(nullptr);
      j["modulus_hex"] = hex(r.modulus);
      j["enumerator"] = nlohmann::ordered_json::array();
      if (r.enumerator)
        for (auto [w, c] : r.enumerator->counts) j["enumerator"].push_back({{"weight", w}, {"count", c}});
      j["results"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.values) j["results"][k] = v;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
      };
      if (r.enumerator) {
        out << "weight,count\n";
        for (auto [w, c] : r.enumerator->counts) out << w << ',' << c << '\n';
      }
      if (!r.values.empty()) {
        out << "key,value\n";
        for (const auto& [k, v] : r.values) out << k << ',' << quote(v) << '\n';
      }
      if (!r.checks.empty()) {
        out << "check,pass,detail\n";
        for (const auto& c : r.checks) out << c.name << ',' << bool_text(c.pass) << ',' << quote(c.detail) << '\n';
      }
      break;
    }
  }
  return out.str();
}

int exit_code(const RunReport& r) noexcept { return r.ok() ? 0 : 2; }

}  // namespace kasami
