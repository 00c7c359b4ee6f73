#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kasami/commands.hpp"
#include "kasami/error.hpp"
#include "kasami/simd/kernels.hpp"

namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;
constexpr int kExitResource = 65;

int exit_for(kasami::Errc code) {
  switch (code) {
    case kasami::Errc::ScanTooLarge: return kExitResource;
    case kasami::Errc::NonIntegerResult:
    case kasami::Errc::ParityViolation: return kExitMismatch;
    default: return kExitUsage;
  }
}

struct Cli {
  kasami::CommandOptions opts;
  std::string format = "text";
  std::string modulus_hex;
  std::string isa = "auto";
};

void add_common(CLI::App* sub, Cli& cli, bool with_b) {
  sub->add_option("--m", cli.opts.m, "field parameter m (code length 2^{2m}-1)")->required()->check(CLI::Range(2, 10));
  if (with_b) sub->add_option("--b", cli.opts.b, "symbol size b")->required()->check(CLI::PositiveNumber);
  sub->add_option("--format", cli.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--modulus", cli.modulus_hex, "primitive polynomial of degree 2m as a hex bit-mask");
  sub->add_option("--workers", cli.opts.workers, "worker threads (default: available parallelism)");
  sub->add_option("--max-m", cli.opts.max_m, "raise the exhaustive-scan cap on m");
  sub->add_option("--isa", cli.isa, "window-scan kernels")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary Kasami codes: b-symbol weight tables, bounds and checks"};
  app.require_subcommand(1);
  Cli cli;
  std::function<kasami::RunReport(const kasami::CommandOptions&)> run;

  auto* table = app.add_subcommand("table", "b-symbol weight enumerator by exhaustive scan");
  add_common(table, cli, true);
  table->callback([&] { run = kasami::cmd_table; });

  auto* verify = app.add_subcommand("verify", "cross-check every computation path");
  add_common(verify, cli, false);
  verify->add_option("--b-max", cli.opts.b_max, "largest b to check (default n)");
  verify->add_option("--sample", cli.opts.sample, "check this many random codewords instead of all");
  verify->add_option("--seed", cli.opts.seed, "seed for --sample");
  verify->add_flag("--inject-fault", cli.opts.inject_fault)->group("");
  verify->callback([&] { run = kasami::cmd_verify; });

  auto* bounds = app.add_subcommand("bounds", "generalized weight, lower bound, observed d_b and range");
  add_common(bounds, cli, true);
  bounds->callback([&] { run = kasami::cmd_bounds; });

  auto* mb = app.add_subcommand("mb", "the invariant m(b) and its witness set");
  add_common(mb, cli, true);
  mb->callback([&] { run = kasami::cmd_mb; });

  auto* shorten = app.add_subcommand("shorten", "shortened code on the complement of a b-symbol support");
  add_common(shorten, cli, true);
  shorten->add_option("--codeword", cli.opts.codeword, "c0 as a 0/1 string (default: a minimum-weight codeword)");
  shorten->callback([&] { run = kasami::cmd_shorten; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!cli.modulus_hex.empty()) {
      std::size_t used = 0;
      cli.opts.modulus = std::stoull(cli.modulus_hex, &used, 16);
      if (used != cli.modulus_hex.size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    std::cerr << "error: --modulus expects a hex bit-mask, got '" << cli.modulus_hex << "'\n";
    return kExitUsage;
  }

  try {
    if (cli.isa != "auto") kasami::simd::select_isa(*kasami::simd::parse_isa(cli.isa));
    const kasami::Format format = cli.format == "json"  ? kasami::Format::Json
                                  : cli.format == "csv" ? kasami::Format::Csv
                                                        : kasami::Format::Text;
    const auto t0 = std::chrono::steady_clock::now();
    kasami::RunReport report = run(cli.opts);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << kasami::render(report, format) << std::flush;
    std::fprintf(stderr, "%s: %.3f s\n", report.command.c_str(), report.seconds);
    if (const auto* bad = report.first_failure())
      std::cerr << "FAIL " << bad->name << ": " << bad->detail << '\n';
    return kasami::exit_code(report);
  } catch (const kasami::KasamiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }
}
