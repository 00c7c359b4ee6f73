#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kasami {

enum class Errc {
  InvalidM,
  BadModulus,
  NotInSubfield,
  BetaNotInSubfield,
  ParityViolation,
  BOutOfRange,
  NonIntegerResult,
  ScanTooLarge,
  ZeroAlphaBeta,
  MbUndefined,
  NotABasis,
  RankDeficient,
  InvalidInput,
};

std::string_view to_string(Errc code) noexcept;

class KasamiError : public std::runtime_error {
 public:
  KasamiError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kasami
