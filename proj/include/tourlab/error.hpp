#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourlab {

enum class Errc {
  WrongLength,
  BadCharacter,
  BadSubset,
  SizeMismatch,
  Unsupported,
  CorruptCache,
  OddCoefficientResidue,
  XOutOfRange,
  BadParameters,
  BadProbability,
  NotMultiple,
  StarTooBig,
  PackingFailed,
  TooLarge,
  Io,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tourlab
