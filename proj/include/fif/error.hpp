#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fif {

enum class Errc {
  SupportTooLarge,
  DegenerateFilter,
  InvalidFilterTable,
  TooFewExtrema,
  FlatSpectrum,
  AsymmetryDetected,
  InvalidSpectrum,
  NegativeBase,
  LengthMismatch,
  ResidualImaginary,
  BoundOverflow,
  DegenerateInput,
  InvalidConfig,
  ParseError,
  NonFiniteSample,
  Io,
  SizeGuard,
  CacheFormat,
  Overflow,
};

std::string_view to_string(Errc code) noexcept;

/// Library exception. Every failure raised by fif carries one of the codes above
/// so callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fif
