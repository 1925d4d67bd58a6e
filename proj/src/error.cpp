#include "fif/error.hpp"

namespace fif {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SupportTooLarge: return "support-too-large";
    case Errc::DegenerateFilter: return "degenerate-filter";
    case Errc::InvalidFilterTable: return "invalid-filter-table";
    case Errc::TooFewExtrema: return "too-few-extrema";
    case Errc::FlatSpectrum: return "flat-spectrum";
    case Errc::AsymmetryDetected: return "asymmetry-detected";
    case Errc::InvalidSpectrum: return "invalid-spectrum";
    case Errc::NegativeBase: return "negative-base";
    case Errc::LengthMismatch: return "length-mismatch";
    case Errc::ResidualImaginary: return "residual-imaginary";
    case Errc::BoundOverflow: return "bound-overflow";
    case Errc::DegenerateInput: return "degenerate-input";
    case Errc::InvalidConfig: return "invalid-config";
    case Errc::ParseError: return "parse-error";
    case Errc::NonFiniteSample: return "non-finite-sample";
    case Errc::Io: return "io";
    case Errc::SizeGuard: return "size-guard";
    case Errc::CacheFormat: return "cache-format";
    case Errc::Overflow: return "overflow";
  }
  return "unknown";
}

}  // namespace fif
