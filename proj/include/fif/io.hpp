#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "fif/signal.hpp"

namespace fif {

enum class SignalFormat { Csv, F64le };

/// One decimal value per line; a single non-numeric first line is taken as a
/// header. Blank lines are ignored. Errc::ParseError carries the line number.
Signal parse_signal_csv(std::istream& in);

Signal read_signal(const std::filesystem::path& path, SignalFormat format);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// One value per line, LF terminated, shortest round-trip formatting.
void write_signal_csv(const std::filesystem::path& path, std::span<const double> x);

/// FNV-1a over the little-endian bytes of the samples, as 16 hex digits.
std::string signal_checksum(std::span<const double> x);

}  // namespace fif
