#include "fif/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <string>

#include "fif/error.hpp"
#include "parse_util.hpp"

namespace fif {

Signal parse_signal_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_line(line);
    if (line.empty()) continue;
    double v = 0.0;
    if (!detail::parse_double(line, v)) {
      if (first) {
        first = false;
        continue;
      }
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": not a number: '" + line + "'");
    }
    first = false;
    values.push_back(v);
  }
  return Signal(std::move(values));
}

Signal read_signal(const std::filesystem::path& path, SignalFormat format) {
  if (format == SignalFormat::Csv) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open " + path.string());
    return parse_signal_csv(in);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::vector<double> values;
  std::array<unsigned char, 8> bytes{};
  while (in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    values.push_back(std::bit_cast<double>(bits));
  }
  if (in.gcount() != 0) {
    throw Error(Errc::ParseError, "f64le file size is not a multiple of 8 bytes: " + path.string());
  }
  return Signal(std::move(values));
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_signal_csv(const std::filesystem::path& path, std::span<const double> x) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  std::string text;
  text.reserve(x.size() * 24);
  for (double v : x) {
    text += format_double(v);
    text += '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

std::string signal_checksum(std::span<const double> x) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (double v : x) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      hash ^= (bits >> (8 * i)) & 0xffu;
      hash *= 0x100000001b3ull;
    }
  }
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf.data(), 16);
}

}  // namespace fif
