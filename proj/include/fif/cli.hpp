#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fif/error.hpp"
#include "fif/filters.hpp"

namespace fif {

enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitConfig = 2, kExitNumerical = 3 };

int exit_code_for(Errc code) noexcept;

/// "triangular", "triangular-self-convolved" or "tabulated:<path>".
FilterShape parse_filter_spec(const std::string& spec);

struct DecomposeOptions {
  std::filesystem::path input;
  std::filesystem::path output_dir;
  std::string format = "csv";
  std::string filter = "triangular";
  std::string mask_strategy = "extrema";
  double nu = 1.6;
  double delta = 1e-3;
  std::size_t max_inner_iter = 200;
  std::size_t max_imfs = 50;
  double eta = 0.0;
  std::string mode = "direct";
  std::optional<double> gamma;
  std::optional<std::filesystem::path> eigen_cache;
};

struct SpectrumOptions {
  std::string filter = "triangular";
  std::size_t length = 0;
  std::size_t n = 0;
  std::size_t iterations = 1;
  std::optional<double> gamma;
  bool self_convolve = false;
  std::filesystem::path output;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t iterations = 100;
  std::filesystem::path output;
};

int cmd_decompose(const DecomposeOptions& opt, std::ostream& log);
int cmd_spectrum(const SpectrumOptions& opt, std::ostream& log);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& log);

/// Parses argv[1] as a subcommand and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace fif
