#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fif {

/// Five unit tones at random bins in [1, max(1, n/32)] with random phases plus
/// Gaussian noise of standard deviation 0.01, all drawn from mt19937_64(seed).
std::vector<double> bench_signal(std::size_t n, std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  std::size_t iterations = 0;
  std::size_t mask_length = 0;
  double t_iterative = 0.0;  // seconds, N window-summation steps
  double t_direct = 0.0;     // seconds, eigenvalues + one spectral application
  double speedup = 0.0;
  double max_abs_diff = 0.0;  // between the two results
};

/// Times (I - W)^N s both ways on bench_signal(n, seed). The filter comes from
/// the extrema mask rule applied to the generated signal.
BenchRow bench_one(std::size_t n, std::uint64_t seed, std::size_t iterations);

}  // namespace fif
