#include "fif/bench.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "fif/error.hpp"
#include "fif/inner_loop.hpp"
#include "fif/masklen.hpp"
#include "fif/outer_loop.hpp"
#include "fif/spectrum.hpp"

namespace fif {

std::vector<double> bench_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t top = std::max<std::size_t>(1, n / 32);
  std::uniform_int_distribution<std::size_t> pick_bin(1, top);
  std::uniform_real_distribution<double> pick_phase(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> noise(0.0, 0.01);

  std::vector<double> s(n, 0.0);
  for (int tone = 0; tone < 5; ++tone) {
    const double bin = static_cast<double>(pick_bin(rng));
    const double phase = pick_phase(rng);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += std::sin(2.0 * std::numbers::pi * bin * static_cast<double>(i) / static_cast<double>(n) + phase);
    }
  }
  for (double& v : s) v += noise(rng);
  return s;
}

BenchRow bench_one(std::size_t n, std::uint64_t seed, std::size_t iterations) {
  if (n < 5) throw Error(Errc::InvalidConfig, "bench size must be at least 5");
  if (iterations < 1) throw Error(Errc::InvalidConfig, "bench iterations must be at least 1");
  using clock = std::chrono::steady_clock;
  const auto s = bench_signal(n, seed);
  const std::size_t l = mask_choice_extrema(s, MaskStrategy{}.nu).length;
  const DiscreteFilter filter = inner_loop_filter(FilterShape::triangular(), l, n);

  const auto t0 = clock::now();
  const auto iterative = apply_iterative(s, filter, iterations);
  const auto t1 = clock::now();
  const auto ev = filter_eigenvalues(filter);
  const auto direct = apply_direct(s, ev, iterations);
  const auto t2 = clock::now();

  BenchRow row;
  row.n = n;
  row.iterations = iterations;
  row.mask_length = l;
  row.t_iterative = std::chrono::duration<double>(t1 - t0).count();
  row.t_direct = std::chrono::duration<double>(t2 - t1).count();
  row.speedup = row.t_direct > 0.0 ? row.t_iterative / row.t_direct : 0.0;
  for (std::size_t i = 0; i < n; ++i) row.max_abs_diff = std::max(row.max_abs_diff, std::abs(iterative[i] - direct[i]));
  return row;
}

}  // namespace fif
