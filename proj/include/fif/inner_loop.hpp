#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fif/filters.hpp"
#include "fif/signal.hpp"
#include "fif/spectrum.hpp"

namespace fif {

enum class InnerMode { Iterative, Direct };

struct InnerConfig {
  double delta = 1e-3;             // threshold on SD = |s_{m+1} - s_m|_2 / |s_m|_2
  std::size_t max_iterations = 200;
  InnerMode mode = InnerMode::Direct;
  std::optional<double> gamma;     // threshold mode, direct path only

  void validate() const;
};

struct ImfRecord {
  Signal imf;
  std::size_t mask_length = 0;
  std::size_t iterations_used = 0;
  double final_sd = 0.0;
  bool significant = true;
  /// The iterate reached zero norm before the stopping criterion fired.
  bool averaged_out = false;
};

enum class ConvolutionMethod { Window, Fft };

/// One sifting step s - W s with W the circulant operator of the filter.
/// Window sums over the 2l+1 nonzero weights; Fft multiplies spectra.
std::vector<double> dif_step(std::span<const double> s, const DiscreteFilter& filter,
                             ConvolutionMethod method = ConvolutionMethod::Window);

/// (I - W)^N s by N window-summation steps.
std::vector<double> apply_iterative(std::span<const double> s, const DiscreteFilter& filter,
                                    std::size_t iterations);

/// (I - W)^N s as IDFT((1 - lambda)^N DFT(s)).
std::vector<double> apply_direct(std::span<const double> s, const FilterEigenvalues& ev,
                                 std::size_t iterations);

/// Repeats dif_step until SD < delta or max_iterations, switching from window
/// summation to FFT convolution when the filter is wide. Returns
/// s_N = (I - W)^N s for the first N >= 1 with
/// |s_{N+1} - s_N|_2 / |s_N|_2 < delta.
ImfRecord extract_imf_iterative(const Signal& s, const DiscreteFilter& filter, const InnerConfig& cfg);

/// Same IMF computed in the frequency domain. The minimal N is found by
/// doubling N = 1, 2, 4, ... until SD(N) < delta and then bisecting the
/// bracket; each probe is O(n) on the precomputed DFT of s.
ImfRecord extract_imf_direct(const Signal& s, const FilterEigenvalues& ev, const InnerConfig& cfg);

/// N^N / (N+1)^(N+1), evaluated as exp(N log(N / (N+1))) / (N+1).
double n0_sequence(std::size_t n) noexcept;

/// Minimal N >= 1 with n0_sequence(N) < rhs. Errc::BoundOverflow beyond 1e9.
std::size_t n0_from_rhs(double rhs);

/// A-priori iteration count after which |s_{m+1} - s_m|_2 < delta_abs holds
/// for every m: rhs = delta_abs / (|U^T s|_inf sqrt(n - 1)), with U the
/// unitary DFT basis and no zero eigenvalues assumed.
std::size_t n0_bound(const Signal& s, const FilterEigenvalues& ev, double delta_abs);

}  // namespace fif
