#pragma once

#include <cstddef>
#include <span>

namespace fif {

enum class MaskKind { ExtremaCount, SpectralPeak };

/// How the filter half support is chosen from the signal.
struct MaskStrategy {
  MaskKind kind = MaskKind::ExtremaCount;
  double nu = 1.6;

  void validate() const;
};

/// Strict local maxima and minima. Runs of equal values collapse to one
/// point, endpoints never count.
std::size_t count_extrema(std::span<const double> s) noexcept;

/// Largest usable half support for a period-n signal: floor((n - 1) / 2).
constexpr std::size_t max_mask_length(std::size_t n) noexcept { return n < 1 ? 0 : (n - 1) / 2; }

struct MaskChoice {
  std::size_t length = 0;     // clamped to [1, max_mask_length(n)]
  std::size_t unclamped = 0;  // value before clamping
};

/// l = 2 floor(nu N / k) for N samples with k extrema. Errc::TooFewExtrema when k < 2.
MaskChoice mask_choice_from_counts(std::size_t n, std::size_t k, double nu);
MaskChoice mask_choice_extrema(std::span<const double> s, double nu);

/// Highest-frequency local maximum of |DFT| (bins 1..n/2) above 1% of the
/// spectral peak; l = round(nu n / bin). Errc::FlatSpectrum when no AC energy.
MaskChoice mask_choice_spectral(std::span<const double> s, double nu);

MaskChoice choose_mask_length(std::span<const double> s, const MaskStrategy& strategy);

inline std::size_t mask_length_extrema(std::span<const double> s, double nu) {
  return mask_choice_extrema(s, nu).length;
}
inline std::size_t mask_length_spectral(std::span<const double> s, double nu) {
  return mask_choice_spectral(s, nu).length;
}

}  // namespace fif
