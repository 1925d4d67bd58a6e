#include "fif/masklen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fif/error.hpp"
#include "fif/fft.hpp"

namespace fif {

namespace {

constexpr double kSpectralFloor = 0.01;

MaskChoice clamp_choice(std::size_t raw, std::size_t n) {
  const std::size_t upper = max_mask_length(n);
  return {std::clamp<std::size_t>(raw, 1, upper), raw};
}

void require_length(std::size_t n) {
  if (n < 3) throw Error(Errc::DegenerateInput, "mask length needs at least 3 samples");
}

}  // namespace

void MaskStrategy::validate() const {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw Error(Errc::InvalidConfig, "nu must be positive");
}

std::size_t count_extrema(std::span<const double> s) noexcept {
  // Sign of the slope between consecutive distinct values; plateaus vanish.
  std::size_t count = 0;
  int previous = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double d = s[i] - s[i - 1];
    if (d == 0.0) continue;
    const int sign = d > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) ++count;
    previous = sign;
  }
  return count;
}

MaskChoice mask_choice_from_counts(std::size_t n, std::size_t k, double nu) {
  require_length(n);
  if (k < 2) {
    throw Error(Errc::TooFewExtrema, "mask length needs at least 2 extrema, found " + std::to_string(k));
  }
  const double ratio = nu * static_cast<double>(n) / static_cast<double>(k);
  const auto raw = 2 * static_cast<std::size_t>(std::floor(ratio));
  return clamp_choice(raw, n);
}

MaskChoice mask_choice_extrema(std::span<const double> s, double nu) {
  require_length(s.size());
  return mask_choice_from_counts(s.size(), count_extrema(s), nu);
}

MaskChoice mask_choice_spectral(std::span<const double> s, double nu) {
  const std::size_t n = s.size();
  require_length(n);
  RealFft fft(n);
  const auto spectrum = fft.forward(s);
  const std::size_t top = n / 2;

  std::vector<double> mag(top + 1, 0.0);
  double peak = 0.0;
  for (std::size_t k = 1; k <= top; ++k) {
    mag[k] = std::abs(spectrum[k]);
    peak = std::max(peak, mag[k]);
  }
  double l1 = 0.0;
  for (double v : s) l1 += std::abs(v);
  if (!(peak > 1e-12 * l1)) throw Error(Errc::FlatSpectrum, "signal has no oscillatory content");

  const double floor = kSpectralFloor * peak;
  for (std::size_t k = top; k >= 1; --k) {
    if (mag[k] <= floor) continue;
    const bool above_lower = k == 1 || mag[k] >= mag[k - 1];
    const bool above_upper = k == top || mag[k] >= mag[k + 1];
    if (above_lower && above_upper) {
      const double raw = std::round(nu * static_cast<double>(n) / static_cast<double>(k));
      return clamp_choice(static_cast<std::size_t>(std::max(raw, 0.0)), n);
    }
  }
  throw Error(Errc::FlatSpectrum, "no spectral peak above the 1% floor");
}

MaskChoice choose_mask_length(std::span<const double> s, const MaskStrategy& strategy) {
  strategy.validate();
  return strategy.kind == MaskKind::ExtremaCount ? mask_choice_extrema(s, strategy.nu)
                                                 : mask_choice_spectral(s, strategy.nu);
}

}  // namespace fif
