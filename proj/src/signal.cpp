#include "fif/signal.hpp"

#include <cmath>
#include <string>

#include "fif/error.hpp"

namespace fif {

Signal::Signal(std::vector<double> samples) : samples_(std::move(samples)) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(Errc::NonFiniteSample, "non-finite sample at index " + std::to_string(i));
    }
  }
}

double norm2(std::span<const double> x) noexcept {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

double max_abs(std::span<const double> x) noexcept {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fif
