#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fif {

/// A finite sequence of real samples on a uniform grid. The decomposition
/// treats it as one period of a periodic signal. All samples are finite.
class Signal {
 public:
  Signal() = default;
  /// Throws Errc::NonFiniteSample naming the first offending index.
  explicit Signal(std::vector<double> samples);

  static Signal zeros(std::size_t n) { return Signal(std::vector<double>(n, 0.0)); }

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  const std::vector<double>& vector() const noexcept { return samples_; }
  std::vector<double> release() && { return std::move(samples_); }

 private:
  std::vector<double> samples_;
};

double norm2(std::span<const double> x) noexcept;
double max_abs(std::span<const double> x) noexcept;

}  // namespace fif
