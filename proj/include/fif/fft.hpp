#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fif {

/// Real-to-complex DFT of fixed length backed by FFTW.
///
/// forward() computes X[k] = sum_j x[j] exp(-2 pi i j k / n) for k = 0..n/2
/// (the remaining bins follow from Hermitian symmetry). inverse() is the
/// normalized inverse, so inverse(forward(x)) == x up to roundoff.
///
/// Plans are created under a process-wide lock; a single RealFft instance owns
/// scratch buffers and must not be used from two threads at once.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  RealFft(RealFft&& other) noexcept;
  RealFft& operator=(RealFft&& other) noexcept;

  std::size_t size() const noexcept { return n_; }
  std::size_t bins() const noexcept { return n_ / 2 + 1; }

  void forward(std::span<const double> x, std::span<std::complex<double>> out);
  std::vector<std::complex<double>> forward(std::span<const double> x);

  void inverse(std::span<const std::complex<double>> spectrum, std::span<double> out);
  std::vector<double> inverse(std::span<const std::complex<double>> spectrum);

 private:
  void release() noexcept;

  std::size_t n_ = 0;
  double* real_ = nullptr;
  void* complex_ = nullptr;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
};

/// Multiplicity of half-spectrum bin k in the full length-n spectrum
/// (1 for DC and, when n is even, Nyquist; 2 otherwise). Used for Parseval sums.
inline double bin_weight(std::size_t k, std::size_t n) noexcept {
  return (k == 0 || 2 * k == n) ? 1.0 : 2.0;
}

}  // namespace fif
