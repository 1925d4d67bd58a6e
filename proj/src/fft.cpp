#include "fif/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <new>
#include <utility>

#include "fif/error.hpp"

namespace fif {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n == 0) throw Error(Errc::DegenerateInput, "FFT length must be positive");
  real_ = fftw_alloc_real(n);
  complex_ = fftw_alloc_complex(n / 2 + 1);
  if (real_ == nullptr || complex_ == nullptr) {
    release();
    throw std::bad_alloc();
  }
  auto* spec = static_cast<fftw_complex*>(complex_);
  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_, spec, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, real_, FFTW_ESTIMATE);
}

RealFft::~RealFft() { release(); }

RealFft::RealFft(RealFft&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      real_(std::exchange(other.real_, nullptr)),
      complex_(std::exchange(other.complex_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      inverse_plan_(std::exchange(other.inverse_plan_, nullptr)) {}

RealFft& RealFft::operator=(RealFft&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    real_ = std::exchange(other.real_, nullptr);
    complex_ = std::exchange(other.complex_, nullptr);
    forward_plan_ = std::exchange(other.forward_plan_, nullptr);
    inverse_plan_ = std::exchange(other.inverse_plan_, nullptr);
  }
  return *this;
}

void RealFft::release() noexcept {
  {
    std::lock_guard lock(planner_mutex());
    if (forward_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    if (inverse_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  }
  forward_plan_ = inverse_plan_ = nullptr;
  if (real_ != nullptr) fftw_free(real_);
  if (complex_ != nullptr) fftw_free(complex_);
  real_ = nullptr;
  complex_ = nullptr;
}

void RealFft::forward(std::span<const double> x, std::span<std::complex<double>> out) {
  if (x.size() != n_ || out.size() != bins()) {
    throw Error(Errc::LengthMismatch, "RealFft::forward: buffer size mismatch");
  }
  std::copy(x.begin(), x.end(), real_);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  std::memcpy(out.data(), complex_, bins() * sizeof(fftw_complex));
}

std::vector<std::complex<double>> RealFft::forward(std::span<const double> x) {
  std::vector<std::complex<double>> out(bins());
  forward(x, out);
  return out;
}

void RealFft::inverse(std::span<const std::complex<double>> spectrum, std::span<double> out) {
  if (spectrum.size() != bins() || out.size() != n_) {
    throw Error(Errc::LengthMismatch, "RealFft::inverse: buffer size mismatch");
  }
  // c2r destroys its input, so it always works on the owned copy.
  std::memcpy(complex_, spectrum.data(), bins() * sizeof(fftw_complex));
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * scale;
}

std::vector<double> RealFft::inverse(std::span<const std::complex<double>> spectrum) {
  std::vector<double> out(n_);
  inverse(spectrum, out);
  return out;
}

}  // namespace fif
