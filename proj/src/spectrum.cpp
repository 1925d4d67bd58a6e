#include "fif/spectrum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <string>

#include "fif/error.hpp"
#include "fif/fft.hpp"

namespace fif {

FilterEigenvalues FilterEigenvalues::from_values(std::vector<double> lambdas, bool doubly_convolved) {
  if (lambdas.empty()) throw Error(Errc::InvalidSpectrum, "empty eigenvalue vector");
  if (!(std::abs(lambdas[0] - 1.0) <= kSpectrumTolerance)) {
    throw Error(Errc::InvalidSpectrum, "lambda[0] = " + std::to_string(lambdas[0]) + ", expected 1");
  }
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const double v = lambdas[j];
    if (!std::isfinite(v) || std::abs(v) > 1.0 + kSpectrumTolerance) {
      throw Error(Errc::InvalidSpectrum, "eigenvalue " + std::to_string(j) + " outside [-1, 1]");
    }
    if (doubly_convolved && v < -kSpectrumTolerance) {
      throw Error(Errc::InvalidSpectrum,
                  "negative eigenvalue " + std::to_string(v) + " for a doubly convolved filter");
    }
  }
  FilterEigenvalues ev;
  ev.lambdas_ = std::move(lambdas);
  ev.doubly_convolved_ = doubly_convolved;
  return ev;
}

FilterEigenvalues filter_eigenvalues(const DiscreteFilter& filter) {
  const std::size_t n = filter.period();
  RealFft fft(n);
  const auto spectrum = fft.forward(filter.weights());
  const double imag_tol = kSpectrumTolerance * static_cast<double>(n);
  std::vector<double> lambdas(n);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    if (std::abs(spectrum[k].imag()) > imag_tol) {
      throw Error(Errc::AsymmetryDetected,
                  "imaginary eigenvalue residue " + std::to_string(spectrum[k].imag()) + " at bin " +
                      std::to_string(k));
    }
    lambdas[k] = spectrum[k].real();
    if (k > 0) lambdas[n - k] = spectrum[k].real();
  }
  return FilterEigenvalues::from_values(std::move(lambdas), filter.doubly_convolved());
}

bool unique_unit_eigenvalue_check(const FilterEigenvalues& ev, bool c0_lt_1) {
  if (!c0_lt_1) return true;
  std::size_t near_one = 0;
  for (double v : ev.values()) {
    if (std::abs(v - 1.0) <= kUnitEigenvalueTolerance) ++near_one;
  }
  return near_one == 1;
}

std::vector<double> damping_factors(const FilterEigenvalues& ev, std::size_t iterations) {
  std::vector<double> out(ev.size());
  const double exponent = static_cast<double>(iterations);
  for (std::size_t j = 0; j < ev.size(); ++j) {
    const double base = 1.0 - ev[j];
    if (base < -kUnitEigenvalueTolerance || base > 1.0 + kUnitEigenvalueTolerance) {
      throw Error(Errc::NegativeBase, "1 - lambda = " + std::to_string(base) + " at bin " +
                                          std::to_string(j) + " is outside [0, 1]");
    }
    out[j] = std::pow(std::clamp(base, 0.0, 1.0), exponent);
  }
  return out;
}

double threshold_level(double gamma, std::size_t iterations) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(Errc::InvalidConfig, "gamma must lie in (0, 1)");
  if (iterations < 1) throw Error(Errc::InvalidConfig, "threshold needs N >= 1");
  return -std::expm1(std::log1p(-gamma) / static_cast<double>(iterations));
}

std::vector<bool> threshold_mask(const FilterEigenvalues& ev, double gamma, std::size_t iterations) {
  const double level = threshold_level(gamma, iterations);
  std::vector<bool> mask(ev.size());
  for (std::size_t j = 0; j < ev.size(); ++j) mask[j] = ev[j] <= level;
  return mask;
}

std::vector<double> thresholded_damping_factors(const FilterEigenvalues& ev, double gamma,
                                                std::size_t iterations) {
  auto factors = damping_factors(ev, iterations);
  const auto mask = threshold_mask(ev, gamma, iterations);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (mask[j]) factors[j] = 1.0;
  }
  return factors;
}

// ---------------------------------------------------------------------------
// EigenvalueCache

namespace {

constexpr std::array<char, 8> kCacheMagic = {'F', 'I', 'F', 'E', 'I', 'G', 'V', '\0'};
constexpr std::uint32_t kCacheVersion = 1;
constexpr std::uint32_t kDoublyFlag = 1u << 16;

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw Error(Errc::CacheFormat, "truncated eigenvalue cache file");
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(bytes[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

}  // namespace

bool EigenvalueCache::cacheable(const DiscreteFilter& filter) noexcept { return filter.builtin_source(); }

EigenvalueCache::Key EigenvalueCache::key_for(const DiscreteFilter& filter) noexcept {
  std::uint32_t tag = static_cast<std::uint32_t>(filter.source_kind()) & 0xffu;
  tag |= (filter.convolution_order() & 0xffu) << 8;
  if (filter.doubly_convolved()) tag |= kDoublyFlag;
  return {tag, filter.half_support(), filter.period()};
}

std::shared_ptr<const FilterEigenvalues> EigenvalueCache::find(const Key& key) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : it->second;
}

bool EigenvalueCache::insert(const Key& key, std::shared_ptr<const FilterEigenvalues> ev) {
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, std::move(ev)).second;
}

std::shared_ptr<const FilterEigenvalues> EigenvalueCache::get_or_compute(const DiscreteFilter& filter) {
  if (!cacheable(filter)) {
    return std::make_shared<const FilterEigenvalues>(filter_eigenvalues(filter));
  }
  const Key key = key_for(filter);
  if (auto hit = find(key)) {
    ++hits_;
    return hit;
  }
  ++misses_;
  auto computed = std::make_shared<const FilterEigenvalues>(filter_eigenvalues(filter));
  insert(key, computed);
  return find(key);
}

std::size_t EigenvalueCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::size_t EigenvalueCache::hits() const { return hits_.load(); }
std::size_t EigenvalueCache::misses() const { return misses_.load(); }

void EigenvalueCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write eigenvalue cache " + path.string());
  std::shared_lock lock(mutex_);
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_le<std::uint32_t>(out, kCacheVersion);
  put_le<std::uint32_t>(out, 0);
  put_le<std::uint64_t>(out, entries_.size());
  for (const auto& [key, ev] : entries_) {
    put_le<std::uint32_t>(out, key.tag);
    put_le<std::uint64_t>(out, key.half_support);
    put_le<std::uint64_t>(out, key.n);
    for (double v : ev->values()) put_le<double>(out, v);
  }
  if (!out) throw Error(Errc::Io, "failed writing eigenvalue cache " + path.string());
}

void EigenvalueCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open eigenvalue cache " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kCacheMagic) throw Error(Errc::CacheFormat, "not an eigenvalue cache file");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kCacheVersion) {
    throw Error(Errc::CacheFormat, "unsupported cache version " + std::to_string(version));
  }
  (void)get_le<std::uint32_t>(in);
  const auto count = get_le<std::uint64_t>(in);
  for (std::uint64_t r = 0; r < count; ++r) {
    Key key;
    key.tag = get_le<std::uint32_t>(in);
    key.half_support = get_le<std::uint64_t>(in);
    key.n = get_le<std::uint64_t>(in);
    if (key.n == 0 || key.n > (std::uint64_t{1} << 32)) {
      throw Error(Errc::CacheFormat, "implausible record length in eigenvalue cache");
    }
    std::vector<double> lambdas(key.n);
    for (auto& v : lambdas) v = get_le<double>(in);
    auto ev = FilterEigenvalues::from_values(std::move(lambdas), (key.tag & kDoublyFlag) != 0);
    insert(key, std::make_shared<const FilterEigenvalues>(std::move(ev)));
  }
}

}  // namespace fif
