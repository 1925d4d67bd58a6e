#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include "fif/filters.hpp"

namespace fif {

/// Real spectrum of the circulant operator built from a filter row, indexed by
/// DFT bin 0..n-1.
class FilterEigenvalues {
 public:
  /// Validates lambda[0] = 1 and |lambda| <= 1 within 1e-10, plus
  /// lambda >= -1e-10 when doubly_convolved. Errc::InvalidSpectrum otherwise.
  static FilterEigenvalues from_values(std::vector<double> lambdas, bool doubly_convolved);

  std::span<const double> values() const noexcept { return lambdas_; }
  std::size_t size() const noexcept { return lambdas_.size(); }
  double operator[](std::size_t j) const { return lambdas_[j]; }
  bool doubly_convolved() const noexcept { return doubly_convolved_; }

 private:
  FilterEigenvalues() = default;
  std::vector<double> lambdas_;
  bool doubly_convolved_ = false;
};

inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kUnitEigenvalueTolerance = 1e-8;

/// Eigenvalues as the DFT of the filter row. The raw DFT's imaginary parts
/// must stay below 1e-10 n (Errc::AsymmetryDetected).
FilterEigenvalues filter_eigenvalues(const DiscreteFilter& filter);

/// True iff exactly one eigenvalue lies within 1e-8 of 1. When c0_lt_1 is
/// false the uniqueness hypothesis does not apply and the check passes.
bool unique_unit_eigenvalue_check(const FilterEigenvalues& ev, bool c0_lt_1);

/// (1 - lambda_j)^N with the base clamped to [0, 1]. Errc::NegativeBase when
/// 1 - lambda leaves [-1e-8, 1 + 1e-8].
std::vector<double> damping_factors(const FilterEigenvalues& ev, std::size_t iterations);

/// 1 - (1 - gamma)^(1/N): eigenvalues at or below it are passed through whole.
double threshold_level(double gamma, std::size_t iterations);

/// mask[j] = lambda[j] <= threshold_level(gamma, N).
std::vector<bool> threshold_mask(const FilterEigenvalues& ev, double gamma, std::size_t iterations);

/// Damping factors with masked bins pinned to exactly 1.
std::vector<double> thresholded_damping_factors(const FilterEigenvalues& ev, double gamma,
                                                std::size_t iterations);

/// In-memory store of precomputed eigenvalue vectors for built-in filter
/// shapes, keyed by (shape, convolution order, half support, period).
///
/// Readers share a lock; inserts take it exclusively. Two threads missing on
/// the same key both compute, and the first insert wins.
///
/// File format (all integers and floats little-endian):
///   header:  8-byte magic "FIFEIGV\0", uint32 version (= 1), uint32 reserved,
///            uint64 record count
///   record:  uint32 kind tag, uint64 half support, uint64 n, n x float64
/// The kind tag packs the FilterKind in bits 0..7, the convolution order in
/// bits 8..15 and a doubly-convolved flag in bit 16.
class EigenvalueCache {
 public:
  struct Key {
    std::uint32_t tag = 0;
    std::uint64_t half_support = 0;
    std::uint64_t n = 0;
    auto operator<=>(const Key&) const = default;
  };

  /// Only rows sampled from built-in shapes are identified by their key.
  static bool cacheable(const DiscreteFilter& filter) noexcept;
  static Key key_for(const DiscreteFilter& filter) noexcept;

  /// Returns the cached spectrum or computes and stores it. Tabulated and
  /// externally supplied rows are computed but never stored.
  std::shared_ptr<const FilterEigenvalues> get_or_compute(const DiscreteFilter& filter);

  std::shared_ptr<const FilterEigenvalues> find(const Key& key) const;
  /// Returns false if the key was already present (the existing entry is kept).
  bool insert(const Key& key, std::shared_ptr<const FilterEigenvalues> ev);

  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;

  void save(const std::filesystem::path& path) const;
  /// Merges every record from the file. Errc::CacheFormat on a bad header or
  /// truncated record, Errc::Io when the file cannot be opened.
  void load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const FilterEigenvalues>> entries_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace fif
