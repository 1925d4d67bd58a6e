#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fif/filters.hpp"
#include "fif/inner_loop.hpp"
#include "fif/masklen.hpp"
#include "fif/signal.hpp"
#include "fif/spectrum.hpp"

namespace fif {

struct OuterConfig {
  double eta = 0.0;  // significance threshold on max |imf|
  std::size_t max_imfs = 50;
  MaskStrategy mask_strategy;
  InnerConfig inner;
  FilterShape filter_shape = FilterShape::triangular();

  void validate() const;
};

enum class Termination {
  Trend,             // remainder has fewer than two interior extrema
  MaxImfs,           // cap reached
  LongPeriod,        // remainder oscillates slower than the longest admissible mask
  NoProgress,        // extracted IMF was identically zero
  Negligible,        // remainder is at roundoff level relative to the input
  FilterUnavailable  // signal too short to hold a self-convolved filter
};

std::string_view to_string(Termination t) noexcept;

struct Decomposition {
  std::vector<ImfRecord> imfs;
  Signal trend;
  OuterConfig config;
  Termination termination = Termination::Trend;
};

/// Filter used for an inner loop with mask length l on a period-n signal: the
/// configured shape sampled with half support min(l, (n-1)/4), then
/// self-convolved. Errc::SupportTooLarge when n < 5.
DiscreteFilter inner_loop_filter(const FilterShape& shape, std::size_t mask_length, std::size_t n);

/// Full decomposition of s into IMFs plus trend. sum(imfs) + trend == s up to
/// roundoff. Inner-loop errors are rethrown with the IMF index prepended.
Decomposition decompose(const Signal& s, const OuterConfig& cfg, EigenvalueCache* cache = nullptr);

std::size_t significant_count(const Decomposition& d) noexcept;

/// Power-weighted mean frequency in cycles per sample over bins 0..n/2.
double spectral_centroid(std::span<const double> x);

}  // namespace fif
