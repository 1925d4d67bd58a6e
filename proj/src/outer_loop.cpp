#include "fif/outer_loop.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "fif/error.hpp"
#include "fif/fft.hpp"

namespace fif {

namespace {
constexpr double kNegligibleRemainder = 1e-13;
}  // namespace

void OuterConfig::validate() const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw Error(Errc::InvalidConfig, "eta must be finite and >= 0");
  if (max_imfs < 1) throw Error(Errc::InvalidConfig, "max_imfs must be at least 1");
  mask_strategy.validate();
  inner.validate();
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::Trend: return "trend";
    case Termination::MaxImfs: return "max-imfs";
    case Termination::LongPeriod: return "long-period";
    case Termination::NoProgress: return "no-progress";
    case Termination::Negligible: return "negligible";
    case Termination::FilterUnavailable: return "filter-unavailable";
  }
  return "unknown";
}

DiscreteFilter inner_loop_filter(const FilterShape& shape, std::size_t mask_length, std::size_t n) {
  if (n < 5) throw Error(Errc::SupportTooLarge, "period " + std::to_string(n) + " cannot hold a self-convolved filter");
  const std::size_t h = std::max<std::size_t>(1, std::min(mask_length, (n - 1) / 4));
  return self_convolve(sample_filter(shape, h, n));
}

Decomposition decompose(const Signal& s, const OuterConfig& cfg, EigenvalueCache* cache) {
  cfg.validate();
  const std::size_t n = s.size();
  if (n < 3) throw Error(Errc::DegenerateInput, "signal needs at least 3 samples");

  Decomposition out;
  out.config = cfg;
  std::vector<double> rest(s.samples().begin(), s.samples().end());
  const double floor = kNegligibleRemainder * max_abs(rest);

  for (;;) {
    if (out.imfs.size() >= cfg.max_imfs) {
      out.termination = Termination::MaxImfs;
      break;
    }
    if (!out.imfs.empty() && max_abs(rest) <= floor) {
      out.termination = Termination::Negligible;
      break;
    }
    if (count_extrema(rest) < 2) {
      out.termination = Termination::Trend;
      break;
    }
    if (n < 5) {
      out.termination = Termination::FilterUnavailable;
      break;
    }
    const std::size_t index = out.imfs.size() + 1;
    try {
      const Signal current(rest);
      const MaskChoice choice = cfg.mask_strategy.kind == MaskKind::ExtremaCount
                                    ? mask_choice_extrema(current.samples(), cfg.mask_strategy.nu)
                                    : mask_choice_spectral(current.samples(), cfg.mask_strategy.nu);
      if (choice.unclamped > max_mask_length(n)) {
        out.termination = Termination::LongPeriod;
        break;
      }
      const DiscreteFilter filter = inner_loop_filter(cfg.filter_shape, choice.length, n);
      ImfRecord rec;
      if (cfg.inner.mode == InnerMode::Direct) {
        std::shared_ptr<const FilterEigenvalues> ev =
            cache ? cache->get_or_compute(filter) : std::make_shared<const FilterEigenvalues>(filter_eigenvalues(filter));
        rec = extract_imf_direct(current, *ev, cfg.inner);
      } else {
        rec = extract_imf_iterative(current, filter, cfg.inner);
      }
      rec.mask_length = choice.length;
      const double peak = max_abs(rec.imf.samples());
      if (peak == 0.0) {
        out.termination = Termination::NoProgress;
        break;
      }
      rec.significant = peak > cfg.eta;
      const auto imf = rec.imf.samples();
      for (std::size_t i = 0; i < n; ++i) rest[i] -= imf[i];
      out.imfs.push_back(std::move(rec));
    } catch (const Error& e) {
      throw Error(e.code(), "IMF " + std::to_string(index) + ": " + e.what());
    }
  }
  out.trend = Signal(std::move(rest));
  return out;
}

std::size_t significant_count(const Decomposition& d) noexcept {
  std::size_t count = 0;
  for (const auto& rec : d.imfs) count += rec.significant ? 1 : 0;
  return count;
}

double spectral_centroid(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const std::size_t n = x.size();
  RealFft fft(n);
  const auto spectrum = fft.forward(x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double p = bin_weight(k, n) * std::norm(spectrum[k]);
    num += p * static_cast<double>(k) / static_cast<double>(n);
    den += p;
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace fif
