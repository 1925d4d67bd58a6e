#include "fif/inner_loop.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "fif/error.hpp"
#include "fif/fft.hpp"

namespace fif {

namespace {

using cplx = std::complex<double>;

void require_period(std::size_t signal_size, std::size_t operator_size) {
  if (signal_size != operator_size) {
    throw Error(Errc::LengthMismatch, "signal length " + std::to_string(signal_size) +
                                          " does not match operator size " + std::to_string(operator_size));
  }
}

// out = in - W in, summing over the nonzero band of the circulant row.
void window_step(std::span<const double> in, std::span<double> out, const DiscreteFilter& filter) {
  const std::size_t n = in.size();
  const auto w = filter.weights();
  const std::size_t h = filter.half_support();
  // With h == n/2 the offsets +h and -h hit the same sample; count it once.
  const std::size_t paired = (2 * h == n) ? h - 1 : h;
  const double w_mid = (2 * h == n && h > 0) ? w[h] : 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    double acc = w[0] * in[i];
    if (i >= paired && i + paired < n) {
      const double* center = in.data() + i;
      for (std::size_t k = 1; k <= paired; ++k) acc += w[k] * (center[k] + center[-static_cast<long>(k)]);
    } else {
      for (std::size_t k = 1; k <= paired; ++k) acc += w[k] * (in[(i + k) % n] + in[(i + n - k) % n]);
    }
    if (w_mid != 0.0) acc += w_mid * in[(i + h) % n];
    out[i] = in[i] - acc;
  }
}

// Repeated application of s - W s, by window summation for narrow filters
// and by spectral multiplication once the window outgrows an FFT.
class Stepper {
 public:
  explicit Stepper(const DiscreteFilter& filter) : filter_(filter) {
    const std::size_t n = filter.period();
    const double fft_cost = 5.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
    if (static_cast<double>(filter.half_support()) > fft_cost) {
      fft_.emplace(n);
      const auto spectrum = fft_->forward(filter.weights());
      gain_.resize(spectrum.size());
      for (std::size_t k = 0; k < spectrum.size(); ++k) gain_[k] = spectrum[k].real();
      scratch_.resize(spectrum.size());
      averaged_.resize(n);
    }
  }

  void operator()(std::span<const double> in, std::span<double> out) {
    if (!fft_) {
      window_step(in, out, filter_);
      return;
    }
    fft_->forward(in, scratch_);
    for (std::size_t k = 0; k < scratch_.size(); ++k) scratch_[k] *= gain_[k];
    fft_->inverse(scratch_, averaged_);
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] - averaged_[i];
  }

 private:
  const DiscreteFilter& filter_;
  std::optional<RealFft> fft_;
  std::vector<double> gain_;
  std::vector<cplx> scratch_;
  std::vector<double> averaged_;
};

double diff_norm(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

// Per-bin data for the frequency-domain inner loop over the half spectrum.
struct SpectralState {
  std::size_t n = 0;
  std::vector<cplx> sigma;      // DFT(s), bins 0..n/2
  std::vector<double> energy;   // multiplicity * |sigma_k|^2
  std::vector<double> lambda;   // eigenvalue per half-spectrum bin
  std::vector<double> log_base; // log(1 - lambda), -inf where the base is 0
};

double checked_base(double lambda, std::size_t bin) {
  const double base = 1.0 - lambda;
  if (base < -kUnitEigenvalueTolerance || base > 1.0 + kUnitEigenvalueTolerance) {
    throw Error(Errc::NegativeBase,
                "1 - lambda = " + std::to_string(base) + " at bin " + std::to_string(bin) + " is outside [0, 1]");
  }
  return std::clamp(base, 0.0, 1.0);
}

SpectralState prepare(std::span<const double> s, const FilterEigenvalues& ev, RealFft& fft) {
  SpectralState st;
  st.n = s.size();
  st.sigma = fft.forward(s);
  const std::size_t bins = st.sigma.size();
  st.energy.resize(bins);
  st.lambda.resize(bins);
  st.log_base.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    st.energy[k] = bin_weight(k, st.n) * std::norm(st.sigma[k]);
    if (!std::isfinite(st.energy[k])) throw Error(Errc::Overflow, "signal energy overflows double precision");
    st.lambda[k] = ev[k];
    const double base = checked_base(ev[k], k);
    st.log_base[k] = base > 0.0 ? std::log(base) : -std::numeric_limits<double>::infinity();
  }
  for (std::size_t k = bins; k < st.n; ++k) (void)checked_base(ev[k], k);
  return st;
}

// (1 - lambda)^N from the cached logarithm; 0^0 = 1.
double power_factor(double log_base, std::size_t iterations) {
  if (iterations == 0) return 1.0;
  return std::exp(log_base * static_cast<double>(iterations));
}

struct Probe {
  double sd = 0.0;
  double norm_sq = 0.0;  // |(I-W)^N s|^2 times n (Parseval scale)
};

Probe probe(const SpectralState& st, std::size_t iterations, const std::optional<double>& gamma) {
  const double level = gamma ? threshold_level(*gamma, iterations) : -1.0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < st.energy.size(); ++k) {
    const double e = st.energy[k];
    if (e == 0.0) continue;
    if (gamma && st.lambda[k] <= level) {
      den += e;  // pinned: factor 1 at N and N+1, no contribution to the step
      continue;
    }
    const double g = power_factor(st.log_base[k], iterations);
    if (g == 0.0) continue;
    const double step = g * (1.0 - std::exp(st.log_base[k]));  // g(N) - g(N+1)
    num += e * step * step;
    den += e * g * g;
  }
  Probe p;
  p.norm_sq = den;
  p.sd = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return p;
}

// Full-length factor for bin j, honoring the threshold pin.
double factor_at(const FilterEigenvalues& ev, std::size_t j, std::size_t iterations,
                 const std::optional<double>& gamma, double level) {
  if (gamma && ev[j] <= level) return 1.0;
  return std::pow(std::clamp(1.0 - ev[j], 0.0, 1.0), static_cast<double>(iterations));
}

// IDFT(g * sigma), checking that the discarded imaginary part is negligible.
std::vector<double> synthesize(const SpectralState& st, const FilterEigenvalues& ev, std::size_t iterations,
                               const std::optional<double>& gamma, double signal_norm, RealFft& fft) {
  const std::size_t n = st.n;
  const double level = gamma ? threshold_level(*gamma, std::max<std::size_t>(iterations, 1)) : -1.0;
  std::vector<cplx> shaped(st.sigma.size());
  double imag_sq = 0.0;
  for (std::size_t k = 0; k < st.sigma.size(); ++k) {
    const double g = factor_at(ev, k, iterations, gamma, level);
    shaped[k] = g * st.sigma[k];
    if (k > 0 && 2 * k != n) {
      const double mirror = factor_at(ev, n - k, iterations, gamma, level);
      imag_sq += 2.0 * std::norm(st.sigma[k] * (0.5 * (g - mirror)));
    }
  }
  const double imag_norm = std::sqrt(imag_sq / static_cast<double>(n));
  if (imag_norm > 1e-8 * signal_norm) {
    throw Error(Errc::ResidualImaginary,
                "inverse DFT has imaginary residue " + std::to_string(imag_norm) + "; eigenvalues are not symmetric");
  }
  return fft.inverse(shaped);
}

}  // namespace

void InnerConfig::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(Errc::InvalidConfig, "delta must be positive");
  if (max_iterations < 1) throw Error(Errc::InvalidConfig, "max_iterations must be at least 1");
  if (gamma) {
    if (!(*gamma > 0.0 && *gamma < 1.0)) throw Error(Errc::InvalidConfig, "gamma must lie in (0, 1)");
    if (mode != InnerMode::Direct) {
      throw Error(Errc::InvalidConfig, "gamma threshold mode requires the direct inner loop");
    }
  }
}

std::vector<double> dif_step(std::span<const double> s, const DiscreteFilter& filter, ConvolutionMethod method) {
  require_period(s.size(), filter.period());
  std::vector<double> out(s.size());
  if (method == ConvolutionMethod::Window) {
    window_step(s, out, filter);
    return out;
  }
  RealFft fft(s.size());
  auto sigma = fft.forward(s);
  const auto weights = fft.forward(filter.weights());
  for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] *= weights[k].real();
  const auto averaged = fft.inverse(sigma);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] - averaged[i];
  return out;
}

std::vector<double> apply_iterative(std::span<const double> s, const DiscreteFilter& filter,
                                    std::size_t iterations) {
  require_period(s.size(), filter.period());
  std::vector<double> cur(s.begin(), s.end());
  std::vector<double> next(s.size());
  for (std::size_t m = 0; m < iterations; ++m) {
    window_step(cur, next, filter);
    cur.swap(next);
  }
  return cur;
}

std::vector<double> apply_direct(std::span<const double> s, const FilterEigenvalues& ev, std::size_t iterations) {
  require_period(s.size(), ev.size());
  RealFft fft(s.size());
  const auto st = prepare(s, ev, fft);
  return synthesize(st, ev, iterations, std::nullopt, norm2(s), fft);
}

ImfRecord extract_imf_iterative(const Signal& s, const DiscreteFilter& filter, const InnerConfig& cfg) {
  cfg.validate();
  if (cfg.gamma) throw Error(Errc::InvalidConfig, "gamma threshold mode requires the direct inner loop");
  require_period(s.size(), filter.period());

  const std::size_t n = s.size();
  std::vector<double> cur(n);
  std::vector<double> next(n);
  Stepper step(filter);
  step(s.samples(), cur);

  ImfRecord rec;
  for (std::size_t iteration = 1;; ++iteration) {
    const double norm = norm2(cur);
    if (!std::isfinite(norm)) throw Error(Errc::Overflow, "iterate norm overflows double precision");
    if (norm == 0.0) {
      rec.imf = Signal::zeros(n);
      rec.iterations_used = iteration;
      rec.final_sd = 0.0;
      rec.averaged_out = true;
      rec.significant = false;
      return rec;
    }
    step(cur, next);
    const double sd = diff_norm(next, cur) / norm;
    if (sd < cfg.delta || iteration >= cfg.max_iterations) {
      rec.iterations_used = iteration;
      rec.final_sd = sd;
      rec.significant = max_abs(cur) > 0.0;
      rec.imf = Signal(std::move(cur));
      return rec;
    }
    cur.swap(next);
  }
}

ImfRecord extract_imf_direct(const Signal& s, const FilterEigenvalues& ev, const InnerConfig& cfg) {
  cfg.validate();
  require_period(s.size(), ev.size());
  const std::size_t n = s.size();
  RealFft fft(n);
  const auto st = prepare(s.samples(), ev, fft);

  const auto satisfied = [&](const Probe& p) { return p.norm_sq == 0.0 || p.sd < cfg.delta; };

  // Doubling bracket: SD(lo) >= delta, SD(hi) < delta (or hi is the cap).
  std::size_t lo = 0;
  std::size_t hi = 1;
  Probe at_hi = probe(st, hi, cfg.gamma);
  while (!satisfied(at_hi) && hi < cfg.max_iterations) {
    lo = hi;
    hi = std::min(2 * hi, cfg.max_iterations);
    at_hi = probe(st, hi, cfg.gamma);
  }
  if (satisfied(at_hi)) {
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const Probe p = probe(st, mid, cfg.gamma);
      if (satisfied(p)) {
        hi = mid;
        at_hi = p;
      } else {
        lo = mid;
      }
    }
  }

  ImfRecord rec;
  rec.iterations_used = hi;
  if (at_hi.norm_sq == 0.0) {
    rec.imf = Signal::zeros(n);
    rec.final_sd = 0.0;
    rec.averaged_out = true;
    rec.significant = false;
    return rec;
  }
  rec.final_sd = at_hi.sd;
  auto imf = synthesize(st, ev, hi, cfg.gamma, norm2(s.samples()), fft);
  rec.significant = max_abs(imf) > 0.0;
  rec.imf = Signal(std::move(imf));
  return rec;
}

double n0_sequence(std::size_t n) noexcept {
  const double x = static_cast<double>(n);
  return std::exp(x * std::log1p(-1.0 / (x + 1.0))) / (x + 1.0);
}

std::size_t n0_from_rhs(double rhs) {
  if (!(rhs > 0.0)) throw Error(Errc::InvalidConfig, "stopping bound needs a positive right-hand side");
  constexpr std::size_t kLimit = 1'000'000'000;
  if (n0_sequence(kLimit) >= rhs) {
    throw Error(Errc::BoundOverflow, "required iteration count exceeds 1e9");
  }
  std::size_t lo = 0;  // n0_sequence(lo) >= rhs, with lo = 0 as a sentinel
  std::size_t hi = 1;
  while (n0_sequence(hi) >= rhs) {
    lo = hi;
    hi = std::min(2 * hi, kLimit);
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (n0_sequence(mid) < rhs) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::size_t n0_bound(const Signal& s, const FilterEigenvalues& ev, double delta_abs) {
  require_period(s.size(), ev.size());
  if (!(delta_abs > 0.0)) throw Error(Errc::InvalidConfig, "delta must be positive");
  const std::size_t n = s.size();
  if (n < 2 || norm2(s.samples()) == 0.0) throw Error(Errc::DegenerateInput, "stopping bound needs a nonzero signal");
  RealFft fft(n);
  const auto sigma = fft.forward(s.samples());
  double peak = 0.0;
  for (const auto& c : sigma) peak = std::max(peak, std::abs(c));
  const double unitary_peak = peak / std::sqrt(static_cast<double>(n));
  const double rhs = delta_abs / (unitary_peak * std::sqrt(static_cast<double>(n - 1)));
  return n0_from_rhs(rhs);
}

}  // namespace fif
