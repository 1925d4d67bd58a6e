#include <doctest.h>

#include <cmath>
#include <thread>

#include "check.hpp"
#include "fif/fft.hpp"
#include "fif/outer_loop.hpp"
#include "fixtures.hpp"

using namespace fif;

namespace {

double reconstruction_error(const Decomposition& d, std::span<const double> s) {
  std::vector<double> sum(d.trend.samples().begin(), d.trend.samples().end());
  for (const auto& rec : d.imfs) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rec.imf[i];
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) worst = std::max(worst, std::abs(sum[i] - s[i]));
  return worst;
}

OuterConfig config(InnerMode mode, double eta = 0.0) {
  OuterConfig cfg;
  cfg.eta = eta;
  cfg.inner.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("constant signal gives no IMFs") {
  const std::vector<double> s(100, -4.0);
  const auto d = decompose(Signal(s), OuterConfig{});
  CHECK(d.imfs.empty());
  CHECK(d.termination == Termination::Trend);
  CHECK(std::vector<double>(d.trend.samples().begin(), d.trend.samples().end()) == s);
}

TEST_CASE("monotone signal is its own trend") {
  std::vector<double> s(300);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(static_cast<double>(i));
  const auto d = decompose(Signal(s), OuterConfig{});
  CHECK(d.imfs.empty());
  CHECK(significant_count(d) == 0);
  CHECK(std::vector<double>(d.trend.samples().begin(), d.trend.samples().end()) == s);
}

TEST_CASE("two-tone fixture separates high then low") {
  const std::size_t n = 512;
  const auto s = fixtures::two_tone(n);
  const auto high = fixtures::tone(n, 32);
  const auto low = fixtures::tone(n, 4);
  for (auto mode : {InnerMode::Direct, InnerMode::Iterative}) {
    const auto d = decompose(Signal(s), config(mode, 0.5));
    CHECK(significant_count(d) == 2);
    std::vector<const ImfRecord*> sig;
    for (const auto& rec : d.imfs) {
      if (rec.significant) sig.push_back(&rec);
    }
    REQUIRE(sig.size() == 2);
    CHECK(fixtures::pearson(sig[0]->imf.samples(), high) > 0.95);
    CHECK(fixtures::pearson(sig[1]->imf.samples(), low) > 0.95);
    for (std::size_t k = 1; k < d.imfs.size(); ++k) CHECK(d.imfs[k].mask_length >= d.imfs[k - 1].mask_length);
    CHECK(reconstruction_error(d, s) <= 1e-9 * norm2(s));
  }
}

TEST_CASE("direct and iterative decompositions agree") {
  const auto s = fixtures::two_tone(512);
  const auto a = decompose(Signal(s), config(InnerMode::Direct));
  const auto b = decompose(Signal(s), config(InnerMode::Iterative));
  REQUIRE(a.imfs.size() == b.imfs.size());
  CHECK(a.termination == b.termination);
  for (std::size_t k = 0; k < a.imfs.size(); ++k) {
    CHECK(a.imfs[k].iterations_used == b.imfs[k].iterations_used);
    CHECK(a.imfs[k].mask_length == b.imfs[k].mask_length);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(a.imfs[k].imf[i] - b.imfs[k].imf[i]) <= 1e-8);
  }
}

TEST_CASE("significance uses a strict inequality against eta") {
  const auto s = fixtures::two_tone(512);
  const auto d0 = decompose(Signal(s), config(InnerMode::Direct, 0.0));
  CHECK(significant_count(d0) == d0.imfs.size());
  const auto d10 = decompose(Signal(s), config(InnerMode::Direct, 10.0));
  CHECK(!d10.imfs.empty());
  CHECK(significant_count(d10) == 0);
  Decomposition empty;
  CHECK(significant_count(empty) == 0);
}

TEST_CASE("max_imfs cap is a reported termination") {
  OuterConfig cfg;
  cfg.max_imfs = 1;
  const auto s = fixtures::gaussian(1024, 3);
  const auto d = decompose(Signal(s), cfg);
  CHECK(d.imfs.size() == 1);
  CHECK(d.termination == Termination::MaxImfs);
  CHECK(reconstruction_error(d, s) <= 1e-9 * norm2(s));
}

TEST_CASE("short signals") {
  CHECK_ERRC(decompose(Signal({1.0, 2.0}), OuterConfig{}), Errc::DegenerateInput);
  const auto d = decompose(Signal({0.0, 1.0, 0.0, 1.0}), OuterConfig{});
  CHECK(d.termination == Termination::FilterUnavailable);
  CHECK(d.imfs.empty());
  const auto d5 = decompose(Signal({0.0, 1.0, 0.0, 1.0, 0.0, 2.0, -1.0}), OuterConfig{});
  CHECK(d5.imfs.size() <= OuterConfig{}.max_imfs);
}

TEST_CASE("spectral mask strategy decomposes the two-tone fixture") {
  OuterConfig cfg;
  cfg.eta = 0.5;
  cfg.mask_strategy.kind = MaskKind::SpectralPeak;
  const auto s = fixtures::two_tone(512);
  const auto d = decompose(Signal(s), cfg);
  CHECK(significant_count(d) >= 1);
  CHECK(reconstruction_error(d, s) <= 1e-9 * norm2(s));
}

TEST_CASE("inner-loop errors carry the IMF index") {
  OuterConfig cfg;
  cfg.filter_shape = FilterShape::tabulated({{-1.0, 0.0}, {1.0, 0.0}});
  try {
    (void)decompose(Signal(fixtures::tone(64, 8)), cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateFilter);
    CHECK(std::string(e.what()).rfind("IMF 1:", 0) == 0);
  }
}

TEST_CASE("config validation") {
  OuterConfig cfg;
  cfg.eta = -1.0;
  CHECK_ERRC(cfg.validate(), Errc::InvalidConfig);
  cfg.eta = 0.0;
  cfg.max_imfs = 0;
  CHECK_ERRC(cfg.validate(), Errc::InvalidConfig);
}

TEST_CASE("inner_loop_filter shapes") {
  const auto f = inner_loop_filter(FilterShape::triangular(), 24, 512);
  CHECK(f.doubly_convolved());
  CHECK(f.half_support() == 48);
  const auto capped = inner_loop_filter(FilterShape::triangular(), 200, 101);
  CHECK(capped.half_support() == 50);
  CHECK_ERRC(inner_loop_filter(FilterShape::triangular(), 1, 4), Errc::SupportTooLarge);
}

TEST_CASE("property: corpus reconstruction, finiteness and no fake oscillations") {
  for (const auto& entry : fixtures::corpus()) {
    CAPTURE(entry.name);
    for (auto mode : {InnerMode::Direct, InnerMode::Iterative}) {
      OuterConfig cfg = config(mode);
      const auto d = decompose(Signal(entry.samples), cfg);
      CHECK(d.imfs.size() <= cfg.max_imfs);
      CHECK(reconstruction_error(d, entry.samples) <= 1e-9 * std::max(norm2(entry.samples), 1e-300));
      std::vector<double> rest = entry.samples;
      for (const auto& rec : d.imfs) {
        RealFft fft(rest.size());
        const auto in = fft.forward(rest);
        const auto out = fft.forward(rec.imf.samples());
        for (std::size_t k = 0; k < in.size(); ++k) CHECK(std::abs(out[k]) <= std::abs(in[k]) + 1e-9);
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= rec.imf[i];
      }
    }
  }
}

TEST_CASE("frequency ordering diagnostic on a multitone input") {
  const auto s = fixtures::corpus()[1].samples;
  const auto d = decompose(Signal(s), OuterConfig{});
  std::size_t inversions = 0;
  for (std::size_t k = 1; k < d.imfs.size(); ++k) {
    const double a = spectral_centroid(d.imfs[k - 1].imf.samples());
    const double b = spectral_centroid(d.imfs[k].imf.samples());
    if (b > a + 1e-12) ++inversions;
  }
  MESSAGE("centroid inversions: " << inversions << " of " << d.imfs.size());
  CHECK(spectral_centroid(fixtures::tone(256, 16)) == doctest::Approx(16.0 / 256.0));
}

TEST_CASE("concurrent decompositions sharing a cache") {
  EigenvalueCache cache;
  const auto s = fixtures::two_tone(512);
  const auto reference = decompose(Signal(s), OuterConfig{});
  std::vector<Decomposition> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = decompose(Signal(s), OuterConfig{}, &cache); });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) {
    REQUIRE(r.imfs.size() == reference.imfs.size());
    for (std::size_t k = 0; k < r.imfs.size(); ++k) {
      CHECK(r.imfs[k].imf.vector() == reference.imfs[k].imf.vector());
    }
  }
  CHECK(cache.hits() > 0);
}
