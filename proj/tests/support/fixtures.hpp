#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fif/signal.hpp"

namespace fixtures {

inline std::vector<double> tone(std::size_t n, double cycles, double phase = 0.0, double amplitude = 1.0) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = amplitude * std::sin(2.0 * std::numbers::pi * cycles * static_cast<double>(i) / static_cast<double>(n) + phase);
  }
  return s;
}

inline std::vector<double> add(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline std::vector<double> two_tone(std::size_t n = 512) { return add(tone(n, 4), tone(n, 32)); }

inline std::vector<double> gaussian(std::size_t n, std::uint64_t seed, double sigma = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  std::vector<double> s(n);
  for (double& v : s) v = dist(rng);
  return s;
}

inline double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return (saa == 0.0 || sbb == 0.0) ? 0.0 : sab / std::sqrt(saa * sbb);
}

struct CorpusEntry {
  std::string name;
  std::vector<double> samples;
};

// Signals every decomposition property is checked against.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"two-tone-512", two_tone(512)});
  out.push_back({"three-tone-1024", add(add(tone(1024, 3, 0.3), tone(1024, 40, 1.1, 0.5)), tone(1024, 150, 2.0, 0.25))});
  out.push_back({"white-noise-4096", gaussian(4096, 20240917)});
  {
    std::vector<double> s(1000);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double t = static_cast<double>(i) / 1000.0;
      s[i] = std::sin(2.0 * std::numbers::pi * (5.0 * t + 40.0 * t * t));
    }
    out.push_back({"chirp-1000", s});
  }
  {
    auto s = tone(777, 30);
    const auto env = tone(777, 2, 0.0, 0.5);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= 1.0 + env[i];
    out.push_back({"am-777", s});
  }
  {
    std::vector<double> s(256);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = ((i / 16) % 2 == 0) ? 1.0 : -1.0;
    out.push_back({"square-256", s});
  }
  {
    auto s = tone(600, 12);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += 0.01 * static_cast<double>(i);
    out.push_back({"tone-plus-ramp-600", s});
  }
  {
    std::vector<double> s(300);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::log1p(static_cast<double>(i));
    out.push_back({"monotone-300", s});
  }
  out.push_back({"constant-64", std::vector<double>(64, 2.5)});
  {
    std::vector<double> s(128, 0.0);
    s[40] = 1.0;
    out.push_back({"impulse-128", s});
  }
  out.push_back({"noisy-tone-2048", add(tone(2048, 17), gaussian(2048, 7, 0.2))});
  out.push_back({"short-9", {0.0, 1.0, -1.0, 2.0, 0.5, -0.5, 1.5, 0.0, 1.0}});
  return out;
}

}  // namespace fixtures
