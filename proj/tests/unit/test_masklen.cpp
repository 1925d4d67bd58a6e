#include <doctest.h>

#include <random>

#include "check.hpp"
#include "fif/masklen.hpp"
#include "fixtures.hpp"

using namespace fif;

TEST_CASE("count_extrema examples") {
  CHECK(count_extrema(std::vector<double>{0, 1, 0, 1, 0}) == 3);
  CHECK(count_extrema(std::vector<double>{0, 1, 2, 3}) == 0);
  CHECK(count_extrema(std::vector<double>{0, 1, 1, 0, -1, 0}) == 2);
  CHECK(count_extrema(std::vector<double>{5, 5, 5, 5}) == 0);
  CHECK(count_extrema(std::vector<double>{0, 2, 2, 2, 3}) == 0);
  CHECK(count_extrema(std::vector<double>{1, 0, 0, 1, 1, 0}) == 2);
}

TEST_CASE("mask length from extrema counts") {
  CHECK(mask_choice_from_counts(100, 10, 1.6).length == 32);
  CHECK(mask_choice_from_counts(100, 64, 1.6).length == 4);
  const auto clamped = mask_choice_from_counts(64, 2, 1.6);
  CHECK(clamped.unclamped == 102);
  CHECK(clamped.length == 31);
  CHECK_ERRC(mask_choice_from_counts(100, 1, 1.6), Errc::TooFewExtrema);
  CHECK(mask_choice_from_counts(100, 99, 0.1).length == 1);
}

TEST_CASE("mask_length_extrema on signals") {
  CHECK_ERRC(mask_length_extrema(std::vector<double>{0, 1, 2, 3}, 1.6), Errc::TooFewExtrema);
  const auto s = fixtures::tone(256, 8);
  const std::size_t k = count_extrema(s);
  CHECK(k == 16);
  CHECK(mask_length_extrema(s, 1.6) == 2 * static_cast<std::size_t>(1.6 * 256 / 16));
}

TEST_CASE("spectral strategy examples") {
  CHECK(mask_length_spectral(fixtures::tone(256, 8), 1.0) == 32);
  CHECK(mask_length_spectral(fixtures::add(fixtures::tone(256, 4), fixtures::tone(256, 32)), 1.0) == 8);
  CHECK_ERRC(mask_length_spectral(std::vector<double>(64, 3.0), 1.0), Errc::FlatSpectrum);
}

TEST_CASE("spectral strategy ignores peaks below the 1% floor") {
  const auto s = fixtures::add(fixtures::tone(512, 5), fixtures::tone(512, 100, 0.0, 0.005));
  CHECK(mask_length_spectral(s, 1.0) == 102);  // round(512 / 5)
  const auto louder = fixtures::add(fixtures::tone(512, 5), fixtures::tone(512, 100, 0.0, 0.05));
  CHECK(mask_length_spectral(louder, 1.0) == 5);  // round(512 / 100)
}

TEST_CASE("strategy validation") {
  MaskStrategy bad;
  bad.nu = 0.0;
  CHECK_ERRC(bad.validate(), Errc::InvalidConfig);
  bad.nu = -1.0;
  CHECK_ERRC(bad.validate(), Errc::InvalidConfig);
  CHECK_NOTHROW(MaskStrategy{}.validate());
}

TEST_CASE("property: extrema mask length is even before clamping and within bounds after") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 16 + rng() % 2000;
    const std::size_t k = 2 + rng() % (n - 2);
    const double nu = 0.5 + static_cast<double>(rng() % 300) / 100.0;
    const auto c = mask_choice_from_counts(n, k, nu);
    CHECK(c.unclamped % 2 == 0);
    if (static_cast<double>(k) <= nu * static_cast<double>(n)) CHECK(c.unclamped >= 2);
    CHECK(c.length >= 1);
    CHECK(c.length <= max_mask_length(n));
  }
}

TEST_CASE("property: both strategies stay within [1, (n-1)/2] on random signals") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 32 + 37 * seed;
    const auto s = fixtures::gaussian(n, seed);
    for (const auto& c : {mask_choice_extrema(s, 1.6), mask_choice_spectral(s, 1.6)}) {
      CHECK(c.length >= 1);
      CHECK(c.length <= max_mask_length(n));
    }
  }
}

TEST_CASE("nonlinearity witness: the mask of a sum differs from both parts") {
  const std::size_t n = 1024;
  const auto p = fixtures::tone(n, 10);
  const auto q = fixtures::tone(n, 50, 0.4, 0.165);
  const auto pq = fixtures::add(p, q);
  const auto lp = mask_length_extrema(p, 1.6);
  const auto lq = mask_length_extrema(q, 1.6);
  const auto lpq = mask_length_extrema(pq, 1.6);
  CHECK(lpq != lp);
  CHECK(lpq != lq);
  CHECK(lp == 162);
  CHECK(lq == 32);
  CHECK(lpq == 54);
}
