// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "emfsim/antenna.hpp"
#include "emfsim/random.hpp"

using namespace emfsim;

TEST_CASE("attenuation examples") {
  const auto p5 = pattern_params(builtin_profile(Generation::FiveG));
  CHECK(attenuation_db(p5, 0.0, 0.0) == 0.0);
  // 12 (32.5 / 65)^2 = 3
  CHECK(attenuation_db(p5, 32.5, 0.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(attenuation_db(p5, 180.0, 0.0) == 30.0);
  // Combined cap: 12 (50/65)^2 + 12 (50/65)^2 = 14.2 dB, uncapped.
  CHECK(attenuation_db(p5, 50.0, 50.0) == doctest::Approx(2 * 12.0 * (50.0 / 65.0) * (50.0 / 65.0)));
  CHECK(attenuation_db(p5, 120.0, 80.0) == 30.0);
}

TEST_CASE("gain examples") {
  const auto p5 = pattern_params(builtin_profile(Generation::FiveG));
  CHECK(gain_dbi(p5, 0.0, 0.0) == doctest::Approx(8.0 + 10.0 * std::log10(64.0)).epsilon(1e-14));
  CHECK(gain_dbi(p5, 0.0, 0.0) == doctest::Approx(26.0618).epsilon(1e-5));
  CHECK(gain_dbi(p5, 180.0, 0.0) == doctest::Approx(-3.9382).epsilon(1e-4));
  CHECK(gain_dbi(p5, 0.0, 0.0) - gain_dbi(p5, 65.0 / 2.0, 0.0) == doctest::Approx(3.0).epsilon(1e-14));

  const auto p4 = pattern_params(builtin_profile(Generation::FourG));
  CHECK(p4.g_max_dbi == doctest::Approx(8.0 + 10.0 * std::log10(4.0)));

  const auto p39 = pattern_params(builtin_profile(Generation::ThreePointNineG));
  for (double az : {-179.0, -90.0, 0.0, 45.0, 120.0, 180.0}) CHECK(gain_dbi(p39, az, 0.0) == 17.0);
  // Elevation still shapes the 3.9G pattern: 12 (17.5 / 35)^2 = 3 dB.
  CHECK(gain_dbi(p39, 0.0, 17.5) == doctest::Approx(14.0));
  CHECK(gain_dbi(p39, 0.0, 90.0) == doctest::Approx(17.0 - 23.0));
}

TEST_CASE("literal beamwidth reading puts the 3 dB point at the stated angle") {
  auto profile = builtin_profile(Generation::FiveG);
  profile.beamwidth_reading = BeamwidthReading::Literal;
  const auto p = pattern_params(profile);
  CHECK(attenuation_db(p, 65.0, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("attenuation properties over random angles") {
  const auto p5 = pattern_params(builtin_profile(Generation::FiveG));
  RandomStream rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double az = rng.uniform(-180.0, 180.0);
    const double el = rng.uniform(-90.0, 90.0);
    const double a = attenuation_db(p5, az, el);
    CHECK(a >= 0.0);
    CHECK(a <= p5.a_m_db);
    CHECK(attenuation_db(p5, -az, el) == a);
    CHECK(attenuation_db(p5, az, -el) == a);
  }
  for (double el : {0.0, 10.0, 30.0}) {
    double prev = -1.0;
    for (double az = 0.0; az <= 180.0; az += 0.5) {
      const double a = attenuation_db(p5, az, el);
      CHECK(a >= prev);
      prev = a;
    }
  }
}

TEST_CASE("pattern validation") {
  PatternParams p;
  p.a_m_db = 70.0;
  CHECK_THROWS(p.validate());
  p = PatternParams{};
  p.az_3db_deg = 0.0;
  CHECK_THROWS(p.validate());
  CHECK_NOTHROW(pattern_params(builtin_profile(Generation::ThreePointNineG)).validate());
}
