// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "emfsim/channel.hpp"
#include "emfsim/exposure.hpp"
#include "emfsim/units.hpp"
#include "oracles.hpp"

using namespace emfsim;

TEST_CASE("PD from field") {
  CHECK(pd_from_field(0.0) == 0.0);
  CHECK(pd_from_field(std::sqrt(10.0 * 376.73)) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(pd_from_field(61.4) == doctest::Approx(10.007).epsilon(1e-3));
  CHECK(pd_from_field(2 * 37.0) == doctest::Approx(4 * pd_from_field(37.0)).epsilon(1e-15));
}

TEST_CASE("PD from transmitter parameters") {
  CHECK(pd_from_transmitter(1.0, 0.0, 1.0) == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(pd_from_transmitter(3.0, 7.0, 40.0) / pd_from_transmitter(3.0, 7.0, 160.0) ==
        doctest::Approx(16.0).epsilon(1e-14));

  const auto p5 = builtin_profile(Generation::FiveG);
  const auto pattern = pattern_params(p5);
  LinkGeometry g;
  g.distance_2d_m = 55.0;
  g.distance_3d_m = 55.0;
  const double eirp_dbm = 21.0 + 10.0 * std::log10(64.0) + 8.0 + 10.0 * std::log10(64.0);
  CHECK(oracle::rel_err(pd_from_link(p5, g, pattern), oracle::pd_from_eirp_dbm(eirp_dbm, 55.0)) < 1e-12);
}

TEST_CASE("point SAR") {
  TissueParams t;
  t.conductivity_s_m = 1.0;
  CHECK(sar_point(0.0, t) == 0.0);
  CHECK(sar_point(100.0, t) == doctest::Approx(10.0).epsilon(1e-15));
  TissueParams t3 = t;
  t3.conductivity_s_m = 3.0;
  CHECK(sar_point(42.0, t3) == doctest::Approx(3.0 * sar_point(42.0, t)).epsilon(1e-15));
}

TEST_CASE("boundary SAR") {
  const TissueParams t;
  CHECK(t.reflection_coefficient == 0.6);
  CHECK(t.penetration_depth_m == 1e-3);
  CHECK(t.mass_density_kg_m3 == 1000.0);
  CHECK(sar_boundary(0.0, t) == 0.0);
  CHECK(sar_boundary(10.0, t) == doctest::Approx(12.8).epsilon(1e-14));
  TissueParams clear = t;
  clear.reflection_coefficient = 0.0;
  CHECK(sar_boundary(3.5, clear) == doctest::Approx(2.0 * 3.5 / (1e-3 * 1000.0)).epsilon(1e-15));
}

TEST_CASE("boundary SAR properties") {
  RandomStream rng(8);
  const TissueParams t;
  for (int i = 0; i < 1000; ++i) {
    const double pd = rng.uniform(0.0, 50.0);
    const double a = rng.uniform(0.0, 20.0);
    CHECK(oracle::rel_err(sar_boundary(a * pd, t), a * sar_boundary(pd, t)) < 1e-14);

    const double e = rng.uniform(0.0, 200.0);
    const double direct = 2.0 * (1.0 - 0.36) * e * e / (376.73 * 1e-3 * 1000.0);
    CHECK(oracle::rel_err(sar_boundary(pd_from_field(e), t), direct) < 1e-12);
  }
  double prev = 1e300;
  for (double r = 0.0; r < 1.0; r += 0.01) {
    TissueParams tr = t;
    tr.reflection_coefficient = r;
    const double s = sar_boundary(5.0, tr);
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("SAR decreases along boresight") {
  const auto p5 = builtin_profile(Generation::FiveG);
  const auto pattern = pattern_params(p5);
  double prev = 1e300;
  for (double d = 1.0; d < 300.0; d += 1.0) {
    LinkGeometry g;
    g.distance_2d_m = d;
    g.distance_3d_m = d;
    const double s = sar_boundary(pd_from_link(p5, g, pattern), TissueParams{});
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("tissue validation") {
  TissueParams t;
  t.reflection_coefficient = 1.0;
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t = TissueParams{};
  t.penetration_depth_m = 0.0;
  CHECK_THROWS_AS(t.validate(), ConfigError);
  CHECK_NOTHROW(TissueParams{}.validate());
}

TEST_CASE("pairwise sum and estimates") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  CHECK(pairwise_sum(v) == 499500.0);
  const auto est = estimate_mean(v);
  CHECK(est.mean == 499.5);
  CHECK(est.std_error == doctest::Approx(std::sqrt(1000.0 * 1001.0 / 12.0 / 1000.0)).epsilon(1e-12));
  CHECK(std::isnan(estimate_mean(std::vector<double>{4.0}).std_error));
}

TEST_CASE("sector average") {
  const auto profile = builtin_profile(Generation::FiveG);
  const auto layout = build_layout(profile, 0);
  const auto& sector = layout[0];

  SUBCASE("constant integrand") {
    RandomStream rng(1);
    const auto est = sector_average(sector, 500, rng, [](const UeDrop&) { return 2.5; });
    CHECK(est.mean == 2.5);
    CHECK(est.std_error == 0.0);
  }
  SUBCASE("indicator of half the sector by area") {
    // The boresight axis splits the rhombus into two congruent halves.
    RandomStream rng(2);
    const double sar0 = 4.0;
    const auto est = sector_average(sector, 400000, rng,
                                    [&](const UeDrop& ue) { return ue.position.y > 0.0 ? sar0 : 0.0; });
    CHECK(std::abs(est.mean - 0.5 * sar0) < 4.0 * est.std_error);
    CHECK(est.std_error < 0.01);
  }
  SUBCASE("deterministic per seed") {
    RandomStream a(42), b(42);
    const auto ea = sector_average_sar(sector, profile, TissueParams{}, 2000, a);
    const auto eb = sector_average_sar(sector, profile, TissueParams{}, 2000, b);
    CHECK(ea.mean == eb.mean);
    CHECK(ea.std_error == eb.std_error);
    CHECK(ea.mean > 0.0);
  }
  SUBCASE("standard error shrinks as 1/sqrt(N)") {
    RandomStream a(1000), b(2000);
    const auto small = sector_average_sar(sector, profile, TissueParams{}, 20000, a);
    const auto large = sector_average_sar(sector, profile, TissueParams{}, 80000, b);
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.2));
  }
}
