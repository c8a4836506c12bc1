#include <doctest.h>

#include <cstring>

#include "config.hpp"
#include "test_common.hpp"
#include "units.hpp"

using namespace leonoma;
using leonoma::test::rel_err;

TEST_CASE("decibel conversions") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(db_to_linear(30.0) == doctest::Approx(1000.0).epsilon(1e-12));
  // 50 dBm = 1e5 mW = 100 W
  CHECK(dbm_to_watts(50.0) == doctest::Approx(100.0).epsilon(1e-12));

  for (double v : {-37.5, -3.0, 12.25, 61.0})
    CHECK(rel_err(linear_to_db(db_to_linear(v)), v) <= 1e-12);
  CHECK(std::fabs(linear_to_db(db_to_linear(0.0))) <= 1e-12);
}

TEST_CASE("derived constants match hand arithmetic") {
  const DerivedConstants k = test::reference_derived();

  // lambda_S = 600 / (4 pi 6871.393^2) per km^2
  CHECK(rel_err(k.density_per_m2 * 1e6, 1.0112343421291177e-06) < 1e-9);
  // L_pl = (c / (4 pi 1 GHz))^2, about 5.70e-4 m^2 with c = 3e8
  CHECK(rel_err(k.pathloss_ref, 5.70e-4) < 2e-3);
  // R_max = sqrt(6871.393^2 - 6371.393^2) km
  CHECK(k.r_max_m == doctest::Approx(2573.2067542271066e3).epsilon(1e-12));

  CHECK(k.r_min_m == k.l_min_m);
  CHECK(k.l_min_m == doctest::Approx(500e3));
  CHECK(k.l_max_m == doctest::Approx(std::sqrt(500e3 * 500e3 + 200e3 * 200e3)));
  CHECK(k.r_max_m > k.r_min_m);
  CHECK(k.l_max_m > k.l_min_m);
  CHECK(k.gain_ratio == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(k.gain_ratio > 0.0);
  CHECK(k.gain_ratio <= 1.0);
}

TEST_CASE("build_derived is pure and deterministic") {
  const SystemConfig cfg = test::reference_config();
  const DerivedConstants a = build_derived(cfg);
  const DerivedConstants b = build_derived(cfg);
  CHECK(std::memcmp(&a, &b, sizeof(DerivedConstants)) == 0);
}

TEST_CASE("normalized noise decreases with transmit power") {
  SystemConfig cfg = test::reference_config();
  double prev = build_derived(cfg).norm_noise;
  for (double p : {51.0, 55.0, 60.0, 70.0}) {
    cfg.transmit_power_dbm = p;
    const double cur = build_derived(cfg).norm_noise;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("configuration validation") {
  SystemConfig cfg = test::reference_config();

  cfg.pathloss_exponent = 1.5;
  CHECK_THROWS_AS(build_derived(cfg), ConfigError);
  cfg.pathloss_exponent = 2.0;
  CHECK_THROWS_AS(build_derived(cfg), ConfigError);
  cfg = test::reference_config();

  cfg.satellite_altitude_km = -1.0;
  CHECK_THROWS_AS(build_derived(cfg), ConfigError);
  cfg = test::reference_config();

  cfg.num_satellites = 0;
  CHECK_THROWS_AS(build_derived(cfg), ConfigError);
  cfg = test::reference_config();

  cfg.mainlobe_gain_dbi = 5.0;  // below the 10 dBi sidelobe
  CHECK_THROWS_AS(build_derived(cfg), ConfigError);
}

TEST_CASE("json round-trip and rejection of unknown keys") {
  const SystemConfig cfg = test::reference_config();
  const FadingModel fading = FadingModel::nakagami(2);
  const std::string text = system_config_to_json(cfg, fading);

  FadingModel parsed_fading;
  const SystemConfig parsed = system_config_from_json(text, &parsed_fading);
  CHECK(parsed.earth_radius_km == cfg.earth_radius_km);
  CHECK(parsed.num_satellites == cfg.num_satellites);
  CHECK(parsed.pathloss_exponent == cfg.pathloss_exponent);
  CHECK(parsed_fading.nakagami_m == 2);

  CHECK_THROWS_AS(system_config_from_json("{\"not_a_field\": 1}"), ConfigError);
  CHECK_THROWS_AS(system_config_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(system_config_from_json("{\"pathloss_exponent\": 1.5}"), ConfigError);
}

TEST_CASE("rician K to nakagami m") {
  CHECK(FadingModel::from_rician_k(0.0).nakagami_m == 1);  // Rayleigh
  // (5+1)^2 / 11 = 3.27 -> 3
  CHECK(FadingModel::from_rician_k(5.0).nakagami_m == 3);
  CHECK(FadingModel::from_rician_k(5.0).shape_kappa == 3);
  CHECK(FadingModel::from_rician_k(5.0).rate_beta == doctest::Approx(3.0));
  CHECK_THROWS_AS(FadingModel::from_rician_k(-1.0), ConfigError);
}
