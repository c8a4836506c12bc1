#ifndef LEONOMA_CONFIG_HPP
#define LEONOMA_CONFIG_HPP

#include <string>

#include "errors.hpp"

namespace leonoma {

// User-facing network parameters, in user units (km / dBm / dBi / Hz).
struct SystemConfig {
  double earth_radius_km = 6371.393;
  double satellite_altitude_km = 500.0;
  int num_satellites = 600;
  double serving_radius_km = 200.0;
  double transmit_power_dbm = 50.0;
  double mainlobe_gain_dbi = 30.0;
  double sidelobe_gain_dbi = 10.0;
  double noise_power_dbm = -110.0;
  double carrier_frequency_hz = 1e9;
  double bandwidth_hz = 100e6;
  double pathloss_exponent = 2.0 + 1e-12;
};

// Small-scale fading: Nakagami-m amplitude, Gamma-distributed power with
// shape kappa and rate beta; m = kappa = beta and unit mean power.
struct FadingModel {
  int shape_kappa = 2;
  double rate_beta = 2.0;
  int nakagami_m = 2;
  double mean_power_omega = 1.0;

  static FadingModel nakagami(int m);
  // m = (K+1)^2 / (2K+1), rounded to the nearest positive integer so the
  // Gamma CCDF keeps its finite-sum form.
  static FadingModel from_rician_k(double k_factor);
};

// Everything the analytic and simulation paths consume, in SI units.
struct DerivedConstants {
  double earth_radius_m = 0.0;
  double orbit_radius_m = 0.0;     // R_S = R_E + H_S
  double serving_radius_m = 0.0;   // R_T
  double density_per_m2 = 0.0;     // lambda_S = N_S / (4 pi R_S^2)
  double pathloss_ref = 0.0;       // L_pl = (c / (4 pi f_c))^2
  double norm_noise = 0.0;         // sigma_bar^2 = sigma^2 / (L_pl P)
  double l_min_m = 0.0;            // serving-link bounds
  double l_max_m = 0.0;
  double r_min_m = 0.0;            // interferer bounds
  double r_max_m = 0.0;
  double gain_ratio = 0.0;         // G_sl / G_ml, linear
  double pathloss_exponent = 0.0;
  int num_satellites = 0;
  double bandwidth_hz = 0.0;
  // lambda_S * pi * R_S / R_E; the cap area within distance d of the
  // sub-satellite point is pi (R_S/R_E) (d^2 - R_min^2), so this coefficient
  // carries every exponent in the interferer-distance distribution.
  double ring_coeff = 0.0;
};

// Validates cfg and computes the derived constants. Throws ConfigError on
// nonpositive lengths, num_satellites < 1, alpha <= 2, or mainlobe < sidelobe.
DerivedConstants build_derived(const SystemConfig& cfg);

void validate(const SystemConfig& cfg);

// Flat JSON object mirroring the SystemConfig field names; unknown keys are
// rejected. "nakagami_m" is accepted alongside and returned through *fading
// when non-null.
SystemConfig system_config_from_json(const std::string& json_text, FadingModel* fading = nullptr);
std::string system_config_to_json(const SystemConfig& cfg, const FadingModel& fading);

}  // namespace leonoma

#endif
