#include "config.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "units.hpp"

namespace leonoma {

FadingModel FadingModel::nakagami(int m) {
  if (m < 1) throw ConfigError("nakagami m must be a positive integer");
  FadingModel f;
  f.nakagami_m = m;
  f.shape_kappa = m;
  f.rate_beta = static_cast<double>(m);
  f.mean_power_omega = 1.0;
  return f;
}

FadingModel FadingModel::from_rician_k(double k_factor) {
  if (!(k_factor >= 0.0)) throw ConfigError("Rician K-factor must be nonnegative");
  const double m_exact = (k_factor + 1.0) * (k_factor + 1.0) / (2.0 * k_factor + 1.0);
  int m = static_cast<int>(std::lround(m_exact));
  if (m < 1) m = 1;
  return nakagami(m);
}

void validate(const SystemConfig& cfg) {
  if (!(cfg.earth_radius_km > 0.0)) throw ConfigError("earth_radius_km must be > 0");
  if (!(cfg.satellite_altitude_km > 0.0)) throw ConfigError("satellite_altitude_km must be > 0");
  if (!(cfg.serving_radius_km > 0.0)) throw ConfigError("serving_radius_km must be > 0");
  if (cfg.num_satellites < 1) throw ConfigError("num_satellites must be >= 1");
  if (!(cfg.pathloss_exponent > 2.0)) throw ConfigError("pathloss_exponent must be > 2");
  if (!(cfg.carrier_frequency_hz > 0.0)) throw ConfigError("carrier_frequency_hz must be > 0");
  if (!(cfg.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be > 0");
  if (cfg.mainlobe_gain_dbi < cfg.sidelobe_gain_dbi)
    throw ConfigError("mainlobe_gain_dbi must be >= sidelobe_gain_dbi");
}

DerivedConstants build_derived(const SystemConfig& cfg) {
  validate(cfg);
  DerivedConstants k;
  k.earth_radius_m = km_to_m(cfg.earth_radius_km);
  k.orbit_radius_m = km_to_m(cfg.earth_radius_km + cfg.satellite_altitude_km);
  k.serving_radius_m = km_to_m(cfg.serving_radius_km);
  k.num_satellites = cfg.num_satellites;
  k.bandwidth_hz = cfg.bandwidth_hz;
  k.pathloss_exponent = cfg.pathloss_exponent;

  k.density_per_m2 = cfg.num_satellites / (4.0 * kPi * k.orbit_radius_m * k.orbit_radius_m);
  k.pathloss_ref = std::pow(kSpeedOfLight / (4.0 * kPi * cfg.carrier_frequency_hz), 2.0);
  const double p_watts = dbm_to_watts(cfg.transmit_power_dbm);
  const double noise_watts = dbm_to_watts(cfg.noise_power_dbm);
  k.norm_noise = noise_watts / (k.pathloss_ref * p_watts);

  const double hs = km_to_m(cfg.satellite_altitude_km);
  k.l_min_m = hs;
  k.l_max_m = std::sqrt(hs * hs + k.serving_radius_m * k.serving_radius_m);
  k.r_min_m = hs;
  k.r_max_m = std::sqrt(k.orbit_radius_m * k.orbit_radius_m - k.earth_radius_m * k.earth_radius_m);

  k.gain_ratio = db_to_linear(cfg.sidelobe_gain_dbi - cfg.mainlobe_gain_dbi);
  k.ring_coeff = k.density_per_m2 * kPi * k.orbit_radius_m / k.earth_radius_m;
  return k;
}

namespace {

using nlohmann::json;

struct FieldRef {
  const char* name;
  double SystemConfig::*member;
};

constexpr FieldRef kDoubleFields[] = {
    {"earth_radius_km", &SystemConfig::earth_radius_km},
    {"satellite_altitude_km", &SystemConfig::satellite_altitude_km},
    {"serving_radius_km", &SystemConfig::serving_radius_km},
    {"transmit_power_dbm", &SystemConfig::transmit_power_dbm},
    {"mainlobe_gain_dbi", &SystemConfig::mainlobe_gain_dbi},
    {"sidelobe_gain_dbi", &SystemConfig::sidelobe_gain_dbi},
    {"noise_power_dbm", &SystemConfig::noise_power_dbm},
    {"carrier_frequency_hz", &SystemConfig::carrier_frequency_hz},
    {"bandwidth_hz", &SystemConfig::bandwidth_hz},
    {"pathloss_exponent", &SystemConfig::pathloss_exponent},
};

}  // namespace

SystemConfig system_config_from_json(const std::string& json_text, FadingModel* fading) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  SystemConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = false;
    for (const auto& f : kDoubleFields) {
      if (key == f.name) {
        if (!it.value().is_number()) throw ConfigError("config field '" + key + "' must be a number");
        cfg.*(f.member) = it.value().get<double>();
        known = true;
        break;
      }
    }
    if (known) continue;
    if (key == "num_satellites") {
      if (!it.value().is_number_integer()) throw ConfigError("num_satellites must be an integer");
      cfg.num_satellites = it.value().get<int>();
    } else if (key == "nakagami_m") {
      if (!it.value().is_number_integer()) throw ConfigError("nakagami_m must be an integer");
      if (fading) *fading = FadingModel::nakagami(it.value().get<int>());
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

std::string system_config_to_json(const SystemConfig& cfg, const FadingModel& fading) {
  json j;
  for (const auto& f : kDoubleFields) j[f.name] = cfg.*(f.member);
  j["num_satellites"] = cfg.num_satellites;
  j["nakagami_m"] = fading.nakagami_m;
  return j.dump();
}

}  // namespace leonoma
