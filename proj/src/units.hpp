#ifndef LEONOMA_UNITS_HPP
#define LEONOMA_UNITS_HPP

#include <cmath>

namespace leonoma {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

// dB / dBi / dBm are all plain decibel quantities; dBm converts to milliwatts.
inline double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

inline double linear_to_db(double value) { return 10.0 * std::log10(value); }

inline double dbm_to_watts(double value_dbm) { return db_to_linear(value_dbm - 30.0); }

inline double km_to_m(double km) { return km * 1e3; }

}  // namespace leonoma

#endif
