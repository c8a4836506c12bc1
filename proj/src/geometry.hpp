#ifndef LEONOMA_GEOMETRY_HPP
#define LEONOMA_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "rng.hpp"

namespace leonoma {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  Vec3 normalized() const;
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
};

// ---------------------------------------------------------------------------
// Serving-link distance distributions (planar-disk law: the squared slant
// distance is uniform on [L_min^2, L_max^2]).

double pdf_link_distance(double l_m, const DerivedConstants& k);
double cdf_link_distance(double l_m, const DerivedConstants& k);

// i-th order statistic of the serving-link distance among n UTs.
// Throws InvalidArgumentError unless 1 <= rank_i <= num_uts.
double pdf_ordered_link_distance(double l_m, int rank_i, int num_uts, const DerivedConstants& k);
double cdf_ordered_link_distance(double l_m, int rank_i, int num_uts, const DerivedConstants& k);

// Mean of the i-th ordered serving-link distance (quadrature of l f_{L_i}).
double mean_ordered_link_distance(int rank_i, int num_uts, const DerivedConstants& k);

// ---------------------------------------------------------------------------
// Nearest-interferer distance.

// Probability of at least one interfering satellite in the visible dome:
// 1 - exp(-lambda 2 pi (R_S - R_E) R_S).
double interferer_presence_probability(const DerivedConstants& k);

// conditional=true: density normalized on [R_min, R_max];
// conditional=false: scaled by the presence probability above.
double pdf_nearest_interferer(double r_m, const DerivedConstants& k, bool conditional);

// ---------------------------------------------------------------------------
// Samplers.

enum class ConstellationModel { kSppp, kWalkerDelta };

struct WalkerDeltaParams {
  int total_satellites = 600;
  int num_planes = 24;
  double inclination_deg = 53.0;
  int phasing_factor = 1;

  // planes = round(sqrt(N)), 53 deg inclination, phasing 1.
  static WalkerDeltaParams defaults(int total_satellites);
  void validate() const;
};

struct ConstellationSample {
  std::vector<Vec3> satellites;  // all satellites, typical included
  std::size_t typical_index = 0;
  Vec3 origin_dir;  // unit vector toward O (sub-satellite point of the typical)
  std::string model_tag;
  int attempts = 1;  // rejection attempts consumed by this sample
};

// SPPP snapshot: Poisson(N_S) satellites uniform on the orbital sphere plus
// the typical satellite inserted at the zenith of O; snapshots where a
// sampled satellite beats the typical for nearness to O are rejected.
// Throws RejectionBudgetError after max_attempts.
ConstellationSample sample_constellation_sppp(const DerivedConstants& k, RngStream& rng,
                                              int max_attempts = 10000);

// Deterministic Walker-Delta grid under a uniform random rotation; the
// serving satellite is the nearest to a uniformly random ground point, and O
// is that satellite's sub-satellite point.
ConstellationSample sample_constellation_walker(const WalkerDeltaParams& params,
                                                const DerivedConstants& k, RngStream& rng);

struct UtSample {
  Vec3 position;
  double slant_m = 0.0;  // distance to the typical satellite
};

// n UTs in the serving cap around O. Default draws the squared slant
// distance uniformly (matching f_L exactly); exact_cap=true instead places
// UTs uniformly by area on the geodesic cap of radius R_T.
std::vector<UtSample> sample_uts(int n, const DerivedConstants& k, const Vec3& origin_dir,
                                 RngStream& rng, bool exact_cap = false);

// One-line-per-satellite CSV: x_m,y_m,z_m,is_typical.
std::string snapshot_to_csv(const ConstellationSample& sample);

}  // namespace leonoma

#endif
