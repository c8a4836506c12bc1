#include "geometry.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "quadrature.hpp"
#include "units.hpp"

namespace leonoma {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  return {x / n, y / n, z / n};
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Orthonormal basis completing a unit vector.
void tangent_basis(const Vec3& n, Vec3& e1, Vec3& e2) {
  const Vec3 pick = std::fabs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  e1 = n.cross(pick).normalized();
  e2 = n.cross(e1);
}

Vec3 uniform_on_sphere(double radius, RngStream& rng) {
  const double ct = rng.uniform(-1.0, 1.0);
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  return {radius * st * std::cos(phi), radius * st * std::sin(phi), radius * ct};
}

// Uniform random rotation from a uniform axis and angle with the correct
// SO(3) density (axis uniform on the sphere, angle with density
// (1-cos)/pi on [0, pi]), applied via Rodrigues' formula.
struct Rotation {
  Vec3 axis;
  double cos_a, sin_a;

  Vec3 apply(const Vec3& v) const {
    const Vec3 k = axis;
    const Vec3 kxv = k.cross(v);
    const double kdv = k.dot(v);
    return v * cos_a + kxv * sin_a + k * (kdv * (1.0 - cos_a));
  }

  static Rotation random(RngStream& rng) {
    Rotation r;
    r.axis = uniform_on_sphere(1.0, rng).normalized();
    // inverse-CDF sample of (angle - sin angle)/pi by bisection
    const double target = rng.uniform() * kPi;
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mid - std::sin(mid) <= target ? lo : hi) = mid;
    }
    const double angle = 0.5 * (lo + hi);
    r.cos_a = std::cos(angle);
    r.sin_a = std::sin(angle);
    return r;
  }
};

}  // namespace

double pdf_link_distance(double l_m, const DerivedConstants& k) {
  if (l_m < k.l_min_m || l_m > k.l_max_m) return 0.0;
  return 2.0 * l_m / (k.serving_radius_m * k.serving_radius_m);
}

double cdf_link_distance(double l_m, const DerivedConstants& k) {
  if (l_m <= k.l_min_m) return 0.0;
  if (l_m >= k.l_max_m) return 1.0;
  return (l_m * l_m - k.l_min_m * k.l_min_m) / (k.serving_radius_m * k.serving_radius_m);
}

double pdf_ordered_link_distance(double l_m, int rank_i, int num_uts, const DerivedConstants& k) {
  if (rank_i < 1 || rank_i > num_uts) throw InvalidArgumentError("order-statistic rank out of range");
  if (l_m < k.l_min_m || l_m > k.l_max_m) return 0.0;
  const double F = cdf_link_distance(l_m, k);
  return binomial(num_uts - 1, rank_i - 1) * std::pow(F, rank_i - 1) *
         std::pow(1.0 - F, num_uts - rank_i) * pdf_link_distance(l_m, k) * num_uts;
}

double cdf_ordered_link_distance(double l_m, int rank_i, int num_uts, const DerivedConstants& k) {
  if (rank_i < 1 || rank_i > num_uts) throw InvalidArgumentError("order-statistic rank out of range");
  const double F = cdf_link_distance(l_m, k);
  double acc = 0.0;
  for (int j = rank_i; j <= num_uts; ++j)
    acc += binomial(num_uts, j) * std::pow(F, j) * std::pow(1.0 - F, num_uts - j);
  return acc;
}

double mean_ordered_link_distance(int rank_i, int num_uts, const DerivedConstants& k) {
  auto integrand = [&](double l) { return l * pdf_ordered_link_distance(l, rank_i, num_uts, k); };
  return integrate<double>(integrand, k.l_min_m, k.l_max_m, 1e-10).value;
}

double interferer_presence_probability(const DerivedConstants& k) {
  const double exponent =
      k.density_per_m2 * 2.0 * kPi * (k.orbit_radius_m - k.earth_radius_m) * k.orbit_radius_m;
  return 1.0 - std::exp(-exponent);
}

double pdf_nearest_interferer(double r_m, const DerivedConstants& k, bool conditional) {
  if (r_m < k.r_min_m || r_m > k.r_max_m) return 0.0;
  const double a = k.ring_coeff;
  const double norm = -std::expm1(-a * (k.r_max_m * k.r_max_m - k.r_min_m * k.r_min_m));
  const double density =
      2.0 * a * r_m * std::exp(-a * (r_m * r_m - k.r_min_m * k.r_min_m)) / norm;
  return conditional ? density : density * interferer_presence_probability(k);
}

WalkerDeltaParams WalkerDeltaParams::defaults(int total_satellites) {
  WalkerDeltaParams p;
  p.total_satellites = total_satellites;
  p.num_planes = static_cast<int>(std::lround(std::sqrt(static_cast<double>(total_satellites))));
  while (p.num_planes > 1 && total_satellites % p.num_planes != 0) --p.num_planes;
  p.inclination_deg = 53.0;
  p.phasing_factor = 1;
  return p;
}

void WalkerDeltaParams::validate() const {
  if (total_satellites < 1 || num_planes < 1) throw ConfigError("walker counts must be positive");
  if (total_satellites % num_planes != 0)
    throw ConfigError("walker total_satellites must be divisible by num_planes");
  if (!(inclination_deg > 0.0 && inclination_deg <= 90.0))
    throw ConfigError("walker inclination must be in (0, 90] degrees");
}

ConstellationSample sample_constellation_sppp(const DerivedConstants& k, RngStream& rng,
                                              int max_attempts) {
  ConstellationSample s;
  s.model_tag = "SPPP";
  s.origin_dir = {0.0, 0.0, 1.0};
  const Vec3 origin = s.origin_dir * k.earth_radius_m;
  const double mean_count = k.density_per_m2 * 4.0 * kPi * k.orbit_radius_m * k.orbit_radius_m;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    s.attempts = attempt;
    s.satellites.clear();
    const int count = rng.poisson(mean_count);
    s.satellites.reserve(count + 1);
    s.satellites.push_back(s.origin_dir * k.orbit_radius_m);  // typical at zenith
    s.typical_index = 0;
    bool ok = true;
    for (int i = 0; i < count; ++i) {
      const Vec3 p = uniform_on_sphere(k.orbit_radius_m, rng);
      // typical must stay the nearest satellite to O
      if ((p - origin).norm() < k.r_min_m) {
        ok = false;
        break;
      }
      s.satellites.push_back(p);
    }
    if (ok) return s;
  }
  throw RejectionBudgetError("SPPP conditioning exceeded the rejection budget");
}

ConstellationSample sample_constellation_walker(const WalkerDeltaParams& params,
                                                const DerivedConstants& k, RngStream& rng) {
  params.validate();
  ConstellationSample s;
  s.model_tag = "WalkerDelta";

  const int per_plane = params.total_satellites / params.num_planes;
  const double inc = params.inclination_deg * kPi / 180.0;
  const Rotation rot = Rotation::random(rng);

  s.satellites.reserve(params.total_satellites);
  for (int p = 0; p < params.num_planes; ++p) {
    const double raan = 2.0 * kPi * p / params.num_planes;
    const double plane_phase = 2.0 * kPi * params.phasing_factor * p / params.total_satellites;
    for (int m = 0; m < per_plane; ++m) {
      const double u = 2.0 * kPi * m / per_plane + plane_phase;  // argument of latitude
      // orbit in a plane of inclination inc with ascending node at raan
      const Vec3 in_plane = {std::cos(u), std::sin(u) * std::cos(inc), std::sin(u) * std::sin(inc)};
      const Vec3 oriented = {in_plane.x * std::cos(raan) - in_plane.y * std::sin(raan),
                             in_plane.x * std::sin(raan) + in_plane.y * std::cos(raan),
                             in_plane.z};
      s.satellites.push_back(rot.apply(oriented) * k.orbit_radius_m);
    }
  }

  const Vec3 ground = uniform_on_sphere(k.earth_radius_m, rng);
  double best = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < s.satellites.size(); ++i) {
    const double d = (s.satellites[i] - ground).norm();
    if (i == 0 || d < best) {
      best = d;
      best_idx = i;
    }
  }
  s.typical_index = best_idx;
  s.origin_dir = s.satellites[best_idx].normalized();
  return s;
}

std::vector<UtSample> sample_uts(int n, const DerivedConstants& k, const Vec3& origin_dir,
                                 RngStream& rng, bool exact_cap) {
  if (n < 1) throw InvalidArgumentError("UT count must be >= 1");
  Vec3 e1, e2;
  tangent_basis(origin_dir, e1, e2);
  const double re = k.earth_radius_m;
  const double rs = k.orbit_radius_m;

  std::vector<UtSample> uts;
  uts.reserve(n);
  for (int i = 0; i < n; ++i) {
    double cos_psi;
    if (exact_cap) {
      const double psi_max = k.serving_radius_m / re;
      cos_psi = 1.0 - rng.uniform() * (1.0 - std::cos(psi_max));
    } else {
      // squared slant distance uniform on [L_min^2, L_max^2]
      const double l2 = k.l_min_m * k.l_min_m +
                        rng.uniform() * (k.l_max_m * k.l_max_m - k.l_min_m * k.l_min_m);
      cos_psi = (rs * rs + re * re - l2) / (2.0 * rs * re);
    }
    const double sin_psi = std::sqrt(std::max(0.0, 1.0 - cos_psi * cos_psi));
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const Vec3 dir = origin_dir * cos_psi + e1 * (sin_psi * std::cos(phi)) +
                     e2 * (sin_psi * std::sin(phi));
    UtSample u;
    u.position = dir * re;
    u.slant_m = (origin_dir * rs - u.position).norm();
    uts.push_back(u);
  }
  return uts;
}

std::string snapshot_to_csv(const ConstellationSample& sample) {
  std::ostringstream os;
  os.precision(17);
  os << "x_m,y_m,z_m,is_typical\n";
  for (std::size_t i = 0; i < sample.satellites.size(); ++i) {
    const Vec3& p = sample.satellites[i];
    os << p.x << ',' << p.y << ',' << p.z << ',' << (i == sample.typical_index ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace leonoma
