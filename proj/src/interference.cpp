#include "interference.hpp"

#include <cmath>

#include "errors.hpp"
#include "hyp2f1.hpp"
#include "quadrature.hpp"

namespace leonoma {

namespace {

constexpr double kInnerTol = 1e-9;

double cs_scale(const DerivedConstants& k, const FadingModel& fading) {
  return k.gain_ratio / fading.shape_kappa;
}

// 1 - (1+u)^-kappa without cancellation at small u.
double one_minus_pow_recip(double u, double kappa) {
  return -std::expm1(-kappa * std::log1p(u));
}

Jet one_minus_pow_recip(const Jet& u, double kappa) {
  Jet r = 1.0 - pow(u + 1.0, -kappa);
  r.set_coeff(0, one_minus_pow_recip(u.value(), kappa));
  return r;
}

// W(s) = int_r^{Rmax} [1 - (1 + cs v^-alpha)^-kappa] 2 v dv written on t = v^2,
// so the integrand is bounded on a fixed interval and jets pass straight
// through the quadrature nodes.
template <class T>
T w_integral(const T& cs, double r_m, const DerivedConstants& k, const FadingModel& fading) {
  const double half_alpha = 0.5 * k.pathloss_exponent;
  const double kappa = fading.shape_kappa;
  auto integrand = [&](double t) -> T {
    const double amp = std::pow(t, -half_alpha);
    return one_minus_pow_recip(cs * amp, kappa);
  };
  return integrate<T>(integrand, r_m * r_m, k.r_max_m * k.r_max_m, kInnerTol).value;
}

// specializations resolve the pow/1.0- mixing for plain doubles
template <>
double w_integral<double>(const double& cs, double r_m, const DerivedConstants& k,
                          const FadingModel& fading) {
  const double half_alpha = 0.5 * k.pathloss_exponent;
  const double kappa = fading.shape_kappa;
  auto integrand = [&](double t) {
    return one_minus_pow_recip(cs * std::pow(t, -half_alpha), kappa);
  };
  return integrate<double>(integrand, r_m * r_m, k.r_max_m * k.r_max_m, kInnerTol).value;
}

double w_closed_eta(double s, double r_m, const DerivedConstants& k, const FadingModel& fading) {
  const double rmax = k.r_max_m;
  return rmax * rmax * (1.0 - eta(s, rmax, k, fading)) - r_m * r_m * (1.0 - eta(s, r_m, k, fading));
}

template <class T>
T laplace_core(const T& s, double r_m, const DerivedConstants& k, const FadingModel& fading) {
  const T cs = s * cs_scale(k, fading);
  const T w = w_integral<T>(cs, r_m, k, fading);
  const double nearest_scale =
      k.gain_ratio / (std::pow(r_m, k.pathloss_exponent) * fading.rate_beta);
  const T t2 = pow(s * nearest_scale + 1.0, -static_cast<double>(fading.shape_kappa));
  return exp(w * -k.ring_coeff) * t2;
}

template <>
double laplace_core<double>(const double& s, double r_m, const DerivedConstants& k,
                            const FadingModel& fading) {
  const double cs = s * cs_scale(k, fading);
  const double w = w_integral<double>(cs, r_m, k, fading);
  const double nearest_scale =
      k.gain_ratio / (std::pow(r_m, k.pathloss_exponent) * fading.rate_beta);
  const double t2 = std::pow(1.0 + s * nearest_scale, -fading.shape_kappa);
  return std::exp(-k.ring_coeff * w) * t2;
}

}  // namespace

double eta(double s, double y_m, const DerivedConstants& k, const FadingModel& fading) {
  if (s == 0.0) return 1.0;
  const double alpha = k.pathloss_exponent;
  const double c = (alpha - 2.0) / alpha;
  const double cs = s * cs_scale(k, fading);
  const double z = -std::pow(y_m, -alpha) * cs;
  if (c >= 1e-9) return hyp2f1(-2.0 / alpha, fading.shape_kappa, c, z);

  // Pole fallback: y^2 (eta - 1) equals the tail integral of the v-form
  // integrand from y to infinity. Split at a far cutoff where the first-order
  // tail is analytic.
  const double kappa = fading.shape_kappa;
  const double y2 = y_m * y_m;
  const double knee = std::pow(cs, 1.0 / alpha);  // cs v^-alpha = 1 here
  const double far = std::max({100.0 * y_m, 100.0 * knee});
  auto integrand = [&](double t) {
    return one_minus_pow_recip(cs * std::pow(t, -0.5 * alpha), kappa);
  };
  const double body = integrate<double>(integrand, y2, far * far, kInnerTol).value;
  const double tail = 2.0 * kappa * cs * std::pow(far, 2.0 - alpha) / (alpha - 2.0);
  return 1.0 + (body + tail) / y2;
}

double capital_f(double s, double r_m, const DerivedConstants& k, const FadingModel& fading,
                 FMode mode) {
  if (s == 0.0) return 0.0;
  const double alpha = k.pathloss_exponent;
  const double cs = s * cs_scale(k, fading);
  const double u_scale = std::pow(cs, -2.0 / alpha);
  if (mode == FMode::kQuadrature) return u_scale * w_integral<double>(cs, r_m, k, fading);
  if ((alpha - 2.0) / alpha < 1e-9)
    throw IllConditionedError("capital_f closed form ill-conditioned: quadrature required");
  return u_scale * w_closed_eta(s, r_m, k, fading);
}

double laplace_inter(double s, double r_m, const DerivedConstants& k, const FadingModel& fading) {
  return laplace_core<double>(s, r_m, k, fading);
}

Jet laplace_inter(const Jet& s, double r_m, const DerivedConstants& k, const FadingModel& fading) {
  return laplace_core<Jet>(s, r_m, k, fading);
}

double laplace_inter_noise(double s, double r_m, const DerivedConstants& k,
                           const FadingModel& fading) {
  return laplace_inter(s, r_m, k, fading) * std::exp(-s * k.norm_noise);
}

Jet laplace_inter_noise(const Jet& s, double r_m, const DerivedConstants& k,
                        const FadingModel& fading) {
  return laplace_inter(s, r_m, k, fading) * exp(s * -k.norm_noise);
}

double laplace_inter_deriv(double s, double r_m, const DerivedConstants& k,
                           const FadingModel& fading, int order) {
  if (order == 0) return laplace_inter(s, r_m, k, fading);
  Jet seed = Jet::variable(s, order);
  return laplace_inter(seed, r_m, k, fading).derivative(order);
}

double laplace_inter_deriv1_closed(double s, double r_m, const DerivedConstants& k,
                                   const FadingModel& fading, FMode mode) {
  const double alpha = k.pathloss_exponent;
  const double kappa = fading.shape_kappa;
  const double dcs = cs_scale(k, fading);
  const double cs = s * dcs;

  double w, dw;
  if (mode == FMode::kQuadrature) {
    w = w_integral<double>(cs, r_m, k, fading);
    auto dintegrand = [&](double t) {
      const double amp = std::pow(t, -0.5 * alpha);
      return kappa * std::pow(1.0 + cs * amp, -kappa - 1.0) * dcs * amp;
    };
    dw = integrate<double>(dintegrand, r_m * r_m, k.r_max_m * k.r_max_m, kInnerTol).value;
  } else {
    if ((alpha - 2.0) / alpha < 1e-9)
      throw IllConditionedError("closed-form derivative ill-conditioned: quadrature required");
    w = w_closed_eta(s, r_m, k, fading);
    auto brace_term = [&](double y) {
      const double p = std::pow(1.0 + cs * std::pow(y, -alpha), -kappa);
      return y * y * (eta(s, y, k, fading) - p);
    };
    dw = -(2.0 / alpha) / s * (brace_term(k.r_max_m) - brace_term(r_m));
  }

  const double nearest_scale = k.gain_ratio / (std::pow(r_m, alpha) * fading.rate_beta);
  const double t2 = std::pow(1.0 + s * nearest_scale, -kappa);
  const double dt2 = -kappa * nearest_scale * std::pow(1.0 + s * nearest_scale, -kappa - 1.0);
  return std::exp(-k.ring_coeff * w) * (-k.ring_coeff * dw * t2 + dt2);
}

}  // namespace leonoma
