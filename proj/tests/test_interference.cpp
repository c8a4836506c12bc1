#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "errors.hpp"
#include "interference.hpp"
#include "test_common.hpp"
#include "units.hpp"

using namespace leonoma;
using leonoma::test::rel_err;

namespace {

const DerivedConstants& refk() {
  static const DerivedConstants k = test::reference_derived();
  return k;
}

DerivedConstants derived_with_alpha(double alpha) {
  SystemConfig cfg = test::reference_config();
  cfg.pathloss_exponent = alpha;
  return build_derived(cfg);
}

}  // namespace

TEST_CASE("eta basics") {
  const FadingModel f1 = FadingModel::nakagami(1);
  const DerivedConstants k4 = derived_with_alpha(4.0);
  CHECK(eta(0.0, k4.r_max_m, k4, f1) == 1.0);
  // eta -> 1 as y grows, fixed s
  CHECK(std::fabs(eta(1e13, 10.0 * k4.r_max_m, k4, f1) - 1.0) <= 1e-4);
}

TEST_CASE("capital_f dual-path agreement and edge cases") {
  const FadingModel f2 = FadingModel::nakagami(2);
  const DerivedConstants k3 = derived_with_alpha(3.0);

  CHECK(capital_f(0.0, k3.r_min_m, k3, f2, FMode::kQuadrature) == 0.0);
  CHECK(capital_f(0.0, k3.r_min_m, k3, f2, FMode::kClosedForm) == 0.0);
  // empty interval at r = R_max
  const double s_edge = f2.rate_beta * std::pow(k3.l_min_m, 3.0);
  CHECK(std::fabs(capital_f(s_edge, k3.r_max_m, k3, f2, FMode::kQuadrature)) <= 1e-6);

  const double s = f2.rate_beta * std::pow(k3.l_min_m, 3.0);
  const double fq = capital_f(s, k3.r_min_m, k3, f2, FMode::kQuadrature);
  const double fc = capital_f(s, k3.r_min_m, k3, f2, FMode::kClosedForm);
  CHECK(rel_err(fq, fc) <= 1e-7);

  // quadrature reconstruction of the eta-based form at alpha = 4, kappa = 1
  const FadingModel f1 = FadingModel::nakagami(1);
  const DerivedConstants k4 = derived_with_alpha(4.0);
  const double fq4 = capital_f(1e13, k4.r_max_m * 0.7, k4, f1, FMode::kQuadrature);
  const double fc4 = capital_f(1e13, k4.r_max_m * 0.7, k4, f1, FMode::kClosedForm);
  CHECK(rel_err(fq4, fc4) <= 1e-7);

  // near-singular third parameter refuses closed form
  const DerivedConstants& kv = refk();
  CHECK_THROWS_AS(capital_f(1e12, kv.r_min_m, kv, f2, FMode::kClosedForm), IllConditionedError);
}

TEST_CASE("laplace transform basics") {
  const DerivedConstants& k = refk();
  const FadingModel f2 = FadingModel::nakagami(2);

  CHECK(laplace_inter(0.0, 700e3, k, f2) == doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("strictly decreasing, in (0, 1]") {
    double prev = 1.0 + 1e-12;
    for (int i = 0; i < 50; ++i) {
      const double s = std::pow(10.0, 8.0 + 12.0 * i / 49.0);
      const double v = laplace_inter(s, 700e3, k, f2);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v < prev);
      prev = v;
    }
  }

  SUBCASE("noise-shifted transform is the product identity") {
    for (double s : {1e10, 5e11, 2e12, 8e12}) {
      const double lhs = laplace_inter_noise(s, 650e3, k, f2);
      const double rhs = laplace_inter(s, 650e3, k, f2) * std::exp(-s * k.norm_noise);
      CHECK(rel_err(lhs, rhs) <= 1e-14);
    }
  }
}

TEST_CASE("laplace transform matches the Monte Carlo expectation oracle") {
  // E[exp(-s I)] with I = gain_ratio (r^-a g0^2 + sum_j v_j^-a g_j^2):
  // interferers beyond r form a Poisson process whose squared distance to O
  // is uniform-intensity, plus the conditioned nearest interferer exactly at
  // r. Drawn with the standard library engine, independent of the library's
  // own samplers.
  const DerivedConstants& k = refk();
  const double r = 700e3;
  std::mt19937_64 rng = test::oracle_rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  for (int kappa : {1, 2}) {
    const FadingModel fad = FadingModel::nakagami(kappa);
    const double s = fad.rate_beta * std::pow(600e3, k.pathloss_exponent);

    const double mean_count = k.ring_coeff * (k.r_max_m * k.r_max_m - r * r);
    std::poisson_distribution<int> pois(mean_count);
    std::gamma_distribution<double> gam(kappa, 1.0 / fad.rate_beta);

    const int trials = 100000;
    double acc = 0.0, acc2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      double i_sum = std::pow(r, -k.pathloss_exponent) * gam(rng);
      const int m = pois(rng);
      for (int j = 0; j < m; ++j) {
        const double v2 = r * r + uni(rng) * (k.r_max_m * k.r_max_m - r * r);
        i_sum += std::pow(v2, -0.5 * k.pathloss_exponent) * gam(rng);
      }
      const double e = std::exp(-s * k.gain_ratio * i_sum);
      acc += e;
      acc2 += e * e;
    }
    const double mc = acc / trials;
    const double sd = std::sqrt((acc2 / trials - mc * mc) / trials);
    const double analytic = laplace_inter(s, r, k, fad);
    CHECK(std::fabs(analytic - mc) <= 3.0 * sd + 1e-12);
  }
}

TEST_CASE("laplace derivatives") {
  const DerivedConstants& k = refk();
  const FadingModel f2 = FadingModel::nakagami(2);

  SUBCASE("zeroth order is the transform itself") {
    const double s = 3e12;
    CHECK(laplace_inter_deriv(s, 800e3, k, f2, 0) == laplace_inter(s, 800e3, k, f2));
  }

  SUBCASE("sign alternation of a completely monotone transform") {
    std::mt19937_64 rng = test::oracle_rng(17);
    std::uniform_real_distribution<double> us(10.0, 14.0), ur(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      const double s = std::pow(10.0, us(rng));
      const double r = k.r_min_m + ur(rng) * (k.r_max_m - k.r_min_m);
      for (int order : {0, 1, 2}) {
        const double d = laplace_inter_deriv(s, r, k, f2, order);
        CHECK((order % 2 == 0 ? d : -d) >= 0.0);
      }
    }
  }

  SUBCASE("jet derivative matches the Leibniz-rule closed route") {
    std::mt19937_64 rng = test::oracle_rng(23);
    std::uniform_real_distribution<double> us(10.5, 13.5), ur(0.05, 0.95);
    for (int t = 0; t < 10; ++t) {
      const double s = std::pow(10.0, us(rng));
      const double r = k.r_min_m + ur(rng) * (k.r_max_m - k.r_min_m);
      const double jet_d = laplace_inter_deriv(s, r, k, f2, 1);
      const double closed_d = laplace_inter_deriv1_closed(s, r, k, f2, FMode::kQuadrature);
      CHECK(rel_err(jet_d, closed_d) <= 1e-8);
    }
  }

  SUBCASE("eta-form closed derivative agrees away from the pole") {
    const DerivedConstants k25 = derived_with_alpha(2.5);
    std::mt19937_64 rng = test::oracle_rng(29);
    std::uniform_real_distribution<double> us(13.0, 16.0), ur(0.05, 0.95);
    for (int t = 0; t < 10; ++t) {
      const double s = std::pow(10.0, us(rng));
      const double r = k25.r_min_m + ur(rng) * (k25.r_max_m - k25.r_min_m);
      const double jet_d = laplace_inter_deriv(s, r, k25, f2, 1);
      const double eta_d = laplace_inter_deriv1_closed(s, r, k25, f2, FMode::kClosedForm);
      CHECK(rel_err(jet_d, eta_d) <= 1e-8);
    }
  }

  SUBCASE("derivative order is bounded") {
    CHECK_THROWS_AS(laplace_inter_deriv(1e12, 700e3, k, f2, 9), NumericError);
  }
}
