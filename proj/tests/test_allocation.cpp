#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "allocation.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "test_common.hpp"
#include "units.hpp"

using namespace leonoma;
using leonoma::test::rel_err;

namespace {

const DerivedConstants& refk() {
  static const DerivedConstants k = test::reference_derived();
  return k;
}

}  // namespace

TEST_CASE("etpa") {
  CHECK(etpa(1) == std::vector<double>{1.0});
  const auto p3 = etpa(3);
  for (double p : p3) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (int n = 1; n <= 8; ++n) {
    const auto p = etpa(n);
    double sum = 0.0;
    for (double v : p) sum += v;
    CHECK(sum == 1.0);  // exact by construction
  }
  CHECK_THROWS_AS(etpa(0), InvalidArgumentError);
}

TEST_CASE("erpa") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(2);

  CHECK(erpa(1, k, f) == std::vector<double>{1.0});

  const auto p = erpa(3, k, f);
  REQUIRE(p.size() == 3);
  CHECK(p[0] < p[1]);
  CHECK(p[1] < p[2]);

  // construction identity R1: p_i * mean_l_i^-alpha constant across i
  double ref = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double li = mean_ordered_link_distance(i, 3, k);
    const double received = p[i - 1] * std::pow(li, -k.pathloss_exponent);
    if (i == 1) ref = received;
    CHECK(rel_err(received, ref) <= 1e-10);
  }
  double sum = 0.0;
  for (double v : p) sum += v;
  CHECK(sum == 1.0);
}

TEST_CASE("sum se assembly") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(2);

  SUBCASE("infeasible setup gives zero") {
    const NomaSetup s = NomaSetup::uniform_threshold(3, Ordering::kMsp, {0.15, 0.3, 0.55},
                                                     db_to_linear(3.0), 0.0);
    CHECK(sum_se_noma(s, k, f).sum_se == 0.0);
  }

  SUBCASE("oma sum is the hand-assembled slot sum") {
    const double theta = 1.0;  // 0 dB: log2(2) = 1
    const SeResult se = sum_se_oma(2, {theta, theta}, k, f, Ordering::kMsp);
    const double p1 = coverage_oma(k, f, 1, 2, theta, Ordering::kMsp);
    const double p2 = coverage_oma(k, f, 2, 2, theta, Ordering::kMsp);
    CHECK(rel_err(se.sum_se, 0.5 * (p1 + p2)) <= 1e-10);
    CHECK(se.per_ut_rate[0] == doctest::Approx(k.bandwidth_hz * se.per_ut_se[0]));
  }

  SUBCASE("oma sum vanishes at huge thresholds") {
    const SeResult se = sum_se_oma(2, {1e6, 1e6}, k, f, Ordering::kMsp);
    CHECK(se.sum_se <= 1e-3);
  }

  SUBCASE("single-user noma equals oma") {
    const double theta = db_to_linear(-2.0);
    const NomaSetup s = NomaSetup::uniform_threshold(1, Ordering::kMsp, {1.0}, theta, 0.0);
    const double noma = sum_se_noma(s, k, f).sum_se;
    const double oma = sum_se_oma(1, {theta}, k, f, Ordering::kMsp).sum_se;
    CHECK(rel_err(noma, oma) <= 1e-12);
  }

  SUBCASE("natural-log option scales by ln 2") {
    const double theta = 1.0;
    const NomaSetup s = NomaSetup::uniform_threshold(2, Ordering::kMsp, {0.3, 0.7}, theta, 0.0);
    SeOptions bits, nats;
    nats.log_base = SeLogBase::kNatural;
    const double b = sum_se_noma(s, k, f, bits).sum_se;
    const double n = sum_se_noma(s, k, f, nats).sum_se;
    CHECK(rel_err(n, b * std::log(2.0)) <= 1e-12);
  }
}

TEST_CASE("simplex grid") {
  const auto g2 = ascending_simplex_grid(2, 0.05);
  CHECK(g2.size() == 10);  // p1 in {0.05..0.50}
  const auto g3 = ascending_simplex_grid(3, 0.05);
  CHECK(g3.size() == 33);  // partitions of 20 into 3 parts
  for (const auto& p : g3) {
    CHECK(std::is_sorted(p.begin(), p.end()));
    double sum = 0.0;
    for (double v : p) sum += v;
    CHECK(sum == 1.0);
  }
  CHECK_THROWS_AS(ascending_simplex_grid(3, 0.3), InvalidArgumentError);
}

TEST_CASE("feasibility boundary") {
  SUBCASE("etpa n=3 hand root") {
    // p_tilde_3 = 1/3 - theta 2/3 -> theta* = 1/2
    const double b = feasibility_boundary_theta(etpa(3), 0.0);
    CHECK(std::fabs(b - 0.5) <= 1e-9);
  }
  SUBCASE("fpa hand root") {
    // p_tilde_3 = 0.55 - 0.45 theta -> theta* = 11/9
    const double b = feasibility_boundary_theta({0.15, 0.3, 0.55}, 0.0);
    CHECK(std::fabs(b - 11.0 / 9.0) <= 1e-9);
  }
  SUBCASE("single UT with perfect SIC has no boundary") {
    CHECK(std::isinf(feasibility_boundary_theta({1.0}, 0.0)));
  }
  SUBCASE("coverage and SE are exactly zero beyond the boundary") {
    const DerivedConstants& k = refk();
    const FadingModel f = FadingModel::nakagami(1);
    const NomaSetup s = NomaSetup::uniform_threshold(3, Ordering::kMsp, etpa(3), 0.51, 0.0);
    CHECK(sum_se_noma(s, k, f).sum_se == 0.0);
    CHECK(coverage_analytic(s, k, f).mean == 0.0);
  }
}

TEST_CASE("fpa optimizer") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);

  SUBCASE("single-UT degeneracy") {
    const double theta = db_to_linear(-3.0);
    const FpaOptimum best = optimize_fpa(1, theta, k, f, Ordering::kMsp);
    REQUIRE(best.feasible_found);
    CHECK(best.pa == std::vector<double>{1.0});
    const NomaSetup s = NomaSetup::uniform_threshold(1, Ordering::kMsp, {1.0}, theta, 0.0);
    CHECK(rel_err(best.sum_se, sum_se_noma(s, k, f).sum_se) <= 1e-12);
  }

  SUBCASE("empty feasible set returns the sentinel") {
    const FpaOptimum best = optimize_fpa(3, db_to_linear(20.0), k, f, Ordering::kMsp);
    CHECK_FALSE(best.feasible_found);
    CHECK(best.sum_se == 0.0);
    CHECK(best.pa.empty());
  }

  SUBCASE("deterministic across repeated runs and thread counts") {
    const double theta = db_to_linear(-6.0);
    const FpaOptimum a = optimize_fpa(3, theta, k, f, Ordering::kMsp, 0.1, {}, 1);
    const FpaOptimum b = optimize_fpa(3, theta, k, f, Ordering::kMsp, 0.1, {}, 2);
    CHECK(a.pa == b.pa);
    CHECK(a.sum_se == b.sum_se);
  }
}

TEST_CASE("ut count optimizer prefers one user at extreme thresholds") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);
  // 20 dB: every multi-user grid point is infeasible
  const UtCountOptimum best = optimize_ut_count(db_to_linear(20.0), k, f, Ordering::kMsp, 4, 0.1);
  CHECK(best.num_uts == 1);
  REQUIRE(best.best.feasible_found);
  CHECK(best.best.pa == std::vector<double>{1.0});
}
