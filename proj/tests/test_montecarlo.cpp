#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "coverage.hpp"
#include "montecarlo.hpp"
#include "test_common.hpp"
#include "units.hpp"

using namespace leonoma;

namespace {

const DerivedConstants& refk() {
  static const DerivedConstants k = test::reference_derived();
  return k;
}

}  // namespace

TEST_CASE("simulation determinism") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(2);
  McOptions mc;
  mc.trials = 4000;
  mc.seed = 90210;

  const std::vector<double> thetas = {db_to_linear(-6.0), db_to_linear(0.0)};

  SUBCASE("bit-exact repeat") {
    const auto a = simulate_coverage_grid(3, Ordering::kMsp, 0.0, McPaPolicy::etpa(), thetas, k, f, mc);
    const auto b = simulate_coverage_grid(3, Ordering::kMsp, 0.0, McPaPolicy::etpa(), thetas, k, f, mc);
    for (std::size_t t = 0; t < thetas.size(); ++t)
      for (int i = 0; i < 3; ++i) CHECK(a[t].per_ut[i] == b[t].per_ut[i]);
  }

  SUBCASE("independent of worker count") {
    McOptions one = mc, four = mc;
    one.threads = 1;
    four.threads = 4;
    const auto a = simulate_coverage_grid(3, Ordering::kIsinr, 0.1, McPaPolicy::erpa(), thetas, k, f, one);
    const auto b = simulate_coverage_grid(3, Ordering::kIsinr, 0.1, McPaPolicy::erpa(), thetas, k, f, four);
    for (std::size_t t = 0; t < thetas.size(); ++t)
      for (int i = 0; i < 3; ++i) CHECK(a[t].per_ut[i] == b[t].per_ut[i]);
  }

  SUBCASE("estimates in range with binomial standard errors") {
    const auto a = simulate_coverage_grid(3, Ordering::kMsp, 0.0, McPaPolicy::etpa(), thetas, k, f, mc);
    for (const auto& cov : a) {
      for (int i = 0; i < 3; ++i) {
        CHECK(cov.per_ut[i] >= 0.0);
        CHECK(cov.per_ut[i] <= 1.0);
        const double expect =
            std::sqrt(cov.per_ut[i] * (1.0 - cov.per_ut[i]) / static_cast<double>(mc.trials));
        CHECK(cov.std_err[i] == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("single-user noma and oma coincide") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);
  McOptions mc;
  mc.trials = 20000;
  mc.seed = 777;
  const double theta = db_to_linear(-3.0);

  const auto noma =
      simulate_coverage_grid(1, Ordering::kMsp, 0.0, McPaPolicy::fpa({1.0}), {theta}, k, f, mc);
  const auto oma = simulate_coverage_oma_grid(1, Ordering::kMsp, {theta}, k, f, mc);
  // same trials, same event: identical indicators
  CHECK(noma[0].per_ut[0] == oma[0].per_ut[0]);
}

TEST_CASE("standard error scaling with trial count") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);
  McOptions small, big;
  small.trials = 10000;
  big.trials = 20000;
  small.seed = big.seed = 3;
  const double theta = db_to_linear(-5.0);
  const auto a = simulate_coverage_grid(2, Ordering::kMsp, 0.0, McPaPolicy::etpa(), {theta}, k, f, small);
  const auto b = simulate_coverage_grid(2, Ordering::kMsp, 0.0, McPaPolicy::etpa(), {theta}, k, f, big);
  const double ratio = a[0].std_err[0] / b[0].std_err[0];
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("self-comparison of constellation models is exactly zero") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(2);
  McOptions mc;
  mc.trials = 2000;
  mc.seed = 11;
  mc.model = ConstellationModel::kSppp;
  const std::vector<double> thetas = {db_to_linear(-6.0), db_to_linear(-2.0)};
  const ConstellationComparison cmp = compare_constellations(
      3, Ordering::kIsinr, 0.0, McPaPolicy::erpa(), thetas, k, f, mc, ConstellationModel::kSppp);
  CHECK(cmp.max_abs_gap == 0.0);
}

TEST_CASE("walker vs sppp coverage gap is small") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(2);
  McOptions mc;
  mc.trials = 4000;
  mc.seed = 2025;
  mc.walker = WalkerDeltaParams::defaults(600);
  const std::vector<double> thetas = {db_to_linear(-6.0), db_to_linear(-2.0)};
  const ConstellationComparison cmp =
      compare_constellations(3, Ordering::kIsinr, 0.0, McPaPolicy::erpa(), thetas, k, f, mc,
                             ConstellationModel::kWalkerDelta);
  CHECK(cmp.max_abs_gap <= 0.08);  // loose at this trial count; acceptance tightens it
}

TEST_CASE("empirical unordered isinr matches the analytic cdf") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);
  McOptions mc;
  mc.trials = 100000;
  mc.seed = 8;
  std::vector<double> z = sample_unordered_isinr(100000, k, f, mc);
  std::sort(z.begin(), z.end());

  // KS over a quantile grid; each analytic point is a double integral, so
  // evaluate a few hundred of them rather than one per sample.
  double ks = 0.0;
  const int grid = 160;
  for (int g = 1; g < grid; ++g) {
    const std::size_t idx = static_cast<std::size_t>(z.size() * (g / static_cast<double>(grid)));
    const double emp = static_cast<double>(idx) / z.size();
    const double ana = cdf_unordered_isinr(z[idx], k, f);
    ks = std::max(ks, std::fabs(emp - ana));
  }
  CHECK(ks < 0.01);
}

TEST_CASE("erpa per-realization sum se stays near the analytic value") {
  const DerivedConstants& k = refk();
  const FadingModel f = FadingModel::nakagami(1);
  McOptions mc;
  mc.trials = 30000;
  mc.seed = 6060;
  const double theta = db_to_linear(-6.0);

  const McSeResult sim = simulate_sum_se(3, Ordering::kMsp, 0.0, McPaPolicy::erpa(), theta, k, f, mc);
  NomaSetup s = NomaSetup::uniform_threshold(3, Ordering::kMsp, erpa(3, k, f), theta, 0.0);
  const double analytic = sum_se_noma(s, k, f).sum_se;
  CHECK(std::fabs(sim.se.sum_se - analytic) <= 0.05);
}
