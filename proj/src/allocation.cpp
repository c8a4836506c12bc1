#include "allocation.hpp"

#include <cmath>

#include "errors.hpp"
#include "geometry.hpp"
#include "parallel.hpp"

namespace leonoma {

namespace {

double se_log(double one_plus_theta, SeLogBase base) {
  return base == SeLogBase::kBase2 ? std::log2(one_plus_theta) : std::log(one_plus_theta);
}

}  // namespace

std::vector<double> etpa(int n) {
  if (n < 1) throw InvalidArgumentError("UT count must be >= 1");
  std::vector<double> pa(n, 1.0 / n);
  double head = 0.0;
  for (int i = 0; i + 1 < n; ++i) head += pa[i];
  pa[n - 1] = 1.0 - head;
  return pa;
}

std::vector<double> erpa(int n, const DerivedConstants& k, const FadingModel& fading) {
  (void)fading;  // mean fading power is 1 by model assumption
  if (n < 1) throw InvalidArgumentError("UT count must be >= 1");
  std::vector<double> pa(n);
  double total = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double mean_l = mean_ordered_link_distance(i, n, k);
    pa[i - 1] = std::pow(mean_l, k.pathloss_exponent);
    total += pa[i - 1];
  }
  for (double& p : pa) p /= total;
  double head = 0.0;
  for (int i = 0; i + 1 < n; ++i) head += pa[i];
  pa[n - 1] = 1.0 - head;
  return pa;
}

SeResult sum_se_noma(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                     const SeOptions& opts) {
  SeResult res;
  res.noma = true;
  res.per_ut_se.assign(setup.num_uts, 0.0);
  res.per_ut_rate.assign(setup.num_uts, 0.0);
  const CoverageResult cov = coverage_analytic(setup, k, fading, opts.analytic);
  for (int i = 0; i < setup.num_uts; ++i) {
    res.per_ut_se[i] = cov.per_ut[i] * se_log(1.0 + setup.thresholds[i], opts.log_base);
    res.per_ut_rate[i] = k.bandwidth_hz * res.per_ut_se[i];
    res.sum_se += res.per_ut_se[i];
  }
  return res;
}

SeResult sum_se_oma(int n, const std::vector<double>& thresholds, const DerivedConstants& k,
                    const FadingModel& fading, Ordering ordering, const SeOptions& opts) {
  if (n < 1 || static_cast<int>(thresholds.size()) != n)
    throw InvalidArgumentError("thresholds size must equal UT count");
  SeResult res;
  res.noma = false;
  res.per_ut_se.assign(n, 0.0);
  res.per_ut_rate.assign(n, 0.0);
  const double slot = 1.0 / n;
  for (int i = 1; i <= n; ++i) {
    const double cov = coverage_oma(k, fading, i, n, thresholds[i - 1], ordering, opts.analytic);
    res.per_ut_se[i - 1] = slot * cov * se_log(1.0 + thresholds[i - 1], opts.log_base);
    res.per_ut_rate[i - 1] = k.bandwidth_hz * res.per_ut_se[i - 1];
    res.sum_se += res.per_ut_se[i - 1];
  }
  return res;
}

std::vector<std::vector<double>> ascending_simplex_grid(int n, double step) {
  if (n < 1) throw InvalidArgumentError("UT count must be >= 1");
  const double cells = 1.0 / step;
  const int m = static_cast<int>(std::lround(cells));
  if (std::fabs(cells - m) > 1e-9) throw InvalidArgumentError("grid step must divide 1");
  if (m < n) throw InvalidArgumentError("grid step too coarse for this UT count");

  std::vector<std::vector<double>> grid;
  std::vector<int> parts(n);
  auto rec = [&](auto&& self, int idx, int remaining, int minimum) -> void {
    if (idx == n - 1) {
      if (remaining >= minimum) {
        parts[idx] = remaining;
        std::vector<double> pa(n);
        double head = 0.0;
        for (int i = 0; i < n; ++i) pa[i] = parts[i] * step;
        for (int i = 0; i + 1 < n; ++i) head += pa[i];
        pa[n - 1] = 1.0 - head;  // exact simplex closure
        grid.push_back(std::move(pa));
      }
      return;
    }
    const int slots_left = n - idx;
    for (int v = minimum; v * slots_left <= remaining; ++v) {
      parts[idx] = v;
      self(self, idx + 1, remaining - v, v);
    }
  };
  rec(rec, 0, m, 1);
  return grid;
}

FpaOptimum optimize_fpa(int n, double theta_linear, const DerivedConstants& k,
                        const FadingModel& fading, Ordering ordering, double step,
                        const SeOptions& opts, int threads) {
  const std::vector<std::vector<double>> grid = ascending_simplex_grid(n, step);
  std::vector<double> scores(grid.size(), -1.0);

  parallel_for(grid.size(), threads, [&](std::size_t g) {
    NomaSetup setup = NomaSetup::uniform_threshold(n, ordering, grid[g], theta_linear, 0.0);
    if (!effective_pa(setup).feasible) return;  // score stays -1: skipped
    scores[g] = sum_se_noma(setup, k, fading, opts).sum_se;
  });

  FpaOptimum best;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (scores[g] < 0.0) continue;
    const bool better = !best.feasible_found || scores[g] > best.sum_se ||
                        (scores[g] == best.sum_se && grid[g] < best.pa);
    if (better) {
      best.feasible_found = true;
      best.sum_se = scores[g];
      best.pa = grid[g];
    }
  }
  return best;
}

UtCountOptimum optimize_ut_count(double theta_linear, const DerivedConstants& k,
                                 const FadingModel& fading, Ordering ordering, int n_max,
                                 double step, const SeOptions& opts, int threads) {
  if (n_max < 1) throw InvalidArgumentError("n_max must be >= 1");
  UtCountOptimum out;
  for (int n = 1; n <= n_max; ++n) {
    FpaOptimum cand = optimize_fpa(n, theta_linear, k, fading, ordering, step, opts, threads);
    if (!cand.feasible_found) continue;
    if (!out.best.feasible_found || cand.sum_se > out.best.sum_se) {
      out.best = std::move(cand);
      out.num_uts = n;
    }
  }
  return out;
}

}  // namespace leonoma
