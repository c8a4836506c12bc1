#ifndef LEONOMA_ALLOCATION_HPP
#define LEONOMA_ALLOCATION_HPP

#include <vector>

#include "config.hpp"
#include "coverage.hpp"

namespace leonoma {

enum class PaSchemeKind { kEtpa, kErpa, kFpa };

// Equal transmitted power: p_i = 1/n, constructed so the sum is exactly 1.
std::vector<double> etpa(int n);

// Equal received power built on the mean ordered link distances:
// p_i proportional to mean(L_i)^alpha, so p_i l_i^-alpha is constant.
std::vector<double> erpa(int n, const DerivedConstants& k, const FadingModel& fading);

// Table-1 units are bits/s/Hz (base-2); the natural-log variant is kept
// behind this switch.
enum class SeLogBase { kBase2, kNatural };

struct SeResult {
  std::vector<double> per_ut_se;    // bits/s/Hz (or nats with kNatural)
  double sum_se = 0.0;
  std::vector<double> per_ut_rate;  // bandwidth * SE
  bool noma = true;
};

struct SeOptions {
  AnalyticOptions analytic;
  SeLogBase log_base = SeLogBase::kBase2;
};

SeResult sum_se_noma(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                     const SeOptions& opts = {});

// OMA benchmark: time-sharing with t_i = 1/n and per-UT coverage at theta_i.
SeResult sum_se_oma(int n, const std::vector<double>& thresholds, const DerivedConstants& k,
                    const FadingModel& fading, Ordering ordering, const SeOptions& opts = {});

struct FpaOptimum {
  std::vector<double> pa;  // empty when no feasible grid point exists
  double sum_se = 0.0;
  bool feasible_found = false;
};

// Exhaustive search over the ascending simplex grid {p_i in {step, 2 step,
// ...}, sum = 1, p_1 <= ... <= p_n}, skipping infeasible points. Ties break
// to the lexicographically smallest PA vector.
FpaOptimum optimize_fpa(int n, double theta_linear, const DerivedConstants& k,
                        const FadingModel& fading, Ordering ordering, double step = 0.05,
                        const SeOptions& opts = {}, int threads = 0);

struct UtCountOptimum {
  int num_uts = 1;
  FpaOptimum best;
};

UtCountOptimum optimize_ut_count(double theta_linear, const DerivedConstants& k,
                                 const FadingModel& fading, Ordering ordering, int n_max = 8,
                                 double step = 0.05, const SeOptions& opts = {}, int threads = 0);

// All ascending compositions of 1/step into n positive multiples of step.
std::vector<std::vector<double>> ascending_simplex_grid(int n, double step);

}  // namespace leonoma

#endif
