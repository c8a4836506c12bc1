#ifndef LEONOMA_MONTECARLO_HPP
#define LEONOMA_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "allocation.hpp"
#include "config.hpp"
#include "coverage.hpp"
#include "geometry.hpp"

namespace leonoma {

struct McOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  ConstellationModel model = ConstellationModel::kSppp;
  WalkerDeltaParams walker;
  // Replace exact per-UT interferer distances with the distance to O, the
  // approximation the analytics bake in.
  bool paper_faithful_distances = false;
  bool exact_cap_uts = false;
  int threads = 0;
  int rejection_budget = 10000;
};

// A coverage estimate per UT with binomial standard errors.
struct McCoverage {
  std::vector<double> per_ut;
  std::vector<double> std_err;
  double mean = 0.0;
  std::uint64_t trials = 0;
  double acceptance_rate = 1.0;  // SPPP conditioning acceptance
};

// PA policy for a simulation run. ERPA is recomputed from the drawn ordered
// link distances in every trial; ETPA/FPA are fixed vectors.
struct McPaPolicy {
  PaSchemeKind kind = PaSchemeKind::kEtpa;
  std::vector<double> fpa_coefficients;  // required iff kind == kFpa

  static McPaPolicy etpa() { return {PaSchemeKind::kEtpa, {}}; }
  static McPaPolicy erpa() { return {PaSchemeKind::kErpa, {}}; }
  static McPaPolicy fpa(std::vector<double> pa) { return {PaSchemeKind::kFpa, std::move(pa)}; }
};

// One pass over the trials evaluating the joint SIC coverage event at every
// threshold on the grid (thresholds are uniform across UTs per grid point).
std::vector<McCoverage> simulate_coverage_grid(int num_uts, Ordering ordering, double ri_factor,
                                               const McPaPolicy& pa_policy,
                                               const std::vector<double>& thetas_linear,
                                               const DerivedConstants& k,
                                               const FadingModel& fading, const McOptions& opts);

// Single setup (fixed PA vector from the setup itself).
McCoverage simulate_coverage(const NomaSetup& setup, const DerivedConstants& k,
                             const FadingModel& fading, const McOptions& opts);

// OMA joint-free event SINR_i > theta_i, same trials layout as above.
std::vector<McCoverage> simulate_coverage_oma_grid(int num_uts, Ordering ordering,
                                                   const std::vector<double>& thetas_linear,
                                                   const DerivedConstants& k,
                                                   const FadingModel& fading,
                                                   const McOptions& opts);

struct McSeResult {
  SeResult se;
  std::vector<double> per_ut_stderr;
  double sum_stderr = 0.0;
};

McSeResult simulate_sum_se(int num_uts, Ordering ordering, double ri_factor,
                           const McPaPolicy& pa_policy, double theta_linear,
                           const DerivedConstants& k, const FadingModel& fading,
                           const McOptions& opts, SeLogBase log_base = SeLogBase::kBase2);

// Same-seed comparison of two constellation models on a threshold grid; UT
// positions and fading draws are common random numbers, so comparing a model
// against itself yields exactly zero gap.
struct ConstellationComparison {
  std::vector<McCoverage> first;   // opts.model
  std::vector<McCoverage> second;  // walker (or the comparison model)
  double max_abs_gap = 0.0;
  std::vector<double> per_theta_gap;
};

ConstellationComparison compare_constellations(int num_uts, Ordering ordering, double ri_factor,
                                               const McPaPolicy& pa_policy,
                                               const std::vector<double>& thetas_linear,
                                               const DerivedConstants& k,
                                               const FadingModel& fading, const McOptions& opts,
                                               ConstellationModel second_model);

// Empirical CDF sample of the unordered ISINR Z (for distribution checks).
std::vector<double> sample_unordered_isinr(std::uint64_t samples, const DerivedConstants& k,
                                           const FadingModel& fading, const McOptions& opts);

}  // namespace leonoma

#endif
