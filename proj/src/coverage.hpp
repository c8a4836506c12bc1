#ifndef LEONOMA_COVERAGE_HPP
#define LEONOMA_COVERAGE_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace leonoma {

enum class Ordering { kMsp, kIsinr };

struct NomaSetup {
  int num_uts = 1;
  Ordering ordering = Ordering::kMsp;
  std::vector<double> pa;          // power-allocation coefficients, by UT rank
  double ri_factor = 0.0;          // residual intra-interference factor
  std::vector<double> thresholds;  // linear SINR targets, one per UT

  static NomaSetup uniform_threshold(int num_uts, Ordering ordering, std::vector<double> pa,
                                     double theta_linear, double ri_factor);
  // Invariants: sum(pa) == 1 within 1e-9, pa > 0, ri in [0,1], thresholds > 0.
  void check() const;
};

struct EffectivePa {
  std::vector<double> p_tilde;  // p_j - theta_j (sum_{m<j} p_m + ri sum_{k>j} p_k)
  std::vector<double> q;        // suffix max of theta_j / p_tilde_j (empty if infeasible)
  bool feasible = false;
};

// Infeasibility (any p_tilde <= 0) is a value, not an error: the whole SIC
// chain fails and every UT is out of coverage.
EffectivePa effective_pa(const NomaSetup& setup);

// Largest uniform threshold keeping all p_tilde positive, located by
// bisection on min_j p_tilde_j(theta). Returns +inf when no finite boundary
// exists (single UT with ri = 0).
double feasibility_boundary_theta(const std::vector<double>& pa, double ri_factor);

enum class CoveragePath { kAuto, kClosedForm, kJet };

struct AnalyticOptions {
  CoveragePath path = CoveragePath::kAuto;
  double rel_tol = 1e-8;
};

// Theorem-style double integral for the typical UT_i under MSP ordering.
double coverage_msp(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                    int ut_index, const AnalyticOptions& opts = {});

// CDF of the unordered ISINR Z.
double cdf_unordered_isinr(double x, const DerivedConstants& k, const FadingModel& fading,
                           const AnalyticOptions& opts = {});

// Order-statistics coverage for UT_i under ISINR ordering.
double coverage_isinr(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                      int ut_index, const AnalyticOptions& opts = {});

// OMA counterpart: the same expressions with Q_i replaced by theta.
double coverage_oma(const DerivedConstants& k, const FadingModel& fading, int ut_index,
                    int num_uts, double theta_linear, Ordering ordering,
                    const AnalyticOptions& opts = {});

enum class CoverageMode { kAnalytic, kMonteCarlo };
enum class Conditioning { kConditional, kUnconditional };

struct CoverageResult {
  std::vector<double> per_ut;
  double mean = 0.0;
  CoverageMode mode = CoverageMode::kAnalytic;
  Conditioning conditioning = Conditioning::kConditional;
  std::string metadata;
};

CoverageResult coverage_analytic(const NomaSetup& setup, const DerivedConstants& k,
                                 const FadingModel& fading, const AnalyticOptions& opts = {});

// Scale factor between conditional and unconditional coverage:
// 1 - exp(-lambda 2 pi (R_S - R_E) R_S).
double unconditional_scale(const DerivedConstants& k);

// Applies the scale; throws InvalidArgumentError if already unconditional.
CoverageResult unconditional_coverage(const CoverageResult& result, const DerivedConstants& k);

}  // namespace leonoma

#endif
