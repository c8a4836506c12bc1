#include "coverage.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "errors.hpp"
#include "geometry.hpp"
#include "interference.hpp"
#include "quadrature.hpp"

namespace leonoma {

NomaSetup NomaSetup::uniform_threshold(int num_uts, Ordering ordering, std::vector<double> pa,
                                       double theta_linear, double ri_factor) {
  NomaSetup s;
  s.num_uts = num_uts;
  s.ordering = ordering;
  s.pa = std::move(pa);
  s.ri_factor = ri_factor;
  s.thresholds.assign(num_uts, theta_linear);
  s.check();
  return s;
}

void NomaSetup::check() const {
  if (num_uts < 1) throw InvalidArgumentError("num_uts must be >= 1");
  if (static_cast<int>(pa.size()) != num_uts || static_cast<int>(thresholds.size()) != num_uts)
    throw InvalidArgumentError("pa/thresholds size must equal num_uts");
  double sum = 0.0;
  for (double p : pa) {
    if (!(p > 0.0 && p < 1.0 + 1e-12)) throw InvalidArgumentError("pa coefficients must lie in (0,1]");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw InvalidArgumentError("pa coefficients must sum to 1");
  if (!(ri_factor >= 0.0 && ri_factor <= 1.0))
    throw InvalidArgumentError("ri_factor must lie in [0,1]");
  for (double t : thresholds)
    if (!(t > 0.0)) throw InvalidArgumentError("thresholds must be positive");
}

EffectivePa effective_pa(const NomaSetup& setup) {
  setup.check();
  const int n = setup.num_uts;
  EffectivePa out;
  out.p_tilde.resize(n);
  double prefix = 0.0;
  double total = 0.0;
  for (double p : setup.pa) total += p;
  for (int j = 0; j < n; ++j) {
    const double suffix = total - prefix - setup.pa[j];
    out.p_tilde[j] = setup.pa[j] - setup.thresholds[j] * (prefix + setup.ri_factor * suffix);
    prefix += setup.pa[j];
  }
  out.feasible = true;
  for (double pt : out.p_tilde)
    if (!(pt > 0.0)) out.feasible = false;
  if (!out.feasible) return out;

  out.q.resize(n);
  double running = -std::numeric_limits<double>::infinity();
  for (int j = n - 1; j >= 0; --j) {
    running = std::max(running, setup.thresholds[j] / out.p_tilde[j]);
    out.q[j] = running;
  }
  return out;
}

double feasibility_boundary_theta(const std::vector<double>& pa, double ri_factor) {
  const int n = static_cast<int>(pa.size());
  auto min_ptilde = [&](double theta) {
    double prefix = 0.0, total = 0.0, worst = std::numeric_limits<double>::infinity();
    for (double p : pa) total += p;
    for (int j = 0; j < n; ++j) {
      const double suffix = total - prefix - pa[j];
      worst = std::min(worst, pa[j] - theta * (prefix + ri_factor * suffix));
      prefix += pa[j];
    }
    return worst;
  };
  double hi = 1.0;
  while (min_ptilde(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e15) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (min_ptilde(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// Integrand of the Theorem-1 inner sum at a single (s, r) node:
// sum_{k=0}^{kappa-1} s^k/k! (-1)^k d^k L_{I+sigma^2}(s)/ds^k.
double ccdf_kernel(double s, double r_m, const DerivedConstants& k, const FadingModel& fading,
                   CoveragePath path) {
  const int kappa = fading.shape_kappa;
  if (path == CoveragePath::kAuto)
    path = kappa <= 2 ? CoveragePath::kClosedForm : CoveragePath::kJet;

  if (path == CoveragePath::kClosedForm && kappa == 1) return laplace_inter_noise(s, r_m, k, fading);
  if (path == CoveragePath::kClosedForm && kappa == 2) {
    const double l = laplace_inter(s, r_m, k, fading);
    const double dl = laplace_inter_deriv1_closed(s, r_m, k, fading);
    return ((1.0 + s * k.norm_noise) * l - s * dl) * std::exp(-s * k.norm_noise);
  }

  Jet seed = Jet::variable(s, kappa - 1);
  Jet lt = laplace_inter_noise(seed, r_m, k, fading);
  double sum = 0.0;
  double neg_s_pow = 1.0;  // (-s)^k
  for (int j = 0; j < kappa; ++j) {
    sum += neg_s_pow * lt.coeff(j);
    neg_s_pow *= -s;
  }
  return sum;
}

// P = int_l pdf_l(l) int_r kernel(beta l^alpha q, r) f_R(r) dr dl.
template <class PdfL>
double coverage_double_integral(double q, PdfL&& pdf_l, const DerivedConstants& k,
                                const FadingModel& fading, const AnalyticOptions& opts) {
  auto outer = [&](double l) {
    const double w = pdf_l(l);
    if (w == 0.0) return 0.0;
    const double s = fading.rate_beta * std::pow(l, k.pathloss_exponent) * q;
    auto inner = [&](double r) {
      return ccdf_kernel(s, r, k, fading, opts.path) * pdf_nearest_interferer(r, k, true);
    };
    return w * integrate<double>(inner, k.r_min_m, k.r_max_m, opts.rel_tol).value;
  };
  return integrate<double>(outer, k.l_min_m, k.l_max_m, opts.rel_tol).value;
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

double binomial(int n, int j) {
  double r = 1.0;
  for (int i = 1; i <= j; ++i) r = r * (n - j + i) / i;
  return r;
}

double ordered_tail(double fz, int rank_i, int n) {
  double acc = 0.0;
  for (int j = n + 1 - rank_i; j <= n; ++j)
    acc += binomial(n, j) * std::pow(fz, j) * std::pow(1.0 - fz, n - j);
  return acc;
}

}  // namespace

double coverage_msp(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                    int ut_index, const AnalyticOptions& opts) {
  if (ut_index < 1 || ut_index > setup.num_uts) throw InvalidArgumentError("ut_index out of range");
  const EffectivePa ep = effective_pa(setup);
  if (!ep.feasible) return 0.0;
  auto pdf = [&](double l) {
    return pdf_ordered_link_distance(l, ut_index, setup.num_uts, k);
  };
  return clamp01(coverage_double_integral(ep.q[ut_index - 1], pdf, k, fading, opts));
}

double cdf_unordered_isinr(double x, const DerivedConstants& k, const FadingModel& fading,
                           const AnalyticOptions& opts) {
  if (!(x >= 0.0)) throw InvalidArgumentError("ISINR CDF argument must be >= 0");
  if (x == 0.0) return 0.0;
  auto pdf = [&](double l) { return pdf_link_distance(l, k); };
  return clamp01(1.0 - coverage_double_integral(x, pdf, k, fading, opts));
}

double coverage_isinr(const NomaSetup& setup, const DerivedConstants& k, const FadingModel& fading,
                      int ut_index, const AnalyticOptions& opts) {
  if (ut_index < 1 || ut_index > setup.num_uts) throw InvalidArgumentError("ut_index out of range");
  const EffectivePa ep = effective_pa(setup);
  if (!ep.feasible) return 0.0;
  const double fz = cdf_unordered_isinr(ep.q[ut_index - 1], k, fading, opts);
  return clamp01(1.0 - ordered_tail(fz, ut_index, setup.num_uts));
}

double coverage_oma(const DerivedConstants& k, const FadingModel& fading, int ut_index,
                    int num_uts, double theta_linear, Ordering ordering,
                    const AnalyticOptions& opts) {
  if (ut_index < 1 || ut_index > num_uts) throw InvalidArgumentError("ut_index out of range");
  if (!(theta_linear > 0.0)) throw InvalidArgumentError("theta must be positive");
  if (ordering == Ordering::kMsp) {
    auto pdf = [&](double l) { return pdf_ordered_link_distance(l, ut_index, num_uts, k); };
    return clamp01(coverage_double_integral(theta_linear, pdf, k, fading, opts));
  }
  const double fz = cdf_unordered_isinr(theta_linear, k, fading, opts);
  return clamp01(1.0 - ordered_tail(fz, ut_index, num_uts));
}

CoverageResult coverage_analytic(const NomaSetup& setup, const DerivedConstants& k,
                                 const FadingModel& fading, const AnalyticOptions& opts) {
  CoverageResult res;
  res.mode = CoverageMode::kAnalytic;
  res.conditioning = Conditioning::kConditional;
  res.per_ut.resize(setup.num_uts);
  for (int i = 1; i <= setup.num_uts; ++i)
    res.per_ut[i - 1] = setup.ordering == Ordering::kMsp
                            ? coverage_msp(setup, k, fading, i, opts)
                            : coverage_isinr(setup, k, fading, i, opts);
  double sum = 0.0;
  for (double p : res.per_ut) sum += p;
  res.mean = sum / setup.num_uts;
  std::ostringstream meta;
  meta << "engine=analytic rel_tol=" << opts.rel_tol << " kappa=" << fading.shape_kappa;
  res.metadata = meta.str();
  return res;
}

double unconditional_scale(const DerivedConstants& k) { return interferer_presence_probability(k); }

CoverageResult unconditional_coverage(const CoverageResult& result, const DerivedConstants& k) {
  if (result.conditioning == Conditioning::kUnconditional)
    throw InvalidArgumentError("coverage result is already unconditional");
  CoverageResult out = result;
  const double scale = unconditional_scale(k);
  for (double& p : out.per_ut) p *= scale;
  out.mean *= scale;
  out.conditioning = Conditioning::kUnconditional;
  return out;
}

}  // namespace leonoma
