#include "montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "units.hpp"

namespace leonoma {

namespace {

constexpr std::uint64_t kTagConstellation = 0;
constexpr std::uint64_t kTagUts = 1;
constexpr std::uint64_t kTagServingFade = 2;
constexpr std::uint64_t kTagInterfererFade = 3;

struct TrialDraw {
  std::vector<double> slant;   // per UT, unordered draw order
  std::vector<double> h2;      // serving fading power per UT
  std::vector<double> inter;   // inter-satellite interference per UT
  int attempts = 1;
};

// Everything random about one trial, for one constellation model.
TrialDraw draw_trial(std::uint64_t seed, std::uint64_t trial, int num_uts,
                     const DerivedConstants& k, const FadingModel& fading, const McOptions& opts,
                     ConstellationModel model) {
  TrialDraw d;
  RngStream rng_const = RngStream::substream(seed, trial, kTagConstellation);
  RngStream rng_uts = RngStream::substream(seed, trial, kTagUts);
  RngStream rng_h = RngStream::substream(seed, trial, kTagServingFade);
  RngStream rng_g = RngStream::substream(seed, trial, kTagInterfererFade);

  ConstellationSample sample =
      model == ConstellationModel::kSppp
          ? sample_constellation_sppp(k, rng_const, opts.rejection_budget)
          : sample_constellation_walker(opts.walker, k, rng_const);
  d.attempts = sample.attempts;

  const std::vector<UtSample> uts =
      sample_uts(num_uts, k, sample.origin_dir, rng_uts, opts.exact_cap_uts);
  const Vec3 origin = sample.origin_dir * k.earth_radius_m;

  d.slant.resize(num_uts);
  d.h2.resize(num_uts);
  d.inter.assign(num_uts, 0.0);
  for (int i = 0; i < num_uts; ++i) {
    d.slant[i] = uts[i].slant_m;
    d.h2[i] = rng_h.erlang(fading.shape_kappa, fading.rate_beta);
  }

  const double alpha = k.pathloss_exponent;
  for (std::size_t sidx = 0; sidx < sample.satellites.size(); ++sidx) {
    if (sidx == sample.typical_index) continue;
    const Vec3& sat = sample.satellites[sidx];
    const double r_o = (sat - origin).norm();
    if (r_o <= k.r_min_m || r_o > k.r_max_m) continue;  // below horizon or degenerate
    for (int i = 0; i < num_uts; ++i) {
      const double g2 = rng_g.erlang(fading.shape_kappa, fading.rate_beta);
      const double dist = opts.paper_faithful_distances ? r_o : (sat - uts[i].position).norm();
      d.inter[i] += k.gain_ratio * std::pow(dist, -alpha) * g2;
    }
  }
  return d;
}

std::vector<int> rank_order(const TrialDraw& d, Ordering ordering, double norm_noise,
                            double alpha) {
  const int n = static_cast<int>(d.slant.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (ordering == Ordering::kMsp) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.slant[a] < d.slant[b]; });
  } else {
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i)
      z[i] = std::pow(d.slant[i], -alpha) * d.h2[i] / (d.inter[i] + norm_noise);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });
  }
  return order;
}

std::vector<double> policy_pa(const McPaPolicy& policy, const std::vector<double>& ordered_slant,
                              double alpha) {
  const int n = static_cast<int>(ordered_slant.size());
  switch (policy.kind) {
    case PaSchemeKind::kEtpa:
      return etpa(n);
    case PaSchemeKind::kFpa:
      return policy.fpa_coefficients;
    case PaSchemeKind::kErpa: {
      std::vector<double> pa(n);
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        pa[i] = std::pow(ordered_slant[i], alpha);
        total += pa[i];
      }
      for (double& p : pa) p /= total;
      return pa;
    }
  }
  return {};
}

McCoverage finalize(const std::vector<std::uint64_t>& counts, int num_uts, std::uint64_t trials,
                    double acceptance) {
  McCoverage cov;
  cov.trials = trials;
  cov.acceptance_rate = acceptance;
  cov.per_ut.resize(num_uts);
  cov.std_err.resize(num_uts);
  double sum = 0.0;
  for (int i = 0; i < num_uts; ++i) {
    const double p = static_cast<double>(counts[i]) / static_cast<double>(trials);
    cov.per_ut[i] = p;
    cov.std_err[i] = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    sum += p;
  }
  cov.mean = sum / num_uts;
  return cov;
}

// Evaluates the joint coverage indicators for one trial on the theta grid and
// adds them into counts[theta][ut].
void accumulate_noma(const TrialDraw& d, Ordering ordering, double ri, const McPaPolicy& policy,
                     const std::vector<double>& thetas, const DerivedConstants& k,
                     std::vector<std::vector<std::uint64_t>>& counts) {
  const int n = static_cast<int>(d.slant.size());
  const double alpha = k.pathloss_exponent;
  const std::vector<int> order = rank_order(d, ordering, k.norm_noise, alpha);

  std::vector<double> slant_o(n), x_o(n), i_o(n);
  for (int i = 0; i < n; ++i) {
    slant_o[i] = d.slant[order[i]];
    x_o[i] = std::pow(d.slant[order[i]], -alpha) * d.h2[order[i]];
    i_o[i] = d.inter[order[i]];
  }
  const std::vector<double> pa = policy_pa(policy, slant_o, alpha);

  std::vector<double> prefix(n + 1, 0.0);
  for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + pa[j];
  const double total = prefix[n];

  std::vector<double> ptilde(n);
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const double theta = thetas[t];
    bool feasible = true;
    for (int j = 0; j < n; ++j) {
      ptilde[j] = pa[j] - theta * (prefix[j] + ri * (total - prefix[j + 1]));
      if (!(ptilde[j] > 0.0)) feasible = false;
    }
    if (!feasible) continue;  // all UTs out of coverage at this threshold
    // UT_i is covered when SINR_j^i > theta for every j >= i, i.e.
    // ptilde_j X_i > theta (I_i + noise).
    for (int i = n - 1; i >= 0; --i) {
      bool ok = true;
      for (int j = i; j < n && ok; ++j)
        ok = ptilde[j] * x_o[i] > theta * (i_o[i] + k.norm_noise);
      if (ok) counts[t][i] += 1;
    }
  }
}

void accumulate_oma(const TrialDraw& d, Ordering ordering, const std::vector<double>& thetas,
                    const DerivedConstants& k, std::vector<std::vector<std::uint64_t>>& counts) {
  const int n = static_cast<int>(d.slant.size());
  const double alpha = k.pathloss_exponent;
  const std::vector<int> order = rank_order(d, ordering, k.norm_noise, alpha);
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    for (int i = 0; i < n; ++i) {
      const int u = order[i];
      const double sinr =
          std::pow(d.slant[u], -alpha) * d.h2[u] / (d.inter[u] + k.norm_noise);
      if (sinr > thetas[t]) counts[t][i] += 1;
    }
  }
}

struct GridRun {
  std::vector<std::vector<std::uint64_t>> counts;  // [theta][ut]
  std::uint64_t attempts = 0;
};

template <class Accumulate>
GridRun run_trials(int num_uts, std::size_t n_thetas, const DerivedConstants& k,
                   const FadingModel& fading, const McOptions& opts, ConstellationModel model,
                   Accumulate&& accumulate) {
  const int threads = opts.threads > 0 ? opts.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
  const int nt = std::max(1, threads);
  std::vector<GridRun> partial(nt);
  for (auto& p : partial) p.counts.assign(n_thetas, std::vector<std::uint64_t>(num_uts, 0));

  parallel_for(static_cast<std::size_t>(nt), nt, [&](std::size_t worker) {
    GridRun& mine = partial[worker];
    for (std::uint64_t trial = worker; trial < opts.trials; trial += nt) {
      TrialDraw d = draw_trial(opts.seed, trial, num_uts, k, fading, opts, model);
      mine.attempts += d.attempts;
      accumulate(d, mine.counts);
    }
  });

  GridRun total;
  total.counts.assign(n_thetas, std::vector<std::uint64_t>(num_uts, 0));
  for (const auto& p : partial) {
    total.attempts += p.attempts;
    for (std::size_t t = 0; t < n_thetas; ++t)
      for (int i = 0; i < num_uts; ++i) total.counts[t][i] += p.counts[t][i];
  }
  return total;
}

}  // namespace

std::vector<McCoverage> simulate_coverage_grid(int num_uts, Ordering ordering, double ri_factor,
                                               const McPaPolicy& pa_policy,
                                               const std::vector<double>& thetas_linear,
                                               const DerivedConstants& k,
                                               const FadingModel& fading, const McOptions& opts) {
  if (opts.trials < 1) throw InvalidArgumentError("trials must be >= 1");
  if (pa_policy.kind == PaSchemeKind::kFpa &&
      static_cast<int>(pa_policy.fpa_coefficients.size()) != num_uts)
    throw InvalidArgumentError("FPA policy vector size must equal num_uts");

  GridRun run = run_trials(
      num_uts, thetas_linear.size(), k, fading, opts, opts.model,
      [&](const TrialDraw& d, std::vector<std::vector<std::uint64_t>>& counts) {
        accumulate_noma(d, ordering, ri_factor, pa_policy, thetas_linear, k, counts);
      });

  const double acceptance =
      static_cast<double>(opts.trials) / static_cast<double>(std::max<std::uint64_t>(1, run.attempts));
  std::vector<McCoverage> out;
  out.reserve(thetas_linear.size());
  for (std::size_t t = 0; t < thetas_linear.size(); ++t)
    out.push_back(finalize(run.counts[t], num_uts, opts.trials, acceptance));
  return out;
}

McCoverage simulate_coverage(const NomaSetup& setup, const DerivedConstants& k,
                             const FadingModel& fading, const McOptions& opts) {
  setup.check();
  for (double t : setup.thresholds)
    if (t != setup.thresholds[0])
      throw InvalidArgumentError("simulate_coverage expects a uniform threshold");
  auto grid = simulate_coverage_grid(setup.num_uts, setup.ordering, setup.ri_factor,
                                     McPaPolicy::fpa(setup.pa), {setup.thresholds[0]}, k, fading,
                                     opts);
  return grid[0];
}

std::vector<McCoverage> simulate_coverage_oma_grid(int num_uts, Ordering ordering,
                                                   const std::vector<double>& thetas_linear,
                                                   const DerivedConstants& k,
                                                   const FadingModel& fading,
                                                   const McOptions& opts) {
  GridRun run = run_trials(num_uts, thetas_linear.size(), k, fading, opts, opts.model,
                           [&](const TrialDraw& d, std::vector<std::vector<std::uint64_t>>& c) {
                             accumulate_oma(d, ordering, thetas_linear, k, c);
                           });
  const double acceptance =
      static_cast<double>(opts.trials) / static_cast<double>(std::max<std::uint64_t>(1, run.attempts));
  std::vector<McCoverage> out;
  for (std::size_t t = 0; t < thetas_linear.size(); ++t)
    out.push_back(finalize(run.counts[t], num_uts, opts.trials, acceptance));
  return out;
}

McSeResult simulate_sum_se(int num_uts, Ordering ordering, double ri_factor,
                           const McPaPolicy& pa_policy, double theta_linear,
                           const DerivedConstants& k, const FadingModel& fading,
                           const McOptions& opts, SeLogBase log_base) {
  const auto grid = simulate_coverage_grid(num_uts, ordering, ri_factor, pa_policy,
                                           {theta_linear}, k, fading, opts);
  const McCoverage& cov = grid[0];
  const double lg = log_base == SeLogBase::kBase2 ? std::log2(1.0 + theta_linear)
                                                  : std::log(1.0 + theta_linear);
  McSeResult res;
  res.se.noma = true;
  res.se.per_ut_se.resize(num_uts);
  res.se.per_ut_rate.resize(num_uts);
  res.per_ut_stderr.resize(num_uts);
  double var = 0.0;
  for (int i = 0; i < num_uts; ++i) {
    res.se.per_ut_se[i] = cov.per_ut[i] * lg;
    res.se.per_ut_rate[i] = k.bandwidth_hz * res.se.per_ut_se[i];
    res.se.sum_se += res.se.per_ut_se[i];
    res.per_ut_stderr[i] = cov.std_err[i] * lg;
    var += res.per_ut_stderr[i] * res.per_ut_stderr[i];
  }
  res.sum_stderr = std::sqrt(var);
  return res;
}

ConstellationComparison compare_constellations(int num_uts, Ordering ordering, double ri_factor,
                                               const McPaPolicy& pa_policy,
                                               const std::vector<double>& thetas_linear,
                                               const DerivedConstants& k,
                                               const FadingModel& fading, const McOptions& opts,
                                               ConstellationModel second_model) {
  ConstellationComparison cmp;
  McOptions first_opts = opts;
  cmp.first = simulate_coverage_grid(num_uts, ordering, ri_factor, pa_policy, thetas_linear, k,
                                     fading, first_opts);
  McOptions second_opts = opts;
  second_opts.model = second_model;
  cmp.second = simulate_coverage_grid(num_uts, ordering, ri_factor, pa_policy, thetas_linear, k,
                                      fading, second_opts);

  cmp.per_theta_gap.assign(thetas_linear.size(), 0.0);
  for (std::size_t t = 0; t < thetas_linear.size(); ++t) {
    for (int i = 0; i < num_uts; ++i) {
      const double gap = std::fabs(cmp.first[t].per_ut[i] - cmp.second[t].per_ut[i]);
      cmp.per_theta_gap[t] = std::max(cmp.per_theta_gap[t], gap);
      cmp.max_abs_gap = std::max(cmp.max_abs_gap, gap);
    }
  }
  return cmp;
}

std::vector<double> sample_unordered_isinr(std::uint64_t samples, const DerivedConstants& k,
                                           const FadingModel& fading, const McOptions& opts) {
  std::vector<double> z(samples);
  McOptions local = opts;
  local.trials = samples;
  parallel_for(static_cast<std::size_t>(samples), opts.threads, [&](std::size_t trial) {
    TrialDraw d = draw_trial(opts.seed, trial, 1, k, fading, local, local.model);
    z[trial] = std::pow(d.slant[0], -k.pathloss_exponent) * d.h2[0] / (d.inter[0] + k.norm_noise);
  });
  return z;
}

}  // namespace leonoma
