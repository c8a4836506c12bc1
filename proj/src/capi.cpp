#include "leonoma.h"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "allocation.hpp"
#include "config.hpp"
#include "coverage.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "interference.hpp"
#include "montecarlo.hpp"
#include "rng.hpp"
#include "units.hpp"

using namespace leonoma;

struct ln_model {
  SystemConfig cfg;
  FadingModel fading;
  DerivedConstants derived;

  void rebuild() { derived = build_derived(cfg); }
};

struct ln_setup {
  NomaSetup setup;
  PaSchemeKind scheme = PaSchemeKind::kEtpa;
};

namespace {

thread_local std::string g_last_error;

ln_status fail(ln_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <class Fn>
ln_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    return fail(LN_ERR_BAD_CONFIG, e.what());
  } catch (const IllConditionedError& e) {
    return fail(LN_ERR_ILL_CONDITIONED, e.what());
  } catch (const NumericError& e) {
    return fail(LN_ERR_NUMERIC, e.what());
  } catch (const RejectionBudgetError& e) {
    return fail(LN_ERR_REJECTION_BUDGET, e.what());
  } catch (const IoError& e) {
    return fail(LN_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LN_ERR_INTERNAL, e.what());
  }
}

bool check_out(const void* p) { return p != nullptr; }

Ordering to_ordering(ln_ordering o) { return o == LN_ORDER_MSP ? Ordering::kMsp : Ordering::kIsinr; }

SeLogBase to_log_base(ln_log_base b) {
  return b == LN_LOG_BASE2 ? SeLogBase::kBase2 : SeLogBase::kNatural;
}

AnalyticOptions to_analytic(ln_path path) {
  AnalyticOptions o;
  o.path = path == LN_PATH_CLOSED ? CoveragePath::kClosedForm
                                  : (path == LN_PATH_JET ? CoveragePath::kJet : CoveragePath::kAuto);
  return o;
}

McOptions to_mc_options(const ln_model* model, const ln_mc_options* o) {
  McOptions mc;
  if (!o) return mc;
  mc.trials = o->trials;
  mc.seed = o->seed;
  mc.model = o->constellation == LN_CONST_WALKER_DELTA ? ConstellationModel::kWalkerDelta
                                                       : ConstellationModel::kSppp;
  mc.walker.total_satellites = o->walker.total_satellites;
  mc.walker.num_planes = o->walker.num_planes;
  mc.walker.inclination_deg = o->walker.inclination_deg;
  mc.walker.phasing_factor = o->walker.phasing_factor;
  mc.paper_faithful_distances = o->paper_faithful_distances != 0;
  mc.threads = o->threads;
  (void)model;
  return mc;
}

std::vector<double> build_pa(const ln_model* model, int num_uts, ln_pa_scheme scheme,
                             const double* fpa) {
  switch (scheme) {
    case LN_PA_ETPA:
      return etpa(num_uts);
    case LN_PA_ERPA:
      return erpa(num_uts, model->derived, model->fading);
    case LN_PA_FPA: {
      if (!fpa) throw InvalidArgumentError("FPA scheme requires explicit coefficients");
      return std::vector<double>(fpa, fpa + num_uts);
    }
  }
  throw InvalidArgumentError("unknown PA scheme");
}

McPaPolicy to_policy(int num_uts, ln_pa_scheme scheme, const double* fpa) {
  switch (scheme) {
    case LN_PA_ETPA:
      return McPaPolicy::etpa();
    case LN_PA_ERPA:
      return McPaPolicy::erpa();
    case LN_PA_FPA:
      if (!fpa) throw InvalidArgumentError("FPA scheme requires explicit coefficients");
      return McPaPolicy::fpa(std::vector<double>(fpa, fpa + num_uts));
  }
  throw InvalidArgumentError("unknown PA scheme");
}

struct ModelKey {
  const char* name;
  double SystemConfig::*member;
};

constexpr ModelKey kModelKeys[] = {
    {"earth_radius_km", &SystemConfig::earth_radius_km},
    {"satellite_altitude_km", &SystemConfig::satellite_altitude_km},
    {"serving_radius_km", &SystemConfig::serving_radius_km},
    {"transmit_power_dbm", &SystemConfig::transmit_power_dbm},
    {"mainlobe_gain_dbi", &SystemConfig::mainlobe_gain_dbi},
    {"sidelobe_gain_dbi", &SystemConfig::sidelobe_gain_dbi},
    {"noise_power_dbm", &SystemConfig::noise_power_dbm},
    {"carrier_frequency_hz", &SystemConfig::carrier_frequency_hz},
    {"bandwidth_hz", &SystemConfig::bandwidth_hz},
    {"pathloss_exponent", &SystemConfig::pathloss_exponent},
};

struct DerivedKey {
  const char* name;
  double DerivedConstants::*member;
};

constexpr DerivedKey kDerivedKeys[] = {
    {"derived.orbit_radius_m", &DerivedConstants::orbit_radius_m},
    {"derived.density_per_m2", &DerivedConstants::density_per_m2},
    {"derived.pathloss_ref", &DerivedConstants::pathloss_ref},
    {"derived.norm_noise", &DerivedConstants::norm_noise},
    {"derived.l_min_m", &DerivedConstants::l_min_m},
    {"derived.l_max_m", &DerivedConstants::l_max_m},
    {"derived.r_min_m", &DerivedConstants::r_min_m},
    {"derived.r_max_m", &DerivedConstants::r_max_m},
    {"derived.gain_ratio", &DerivedConstants::gain_ratio},
};

}  // namespace

extern "C" {

const char* ln_version(void) { return "0.1.0"; }

const char* ln_status_message(ln_status status) {
  switch (status) {
    case LN_OK: return "ok";
    case LN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LN_ERR_BAD_CONFIG: return "bad configuration";
    case LN_ERR_NUMERIC: return "numeric failure";
    case LN_ERR_ILL_CONDITIONED: return "ill-conditioned closed form";
    case LN_ERR_REJECTION_BUDGET: return "rejection budget exceeded";
    case LN_ERR_IO: return "i/o failure";
    case LN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ln_last_error(void) { return g_last_error.c_str(); }

void ln_string_free(char* s) { delete[] s; }

ln_status ln_model_create_default(ln_model** out) {
  if (!check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    auto model = new ln_model();
    model->fading = FadingModel::nakagami(2);
    model->rebuild();
    *out = model;
    return LN_OK;
  });
}

ln_status ln_model_create_from_json(const char* json_text, ln_model** out) {
  if (!json_text || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto model = new ln_model();
    model->fading = FadingModel::nakagami(2);
    try {
      model->cfg = system_config_from_json(json_text, &model->fading);
      model->rebuild();
    } catch (...) {
      delete model;
      throw;
    }
    *out = model;
    return LN_OK;
  });
}

void ln_model_destroy(ln_model* model) { delete model; }

ln_status ln_model_set(ln_model* model, const char* key, double value) {
  if (!model || !key) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SystemConfig next = model->cfg;
    FadingModel next_fading = model->fading;
    bool known = false;
    for (const auto& mk : kModelKeys) {
      if (std::strcmp(key, mk.name) == 0) {
        next.*(mk.member) = value;
        known = true;
        break;
      }
    }
    if (!known) {
      if (std::strcmp(key, "num_satellites") == 0) {
        next.num_satellites = static_cast<int>(value);
        known = true;
      } else if (std::strcmp(key, "nakagami_m") == 0) {
        next_fading = FadingModel::nakagami(static_cast<int>(value));
        known = true;
      }
    }
    if (!known) throw InvalidArgumentError(std::string("unknown model key '") + key + "'");
    DerivedConstants derived = build_derived(next);  // validate before mutating
    model->cfg = next;
    model->fading = next_fading;
    model->derived = derived;
    return LN_OK;
  });
}

ln_status ln_model_get(const ln_model* model, const char* key, double* out) {
  if (!model || !key || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    for (const auto& mk : kModelKeys) {
      if (std::strcmp(key, mk.name) == 0) {
        *out = model->cfg.*(mk.member);
        return LN_OK;
      }
    }
    for (const auto& dk : kDerivedKeys) {
      if (std::strcmp(key, dk.name) == 0) {
        *out = model->derived.*(dk.member);
        return LN_OK;
      }
    }
    if (std::strcmp(key, "num_satellites") == 0) {
      *out = model->cfg.num_satellites;
      return LN_OK;
    }
    if (std::strcmp(key, "nakagami_m") == 0) {
      *out = model->fading.nakagami_m;
      return LN_OK;
    }
    throw InvalidArgumentError(std::string("unknown model key '") + key + "'");
  });
}

ln_status ln_model_to_json(const ln_model* model, char** out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = system_config_to_json(model->cfg, model->fading);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return LN_OK;
  });
}

ln_status ln_walker_defaults(const ln_model* model, ln_walker_params* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  const WalkerDeltaParams p = WalkerDeltaParams::defaults(model->cfg.num_satellites);
  out->total_satellites = p.total_satellites;
  out->num_planes = p.num_planes;
  out->inclination_deg = p.inclination_deg;
  out->phasing_factor = p.phasing_factor;
  return LN_OK;
}

ln_status ln_mc_options_defaults(const ln_model* model, ln_mc_options* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  out->trials = 100000;
  out->seed = 1;
  out->constellation = LN_CONST_SPPP;
  ln_walker_defaults(model, &out->walker);
  out->paper_faithful_distances = 0;
  out->threads = 0;
  return LN_OK;
}

ln_status ln_setup_create(const ln_model* model, int num_uts, ln_ordering ordering,
                          ln_pa_scheme scheme, const double* fpa_coefficients, double theta_db,
                          double ri_factor, ln_setup** out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  if (num_uts < 1 || num_uts > LN_MAX_UTS)
    return fail(LN_ERR_INVALID_ARGUMENT, "num_uts must be in [1, LN_MAX_UTS]");
  return guarded([&] {
    auto s = new ln_setup();
    try {
      s->scheme = scheme == LN_PA_ETPA ? PaSchemeKind::kEtpa
                                       : (scheme == LN_PA_ERPA ? PaSchemeKind::kErpa
                                                               : PaSchemeKind::kFpa);
      s->setup = NomaSetup::uniform_threshold(num_uts, to_ordering(ordering),
                                              build_pa(model, num_uts, scheme, fpa_coefficients),
                                              db_to_linear(theta_db), ri_factor);
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
    return LN_OK;
  });
}

void ln_setup_destroy(ln_setup* setup) { delete setup; }

ln_status ln_setup_get_pa(const ln_setup* setup, double* pa_out) {
  if (!setup || !pa_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  for (int i = 0; i < setup->setup.num_uts; ++i) pa_out[i] = setup->setup.pa[i];
  return LN_OK;
}

ln_status ln_setup_effective_pa(const ln_setup* setup, double* p_tilde_out, double* q_out,
                                int* feasible_out) {
  if (!setup) return fail(LN_ERR_INVALID_ARGUMENT, "null setup");
  return guarded([&] {
    const EffectivePa ep = effective_pa(setup->setup);
    for (int i = 0; i < setup->setup.num_uts; ++i) {
      if (p_tilde_out) p_tilde_out[i] = ep.p_tilde[i];
      if (q_out) q_out[i] = ep.feasible ? ep.q[i] : 0.0;
    }
    if (feasible_out) *feasible_out = ep.feasible ? 1 : 0;
    return LN_OK;
  });
}

ln_status ln_feasibility_boundary(const double* pa, int num_uts, double ri_factor, double* out) {
  if (!pa || num_uts < 1 || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = feasibility_boundary_theta(std::vector<double>(pa, pa + num_uts), ri_factor);
    return LN_OK;
  });
}

ln_status ln_pdf_link_distance(const ln_model* model, double l_m, double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  *out = pdf_link_distance(l_m, model->derived);
  return LN_OK;
}

ln_status ln_cdf_link_distance(const ln_model* model, double l_m, double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  *out = cdf_link_distance(l_m, model->derived);
  return LN_OK;
}

ln_status ln_pdf_ordered_link_distance(const ln_model* model, double l_m, int rank_i, int num_uts,
                                       double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = pdf_ordered_link_distance(l_m, rank_i, num_uts, model->derived);
    return LN_OK;
  });
}

ln_status ln_mean_ordered_link_distance(const ln_model* model, int rank_i, int num_uts,
                                        double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mean_ordered_link_distance(rank_i, num_uts, model->derived);
    return LN_OK;
  });
}

ln_status ln_pdf_nearest_interferer(const ln_model* model, double r_m, int conditional,
                                    double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  *out = pdf_nearest_interferer(r_m, model->derived, conditional != 0);
  return LN_OK;
}

ln_status ln_laplace_inter(const ln_model* model, double s, double r_m, double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = laplace_inter(s, r_m, model->derived, model->fading);
    return LN_OK;
  });
}

ln_status ln_laplace_inter_deriv(const ln_model* model, double s, double r_m, int order,
                                 double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = laplace_inter_deriv(s, r_m, model->derived, model->fading, order);
    return LN_OK;
  });
}

ln_status ln_coverage_analytic(const ln_model* model, const ln_setup* setup, ln_path path,
                               double* per_ut_out) {
  if (!model || !setup || !per_ut_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const CoverageResult res =
        coverage_analytic(setup->setup, model->derived, model->fading, to_analytic(path));
    for (int i = 0; i < setup->setup.num_uts; ++i) per_ut_out[i] = res.per_ut[i];
    return LN_OK;
  });
}

ln_status ln_coverage_oma_analytic(const ln_model* model, int num_uts, ln_ordering ordering,
                                   double theta_db, ln_path path, double* per_ut_out) {
  if (!model || !per_ut_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    for (int i = 1; i <= num_uts; ++i)
      per_ut_out[i - 1] = coverage_oma(model->derived, model->fading, i, num_uts,
                                       db_to_linear(theta_db), to_ordering(ordering),
                                       to_analytic(path));
    return LN_OK;
  });
}

ln_status ln_cdf_unordered_isinr(const ln_model* model, double x_linear, double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = cdf_unordered_isinr(x_linear, model->derived, model->fading);
    return LN_OK;
  });
}

ln_status ln_unconditional_scale(const ln_model* model, double* out) {
  if (!model || !check_out(out)) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  *out = unconditional_scale(model->derived);
  return LN_OK;
}

ln_status ln_coverage_mc(const ln_model* model, const ln_setup* setup,
                         const ln_mc_options* options, double* per_ut_out, double* stderr_out) {
  if (!model || !setup || !per_ut_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const McCoverage cov =
        simulate_coverage(setup->setup, model->derived, model->fading, to_mc_options(model, options));
    for (int i = 0; i < setup->setup.num_uts; ++i) {
      per_ut_out[i] = cov.per_ut[i];
      if (stderr_out) stderr_out[i] = cov.std_err[i];
    }
    return LN_OK;
  });
}

ln_status ln_coverage_oma_mc(const ln_model* model, int num_uts, ln_ordering ordering,
                             double theta_db, const ln_mc_options* options, double* per_ut_out,
                             double* stderr_out) {
  if (!model || !per_ut_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto grid = simulate_coverage_oma_grid(num_uts, to_ordering(ordering),
                                                 {db_to_linear(theta_db)}, model->derived,
                                                 model->fading, to_mc_options(model, options));
    for (int i = 0; i < num_uts; ++i) {
      per_ut_out[i] = grid[0].per_ut[i];
      if (stderr_out) stderr_out[i] = grid[0].std_err[i];
    }
    return LN_OK;
  });
}

ln_status ln_coverage_mc_scheme(const ln_model* model, int num_uts, ln_ordering ordering,
                                ln_pa_scheme scheme, const double* fpa_coefficients,
                                double theta_db, double ri_factor, const ln_mc_options* options,
                                double* per_ut_out, double* stderr_out) {
  if (!model || !per_ut_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto grid = simulate_coverage_grid(
        num_uts, to_ordering(ordering), ri_factor, to_policy(num_uts, scheme, fpa_coefficients),
        {db_to_linear(theta_db)}, model->derived, model->fading, to_mc_options(model, options));
    for (int i = 0; i < num_uts; ++i) {
      per_ut_out[i] = grid[0].per_ut[i];
      if (stderr_out) stderr_out[i] = grid[0].std_err[i];
    }
    return LN_OK;
  });
}

ln_status ln_sum_se_analytic(const ln_model* model, const ln_setup* setup, ln_log_base log_base,
                             double* per_ut_se_out, double* sum_se_out) {
  if (!model || !setup || !sum_se_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SeOptions opts;
    opts.log_base = to_log_base(log_base);
    const SeResult se = sum_se_noma(setup->setup, model->derived, model->fading, opts);
    if (per_ut_se_out)
      for (int i = 0; i < setup->setup.num_uts; ++i) per_ut_se_out[i] = se.per_ut_se[i];
    *sum_se_out = se.sum_se;
    return LN_OK;
  });
}

ln_status ln_sum_se_oma_analytic(const ln_model* model, int num_uts, ln_ordering ordering,
                                 double theta_db, ln_log_base log_base, double* sum_se_out) {
  if (!model || !sum_se_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SeOptions opts;
    opts.log_base = to_log_base(log_base);
    const std::vector<double> thetas(num_uts, db_to_linear(theta_db));
    *sum_se_out =
        sum_se_oma(num_uts, thetas, model->derived, model->fading, to_ordering(ordering), opts)
            .sum_se;
    return LN_OK;
  });
}

ln_status ln_sum_se_mc(const ln_model* model, int num_uts, ln_ordering ordering,
                       ln_pa_scheme scheme, const double* fpa_coefficients, double theta_db,
                       double ri_factor, const ln_mc_options* options, ln_log_base log_base,
                       double* sum_se_out, double* sum_se_stderr_out) {
  if (!model || !sum_se_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const McSeResult res = simulate_sum_se(
        num_uts, to_ordering(ordering), ri_factor, to_policy(num_uts, scheme, fpa_coefficients),
        db_to_linear(theta_db), model->derived, model->fading, to_mc_options(model, options),
        to_log_base(log_base));
    *sum_se_out = res.se.sum_se;
    if (sum_se_stderr_out) *sum_se_stderr_out = res.sum_stderr;
    return LN_OK;
  });
}

ln_status ln_optimize_fpa(const ln_model* model, int num_uts, ln_ordering ordering,
                          double theta_db, double step, ln_log_base log_base, double* pa_out,
                          double* sum_se_out, int* feasible_found_out) {
  if (!model || !pa_out || !sum_se_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SeOptions opts;
    opts.log_base = to_log_base(log_base);
    const FpaOptimum best = optimize_fpa(num_uts, db_to_linear(theta_db), model->derived,
                                         model->fading, to_ordering(ordering), step, opts);
    for (int i = 0; i < num_uts; ++i) pa_out[i] = best.feasible_found ? best.pa[i] : 0.0;
    *sum_se_out = best.sum_se;
    if (feasible_found_out) *feasible_found_out = best.feasible_found ? 1 : 0;
    return LN_OK;
  });
}

ln_status ln_optimize_ut_count(const ln_model* model, ln_ordering ordering, double theta_db,
                               int n_max, double step, ln_log_base log_base, int* n_out,
                               double* pa_out, double* sum_se_out) {
  if (!model || !n_out || !pa_out || !sum_se_out)
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  if (n_max < 1 || n_max > LN_MAX_UTS)
    return fail(LN_ERR_INVALID_ARGUMENT, "n_max must be in [1, LN_MAX_UTS]");
  return guarded([&] {
    SeOptions opts;
    opts.log_base = to_log_base(log_base);
    const UtCountOptimum best = optimize_ut_count(db_to_linear(theta_db), model->derived,
                                                  model->fading, to_ordering(ordering), n_max,
                                                  step, opts);
    *n_out = best.num_uts;
    for (int i = 0; i < LN_MAX_UTS; ++i) pa_out[i] = 0.0;
    if (best.best.feasible_found)
      for (int i = 0; i < best.num_uts; ++i) pa_out[i] = best.best.pa[i];
    *sum_se_out = best.best.sum_se;
    return LN_OK;
  });
}

ln_status ln_compare_constellations(const ln_model* model, int num_uts, ln_ordering ordering,
                                    ln_pa_scheme scheme, const double* fpa_coefficients,
                                    double ri_factor, const double* theta_db_grid, int n_theta,
                                    const ln_mc_options* options, ln_constellation second,
                                    double* max_gap_out, double* per_theta_gap) {
  if (!model || !theta_db_grid || n_theta < 1 || !max_gap_out)
    return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<double> thetas(n_theta);
    for (int i = 0; i < n_theta; ++i) thetas[i] = db_to_linear(theta_db_grid[i]);
    const ConstellationComparison cmp = compare_constellations(
        num_uts, to_ordering(ordering), ri_factor, to_policy(num_uts, scheme, fpa_coefficients),
        thetas, model->derived, model->fading, to_mc_options(model, options),
        second == LN_CONST_WALKER_DELTA ? ConstellationModel::kWalkerDelta
                                        : ConstellationModel::kSppp);
    *max_gap_out = cmp.max_abs_gap;
    if (per_theta_gap)
      for (int i = 0; i < n_theta; ++i) per_theta_gap[i] = cmp.per_theta_gap[i];
    return LN_OK;
  });
}

ln_status ln_export_snapshot_csv(const ln_model* model, ln_constellation constellation,
                                 const ln_walker_params* walker, uint64_t seed, const char* path) {
  if (!model || !path) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    RngStream rng = RngStream::substream(seed, 0, 100);
    ConstellationSample sample;
    if (constellation == LN_CONST_WALKER_DELTA) {
      WalkerDeltaParams wp = WalkerDeltaParams::defaults(model->cfg.num_satellites);
      if (walker) {
        wp.total_satellites = walker->total_satellites;
        wp.num_planes = walker->num_planes;
        wp.inclination_deg = walker->inclination_deg;
        wp.phasing_factor = walker->phasing_factor;
      }
      sample = sample_constellation_walker(wp, model->derived, rng);
    } else {
      sample = sample_constellation_sppp(model->derived, rng);
    }
    std::ofstream out(path);
    if (!out) throw IoError(std::string("cannot open '") + path + "' for writing");
    out << snapshot_to_csv(sample);
    if (!out.good()) throw IoError("snapshot write failed");
    return LN_OK;
  });
}

ln_status ln_etpa(int num_uts, double* pa_out) {
  if (!pa_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<double> pa = etpa(num_uts);
    for (int i = 0; i < num_uts; ++i) pa_out[i] = pa[i];
    return LN_OK;
  });
}

ln_status ln_erpa(const ln_model* model, int num_uts, double* pa_out) {
  if (!model || !pa_out) return fail(LN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<double> pa = erpa(num_uts, model->derived, model->fading);
    for (int i = 0; i < num_uts; ++i) pa_out[i] = pa[i];
    return LN_OK;
  });
}

}  // extern "C"
