#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "leonoma.h"

#include "config.hpp"
#include "coverage.hpp"
#include "test_common.hpp"
#include "units.hpp"

namespace {

struct ModelHolder {
  ln_model* m = nullptr;
  ModelHolder() { REQUIRE(ln_model_create_default(&m) == LN_OK); }
  ~ModelHolder() { ln_model_destroy(m); }
};

}  // namespace

TEST_CASE("c api model lifecycle and keys") {
  ModelHolder h;
  CHECK(std::string(ln_version()) == "0.1.0");

  double v = 0.0;
  CHECK(ln_model_get(h.m, "earth_radius_km", &v) == LN_OK);
  CHECK(v == doctest::Approx(6371.393));
  CHECK(ln_model_get(h.m, "derived.r_max_m", &v) == LN_OK);
  CHECK(v == doctest::Approx(2573.2067542271066e3));
  CHECK(ln_model_get(h.m, "derived.gain_ratio", &v) == LN_OK);
  CHECK(v == doctest::Approx(0.01));

  CHECK(ln_model_set(h.m, "num_satellites", 1200) == LN_OK);
  double lam1200 = 0.0;
  CHECK(ln_model_get(h.m, "derived.density_per_m2", &lam1200) == LN_OK);
  CHECK(ln_model_set(h.m, "num_satellites", 600) == LN_OK);
  double lam600 = 0.0;
  CHECK(ln_model_get(h.m, "derived.density_per_m2", &lam600) == LN_OK);
  CHECK(lam1200 == doctest::Approx(2.0 * lam600));

  SUBCASE("bad values are rejected and the model stays valid") {
    CHECK(ln_model_set(h.m, "pathloss_exponent", 1.5) == LN_ERR_BAD_CONFIG);
    CHECK(std::strlen(ln_last_error()) > 0);
    double alpha = 0.0;
    CHECK(ln_model_get(h.m, "pathloss_exponent", &alpha) == LN_OK);
    CHECK(alpha > 2.0);
  }

  SUBCASE("unknown keys") {
    CHECK(ln_model_set(h.m, "bogus", 1.0) == LN_ERR_INVALID_ARGUMENT);
    double out = 0.0;
    CHECK(ln_model_get(h.m, "bogus", &out) == LN_ERR_INVALID_ARGUMENT);
  }

  SUBCASE("json round trip") {
    char* text = nullptr;
    REQUIRE(ln_model_to_json(h.m, &text) == LN_OK);
    ln_model* copy = nullptr;
    REQUIRE(ln_model_create_from_json(text, &copy) == LN_OK);
    double a = 0.0, b = 0.0;
    CHECK(ln_model_get(h.m, "derived.norm_noise", &a) == LN_OK);
    CHECK(ln_model_get(copy, "derived.norm_noise", &b) == LN_OK);
    CHECK(a == b);
    ln_model_destroy(copy);
    ln_string_free(text);

    ln_model* bad = nullptr;
    CHECK(ln_model_create_from_json("{\"pathloss_exponent\": 1.0}", &bad) == LN_ERR_BAD_CONFIG);
    CHECK(ln_model_create_from_json("nope", &bad) == LN_ERR_BAD_CONFIG);
  }
}

TEST_CASE("c api setups and coverage agree with the core") {
  using namespace leonoma;
  ModelHolder h;

  ln_setup* setup = nullptr;
  const double fpa[3] = {0.15, 0.3, 0.55};
  REQUIRE(ln_setup_create(h.m, 3, LN_ORDER_MSP, LN_PA_FPA, fpa, -6.0, 0.0, &setup) == LN_OK);

  double p_tilde[3], q[3];
  int feasible = 0;
  CHECK(ln_setup_effective_pa(setup, p_tilde, q, &feasible) == LN_OK);
  CHECK(feasible == 1);

  const NomaSetup core_setup = NomaSetup::uniform_threshold(
      3, Ordering::kMsp, {0.15, 0.3, 0.55}, db_to_linear(-6.0), 0.0);
  const EffectivePa ep = effective_pa(core_setup);
  for (int i = 0; i < 3; ++i) {
    CHECK(p_tilde[i] == ep.p_tilde[i]);
    CHECK(q[i] == ep.q[i]);
  }

  double per_ut[3];
  REQUIRE(ln_coverage_analytic(h.m, setup, LN_PATH_AUTO, per_ut) == LN_OK);
  const DerivedConstants k = test::reference_derived();
  const FadingModel f = FadingModel::nakagami(2);
  for (int i = 1; i <= 3; ++i) CHECK(per_ut[i - 1] == doctest::Approx(coverage_msp(core_setup, k, f, i)));

  SUBCASE("erpa setup exposes its coefficients") {
    ln_setup* es = nullptr;
    REQUIRE(ln_setup_create(h.m, 3, LN_ORDER_ISINR, LN_PA_ERPA, nullptr, -6.0, 0.0, &es) == LN_OK);
    double pa[3];
    CHECK(ln_setup_get_pa(es, pa) == LN_OK);
    CHECK(pa[0] < pa[1]);
    CHECK(pa[1] < pa[2]);
    ln_setup_destroy(es);
  }

  SUBCASE("fpa without coefficients is invalid") {
    ln_setup* bad = nullptr;
    CHECK(ln_setup_create(h.m, 3, LN_ORDER_MSP, LN_PA_FPA, nullptr, -6.0, 0.0, &bad) ==
          LN_ERR_INVALID_ARGUMENT);
  }

  SUBCASE("feasibility boundary") {
    double boundary = 0.0;
    const double pa3[3] = {0.15, 0.3, 0.55};
    CHECK(ln_feasibility_boundary(pa3, 3, 0.0, &boundary) == LN_OK);
    CHECK(boundary == doctest::Approx(11.0 / 9.0).epsilon(1e-9));
  }

  ln_setup_destroy(setup);
}

TEST_CASE("c api monte carlo and se") {
  ModelHolder h;
  ln_mc_options mc;
  REQUIRE(ln_mc_options_defaults(h.m, &mc) == LN_OK);
  mc.trials = 5000;
  mc.seed = 123;

  ln_setup* setup = nullptr;
  REQUIRE(ln_setup_create(h.m, 2, LN_ORDER_MSP, LN_PA_ETPA, nullptr, -6.0, 0.0, &setup) == LN_OK);

  double per_ut[2], err[2];
  REQUIRE(ln_coverage_mc(h.m, setup, &mc, per_ut, err) == LN_OK);
  for (int i = 0; i < 2; ++i) {
    CHECK(per_ut[i] >= 0.0);
    CHECK(per_ut[i] <= 1.0);
    CHECK(err[i] > 0.0);
  }

  double se_per[2], se_sum = 0.0;
  REQUIRE(ln_sum_se_analytic(h.m, setup, LN_LOG_BASE2, se_per, &se_sum) == LN_OK);
  CHECK(se_sum == doctest::Approx(se_per[0] + se_per[1]));

  double oma_sum = 0.0;
  REQUIRE(ln_sum_se_oma_analytic(h.m, 2, LN_ORDER_MSP, -6.0, LN_LOG_BASE2, &oma_sum) == LN_OK);
  CHECK(oma_sum > 0.0);

  ln_setup_destroy(setup);
}

TEST_CASE("c api snapshot export") {
  ModelHolder h;
  const char* path = "capi_snapshot_test.csv";
  REQUIRE(ln_export_snapshot_csv(h.m, LN_CONST_SPPP, nullptr, 42, path) == LN_OK);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x_m,y_m,z_m,is_typical");
  in.close();
  std::remove(path);

  CHECK(ln_export_snapshot_csv(h.m, LN_CONST_SPPP, nullptr, 42, "/nonexistent-dir/x.csv") ==
        LN_ERR_IO);
}
