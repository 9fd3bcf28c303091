#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmz/driver.hpp"

using namespace rmz;

namespace {

RunConfig burgers_base(Variant v, int order) {
  RunConfig cfg;
  cfg.equation = Equation::Burgers;
  cfg.resolved = 16;
  cfg.order = order;
  cfg.variant = v;
  return cfg;
}

}  // namespace

TEST_CASE("full burgers run starts at the initial energies") {
  auto cfg = burgers_base(Variant::Full, 1);
  cfg.t_end = 0.5;
  const auto result = run_full(cfg);
  REQUIRE(result.termination == Termination::Completed);
  CHECK(result.series.front().t == 0.0);
  CHECK(result.series.front().moments[0] == doctest::Approx(0.25).epsilon(1e-14));
  // Resolved energy never exceeds the conserved total.
  for (const auto& s : result.series) CHECK(s.moments[0] <= 0.25 + 1e-10);
}

TEST_CASE("full euler run conserves energy and incompressibility") {
  RunConfig cfg;
  cfg.equation = Equation::Euler3d;
  cfg.resolved = 8;  // full grid 16^3
  cfg.order = 1;
  cfg.variant = Variant::Full;
  cfg.t_end = 0.2;
  cfg.rel_tol = 1e-10;
  const auto trunc = truncation_for(cfg);
  const auto kernel = make_kernel(cfg.equation, trunc);
  const auto u0 = initial_condition_for(cfg, trunc);

  OdeProblem p;
  p.t0 = 0.0;
  p.t1 = cfg.t_end;
  p.y0 = u0.data();
  p.rel_tol = cfg.rel_tol;
  p.abs_tol = cfg.abs_tol;
  p.rhs = [&](double, const Eigen::VectorXcd& y) {
    SpectralField f(trunc, 3);
    f.data() = y;
    return kernel->full_rhs(f).data();
  };
  const auto out = integrate(p);
  REQUIRE(out.status == IntegrateStatus::Completed);
  CHECK(std::abs(out.y.squaredNorm() - u0.data().squaredNorm()) < 1e-6);

  SpectralField uf(trunc, 3);
  uf.data() = out.y;
  double div = 0.0;
  for (long i = 0; i < trunc.volume(); ++i) {
    const auto k = trunc.wavevector(i);
    div = std::max(div, std::abs(double(k[0]) * uf.at(0, i) + double(k[1]) * uf.at(1, i) +
                                 double(k[2]) * uf.at(2, i)));
  }
  CHECK(div < 1e-10);
}

TEST_CASE("rmz switch fires before the shock and hands off continuously") {
  auto cfg = burgers_base(Variant::Rmz, 3);
  cfg.solve = SolveVariant::PinnedMarkovian;
  cfg.t_end = 2.0;
  const auto result = run_rmz(cfg);
  REQUIRE(result.termination == Termination::Completed);
  REQUIRE(result.switch_time.has_value());
  CHECK(*result.switch_time > 0.0);
  CHECK(*result.switch_time < 1.0);
  CHECK(result.coefficients->a(0) == 1.0);

  // Energy is continuous across the handoff: the switch step records the
  // full state and then the projected one at the same time, and projection
  // leaves the resolved coefficients untouched.
  const auto& s = result.series;
  size_t pairs = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i].t == *result.switch_time && s[i - 1].t == s[i].t) {
      CHECK(std::abs(s[i].moments[0] - s[i - 1].moments[0]) < 1e-12);
      ++pairs;
    }
  }
  CHECK(pairs == 1);
  // The condition number of the pinned reduced system beats the full one.
  CHECK(result.cond_full > result.cond_reduced);
  CHECK(result.cond_reduced > 1.0);
}

TEST_CASE("pre-switch rmz trajectory is bit-identical to the full run") {
  auto full_cfg = burgers_base(Variant::Full, 3);
  full_cfg.t_end = 2.0;
  auto rmz_cfg = burgers_base(Variant::Rmz, 3);
  rmz_cfg.t_end = 2.0;
  const auto full = run_full(full_cfg);
  const auto rmz = run_rmz(rmz_cfg);
  REQUIRE(rmz.switch_time.has_value());
  size_t checked = 0;
  for (size_t i = 0; i < rmz.series.size() && i < full.series.size(); ++i) {
    if (rmz.series[i].t > *rmz.switch_time) break;
    if (rmz.series[i].t != full.series[i].t) break;
    for (size_t m = 0; m < rmz.series[i].moments.size(); ++m) {
      CHECK(rmz.series[i].moments[m] == full.series[i].moments[m]);
    }
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("forced-coefficient rmz reproduces the t-model") {
  auto tcfg = burgers_base(Variant::TModel, 1);
  tcfg.t_end = 5.0;
  auto dcfg = burgers_base(Variant::Rmz, 1);
  dcfg.t_end = 5.0;
  dcfg.forced_coeffs = {1.0, 1.0};
  const auto tm = run_tmodel(tcfg);
  const auto diag = run_rmz(dcfg);
  REQUIRE(tm.series.size() == diag.series.size());
  for (size_t i = 0; i < tm.series.size(); ++i) {
    CHECK(std::abs(tm.series[i].t - diag.series[i].t) < 1e-10);
    CHECK(std::abs(tm.series[i].moments[0] - diag.series[i].moments[0]) < 1e-10);
  }
}

TEST_CASE("t-model energy is monotone and bounded after shock formation") {
  auto cfg = burgers_base(Variant::TModel, 1);
  cfg.t_end = 20.0;
  const auto result = run_tmodel(cfg);
  REQUIRE(result.termination == Termination::Completed);
  double prev = 1.0;
  for (const auto& s : result.series) {
    CHECK(s.moments[0] <= 0.25 + 1e-12);
    CHECK(s.moments[0] >= 0.0);
    if (s.t >= 1.5) {
      CHECK(s.moments[0] <= prev + 1e-10);
      prev = s.moments[0];
    }
  }
}

TEST_CASE("unrenormalized third-order model blows up") {
  auto cfg = burgers_base(Variant::MzUnrenormalized, 3);
  cfg.t_end = 100.0;
  const auto result = run_unrenormalized(cfg);
  CHECK(result.termination == Termination::BlewUp);
  CHECK(result.termination_time < 100.0);
}

TEST_CASE("repeated runs are deterministic") {
  auto cfg = burgers_base(Variant::Rmz, 2);
  cfg.t_end = 1.5;
  const auto a = run_rmz(cfg);
  const auto b = run_rmz(cfg);
  REQUIRE(a.series.size() == b.series.size());
  CHECK(*a.switch_time == *b.switch_time);
  CHECK((a.coefficients->a - b.coefficients->a).cwiseAbs().maxCoeff() == 0.0);
  for (size_t i = 0; i < a.series.size(); ++i) {
    CHECK(a.series[i].t == b.series[i].t);
    CHECK(a.series[i].moments[0] == b.series[i].moments[0]);
  }
}

TEST_CASE("energy interpolation helper") {
  RunResult r;
  r.order = 1;
  r.series = {{0.0, {1.0}}, {1.0, {3.0}}, {2.0, {5.0}}};
  CHECK(energy_at(r, -1.0) == 1.0);
  CHECK(energy_at(r, 0.5) == doctest::Approx(2.0));
  CHECK(energy_at(r, 2.0) == 5.0);
  CHECK(energy_at(r, 9.0) == 5.0);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.resolved = 15;
  CHECK_THROWS_AS(truncation_for(cfg), std::invalid_argument);
  cfg.resolved = 16;
  cfg.initial_condition = "nonsense";
  CHECK_THROWS_AS(initial_condition_for(cfg, truncation_for(cfg)), std::invalid_argument);
}
