// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <thermosemi/dynamics.hpp>
#include <thermosemi/error.hpp>

using namespace thermosemi;

namespace
{

ModelParams hyperbolic()
{
  ModelParams p;
  p.kind = SystemKind::DelayHyperbolic;
  p.a = 1.0;
  p.tau = 0.5;
  p.xi = 1.0;
  return p;
}

std::vector<ModeState> decaying_data(const Spectrum &s, long modes)
{
  std::vector<ModeState> init;
  for (long n = 1; n <= modes; n++)
  {
    init.push_back({1.0 / (n * std::sqrt(s.eigenvalue(static_cast<std::size_t>(n)))), 0.0,
                    0.0});
  }
  return init;
}

double max_relative_increase(const std::vector<double> &e)
{
  double worst = 0.0;
  for (std::size_t i = 1; i < e.size(); i++)
  {
    worst = std::max(worst, (e[i] - e[i - 1]) / e[i - 1]);
  }
  return worst;
}

Trajectory synthetic(double t0, double t1, double (*f)(double))
{
  Trajectory t;
  for (int i = 0; i <= 1000; i++)
  {
    const double x = t0 + (t1 - t0) * i / 1000.0;
    t.times.push_back(x);
    t.total_energy.push_back(f(x));
  }
  return t;
}

}  // namespace

TEST_CASE("zero data stays zero")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  SimulationSetup setup;
  setup.n_modes = 4;
  setup.horizon = 3.0;
  setup.steps_per_delay = 16;
  const Trajectory t = simulate(hyperbolic(), s, setup);
  for (double e : t.total_energy)
  {
    CHECK(e == 0.0);
  }
  CHECK(t.times.back() == doctest::Approx(3.0));
}

TEST_CASE("fourth-order convergence on an oscillator with known solution")
{
  ModelParams p = hyperbolic();
  p.tau = 1.0;
  const Spectrum s = make_spectrum(SpectrumSpec{});
  ModeODE ode;
  ode.c_u = 1.0;
  auto error = [&](int M)
  {
    SimulationSetup setup;
    setup.horizon = 4.0;
    setup.steps_per_delay = M;
    setup.initial = {{1.0, 0.0, 0.0}};
    setup.override_ode = ode;
    const Trajectory t = simulate(p, s, setup);
    REQUIRE(t.refinement[0] == 1);
    return std::abs(t.final_state[0][0] - std::cos(4.0));
  };
  const double ratio = error(16) / error(32);
  CHECK(ratio >= 16.0 / 3.0);
  CHECK(ratio <= 48.0);
}

TEST_CASE("fourth-order self-convergence with a delayed restoring force")
{
  ModelParams p = hyperbolic();
  p.tau = 1.0;
  const Spectrum s = make_spectrum(SpectrumSpec{});
  ModeODE ode;
  ode.c_ud = 1.0;
  ode.c_vd = 0.3;
  auto final_u = [&](int M)
  {
    SimulationSetup setup;
    setup.horizon = 5.0;
    setup.steps_per_delay = M;
    setup.initial = {{1.0, 0.0, 0.0}};
    setup.override_ode = ode;
    return simulate(p, s, setup).final_state[0][0];
  };
  const double ref = final_u(512);
  const double ratio = std::abs(final_u(16) - ref) / std::abs(final_u(32) - ref);
  CHECK(ratio >= 16.0 / 3.0);
  CHECK(ratio <= 48.0);
}

TEST_CASE("halving the step barely moves the final energy")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  SimulationSetup setup;
  setup.n_modes = 32;
  setup.horizon = 40.0;
  setup.initial = decaying_data(s, 32);
  setup.steps_per_delay = 64;
  const double e1 = simulate(hyperbolic(), s, setup).total_energy.back();
  setup.steps_per_delay = 128;
  const double e2 = simulate(hyperbolic(), s, setup).total_energy.back();
  CHECK(std::abs(e1 - e2) <= 1e-5 * e2);
}

TEST_CASE("modes decouple")
{
  ModelParams p;
  p.kind = SystemKind::DelayParabolic;
  p.beta = 0.1;
  p.alpha = 0.9;
  p.a = 2.0;
  p.kappa = 1.0;
  p.tau = 0.5;
  p.xi = 1.0;
  const Spectrum s = make_spectrum(SpectrumSpec{});
  SimulationSetup setup;
  setup.n_modes = 4;
  setup.horizon = 5.0;
  setup.steps_per_delay = 32;
  setup.initial = {{1.0, 0.2, -0.3}, {0.4, 0.0, 0.1}, {0.0, 1.0, 0.0}, {0.1, 0.1, 0.1}};
  const Trajectory joint = simulate(p, s, setup);
  std::vector<double> sum(joint.times.size(), 0.0);
  for (long n = 1; n <= 4; n++)
  {
    SpectrumSpec one;
    one.kind = SpectrumSpec::Kind::List;
    one.values = {s.eigenvalue(static_cast<std::size_t>(n))};
    SimulationSetup alone = setup;
    alone.n_modes = 1;
    alone.initial = {setup.initial[static_cast<std::size_t>(n - 1)]};
    const Trajectory t = simulate(p, make_spectrum(one), alone);
    for (std::size_t i = 0; i < sum.size(); i++)
    {
      sum[i] += t.total_energy[i];
      CHECK(t.total_energy[i] == joint.per_mode_energy[static_cast<std::size_t>(n - 1)][i]);
    }
  }
  for (std::size_t i = 0; i < sum.size(); i++)
  {
    CHECK(std::abs(sum[i] - joint.total_energy[i]) <= 1e-12 * joint.total_energy[i]);
  }
}

TEST_CASE("energy is nonincreasing across the admissible parameter grid")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  std::vector<ModelParams> grid;
  const double points[][2] = {{0.5, 0.5}, {0.1, 0.9}, {0.25, 0.1}, {0.75, 0.6}, {0.3, 0.3}};
  for (const auto &pt : points)
  {
    for (double scale : {1.0, 2.0})
    {
      ModelParams h;
      h.kind = SystemKind::DelayHyperbolic;
      h.beta = pt[0];
      h.alpha = pt[1];
      h.tau = 0.5;
      h.a = scale;
      h.xi = 2.0 * h.tau / h.a * (scale == 1.0 ? 1.0 : 1.5);
      grid.push_back(h);

      ModelParams q;
      q.kind = SystemKind::DelayParabolic;
      q.beta = pt[0];
      q.alpha = pt[1];
      q.tau = 0.5;
      q.a = 2.0 * scale;
      q.kappa = scale;
      q.xi = q.tau * q.a;
      grid.push_back(q);
    }
  }
  REQUIRE(grid.size() == 20);
  for (const ModelParams &p : grid)
  {
    REQUIRE(stability_hypotheses_hold(p));
    SimulationSetup setup;
    setup.n_modes = 8;
    setup.horizon = 10.0;
    setup.steps_per_delay = 64;
    setup.initial = decaying_data(s, 8);
    const Trajectory t = simulate(p, s, setup);
    INFO("kind=", to_string(p.kind), " beta=", p.beta, " alpha=", p.alpha, " a=", p.a);
    CHECK(max_relative_increase(t.total_energy) <= 1e-8);
  }
}

TEST_CASE("divergence is reported with the first bad time")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  ModeODE ode;
  ode.c_u = 1.0;
  ode.c_v = -3.0;
  SimulationSetup setup;
  setup.horizon = 400.0;
  setup.steps_per_delay = 16;
  setup.initial = {{1.0, 0.0, 0.0}};
  setup.override_ode = ode;
  try
  {
    simulate(hyperbolic(), s, setup);
    FAIL("expected divergence");
  }
  catch (const DivergenceError &e)
  {
    CHECK(e.first_bad_time() > 0.0);
    CHECK(e.first_bad_time() < 400.0);
  }
}

TEST_CASE("history mismatch is a warning")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  SimulationSetup setup;
  setup.horizon = 1.0;
  setup.steps_per_delay = 16;
  setup.initial = {{1.0, 0.0, 0.0}};
  setup.history = [](long, double) { return ModeState{0.5, 0.0, 0.0}; };
  const Trajectory t = simulate(hyperbolic(), s, setup);
  CHECK(t.warnings.size() == 1);
  setup.steps_per_delay = 4;
  CHECK_THROWS_AS(simulate(hyperbolic(), s, setup), ValidationError);
}

TEST_CASE("upwind cross-check tracks the history quadrature")
{
  const Spectrum s = make_spectrum(SpectrumSpec{});
  SimulationSetup setup;
  setup.n_modes = 4;
  setup.horizon = 5.0;
  setup.initial = decaying_data(s, 4);
  setup.upwind_check = true;
  const Trajectory t = simulate(hyperbolic(), s, setup);
  REQUIRE(t.upwind_total_energy.size() == t.total_energy.size());
  for (std::size_t i = 0; i < t.times.size(); i++)
  {
    CHECK(std::abs(t.upwind_total_energy[i] - t.total_energy[i]) <= 1e-2 * t.total_energy[i]);
  }
  std::ostringstream csv;
  write_trajectory_csv(csv, t);
  CHECK(csv.str().rfind("t,E_total", 0) == 0);
}

TEST_CASE("decay fits on constructed energies")
{
  const auto e = fit_decay(synthetic(0.0, 10.0, [](double t) { return std::exp(-2.0 * t); }),
                           1.0, 9.0, DecayModel::Exponential);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(e.fit_quality == doctest::Approx(1.0));
  CHECK(e.caveat.find("truncated") != std::string::npos);

  const auto p = fit_decay(synthetic(1.0, 10.0, [](double t) { return std::pow(t, -4.0); }),
                           1.0, 10.0, DecayModel::Polynomial);
  CHECK(p.value == doctest::Approx(2.0).epsilon(1e-3));

  const auto c = fit_decay(synthetic(0.0, 10.0, [](double) { return 3.0; }), 0.0, 10.0,
                           DecayModel::Exponential);
  CHECK(std::abs(c.value) <= 1e-6);
  CHECK_FALSE(c.quality_defined);
  CHECK(to_json(c)["fit_quality"].is_null());

  CHECK_THROWS_AS(fit_decay(synthetic(0.0, 10.0, [](double) { return 0.0; }), 0.0, 10.0,
                            DecayModel::Exponential),
                  FitUndefinedError);
  CHECK_THROWS_AS(fit_decay(synthetic(0.0, 10.0, [](double) { return 1.0; }), 0.0, 0.05,
                            DecayModel::Exponential),
                  ValidationError);
}
