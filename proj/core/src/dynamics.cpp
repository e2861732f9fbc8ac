// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"
#include "thermosemi/parallel.hpp"

namespace thermosemi
{

namespace
{

constexpr int kUpwindPoints = 129;
constexpr int kMaxRefinement = 1 << 20;

ModeState operator+(const ModeState &x, const ModeState &y)
{
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

ModeState operator*(double s, const ModeState &x)
{
  return {s * x[0], s * x[1], s * x[2]};
}

bool finite(const ModeState &y)
{
  return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]);
}

ModeState rhs(const ModeODE &c, const ModeState &y, const ModeState &d)
{
  return {y[1],
          -c.c_u * y[0] - c.c_ud * d[0] - c.c_v * y[1] - c.c_vd * d[1] + c.c_coupling * y[2],
          -c.c_theta * y[2] - c.c_thetad * d[2] - c.c_cross * y[1]};
}

// Stored trajectory of one mode on the fine grid t_j = j h.
class ModeRun
{
public:
  ModeRun(const ModeODE &ode, double h, long lag, long mode, const HistoryFunction &history)
    : c(ode), h(h), lag(lag), mode(mode), history(history)
  {
  }

  // State at fractional grid position pos (t = pos h); pos < 0 reads the history.
  ModeState at(double pos) const
  {
    if (pos < 0.0)
    {
      return history(mode, pos * h);
    }
    const auto j = static_cast<std::size_t>(pos);
    const double t = pos - static_cast<double>(j);
    if (t == 0.0)
    {
      return y[j];
    }
    // Cubic Hermite on [t_j, t_{j+1}] with slopes f = dy/dt.
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    ModeState out;
    for (int k = 0; k < 3; k++)
    {
      out[k] = h00 * y[j][k] + h10 * h * f[j][k] + h01 * y[j + 1][k] + h11 * h * f[j + 1][k];
    }
    return out;
  }

  // Integrates `steps` steps from y0; returns the first non-finite time or NaN.
  double run(const ModeState &y0, long steps)
  {
    y.assign(static_cast<std::size_t>(steps) + 1, ModeState{});
    f.assign(static_cast<std::size_t>(steps) + 1, ModeState{});
    y[0] = y0;
    for (long j = 0; j < steps; j++)
    {
      const auto i = static_cast<std::size_t>(j);
      const double back = static_cast<double>(j - lag);
      const ModeState d0 = at(back);
      const ModeState dh = at(back + 0.5);
      const ModeState d1 = at(back + 1.0);
      const ModeState k1 = rhs(c, y[i], d0);
      f[i] = k1;
      const ModeState k2 = rhs(c, y[i] + (0.5 * h) * k1, dh);
      const ModeState k3 = rhs(c, y[i] + (0.5 * h) * k2, dh);
      const ModeState k4 = rhs(c, y[i] + h * k3, d1);
      y[i + 1] = y[i] + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (!finite(y[i + 1]))
      {
        return static_cast<double>(j + 1) * h;
      }
    }
    const auto last = static_cast<std::size_t>(steps);
    f[last] = rhs(c, y[last], at(static_cast<double>(steps - lag)));
    return std::numeric_limits<double>::quiet_NaN();
  }

private:
  ModeODE c;
  double h;
  long lag;
  long mode;
  const HistoryFunction &history;
  std::vector<ModeState> y;
  std::vector<ModeState> f;
};

double trace_of(const ModelParams &p, double mu, const ModeState &y)
{
  switch (p.kind)
  {
    case SystemKind::DelayHyperbolic:
      return std::sqrt(mu) * y[0];
    case SystemKind::DelayParabolic:
      return std::pow(mu, 0.5 * p.alpha) * y[2];
    case SystemKind::DelayedDampingString:
      return std::sqrt(mu) * y[1];
    case SystemKind::NoDelayBaseline:
      break;
  }
  return 0.0;
}

int refinement_for(double stiffness, double step)
{
  int k = 1;
  while (stiffness * step / k > 0.5 && k < kMaxRefinement)
  {
    k *= 2;
  }
  return k;
}

}  // namespace

double ModeODE::stiffness() const
{
  return std::max({c_v + c_vd, c_theta + c_thetad, std::sqrt(std::max(0.0, c_u + c_ud)),
                   c_coupling, c_cross});
}

ModeODE mode_ode(const ModelParams &params, double mu)
{
  const double mb = std::pow(mu, params.beta);
  const double ma = std::pow(mu, params.alpha);
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      return {0.0, mu, params.a * mu, 0.0, mb, ma, 0.0, mb};
    case SystemKind::DelayParabolic:
      return {mu, 0.0, 0.0, 0.0, mb, params.a * ma, params.kappa * ma, mb};
    case SystemKind::DelayedDampingString:
    {
      const double n = std::sqrt(mu);
      return {mu, 0.0, 0.0, params.a * mu, n, mu, 0.0, n};
    }
    case SystemKind::NoDelayBaseline:
      break;
  }
  return {mu, 0.0, 0.0, 0.0, mb, ma, 0.0, mb};
}

Trajectory simulate(const ModelParams &params, const Spectrum &spectrum,
                    const SimulationSetup &setup)
{
  params.validate();
  if (setup.n_modes < 1)
  {
    throw ValidationError("simulation needs at least one mode");
  }
  if (setup.steps_per_delay < 8)
  {
    throw ValidationError("steps per delay must be at least 8");
  }
  if (!(setup.horizon > 0.0) || !std::isfinite(setup.horizon))
  {
    throw ValidationError("horizon must be positive");
  }
  const auto modes = static_cast<std::size_t>(setup.n_modes);
  const double tau = params.tau;
  const int M = setup.steps_per_delay;
  const double base = tau / M;
  const long outputs = static_cast<long>(std::ceil(setup.horizon / base - 1e-9));
  const bool delay = has_delay(params.kind);

  std::vector<ModeState> initial(modes, ModeState{});
  std::copy_n(setup.initial.begin(), std::min(modes, setup.initial.size()), initial.begin());

  Trajectory traj;
  const HistoryFunction fallback = [&initial](long n, double t) -> ModeState
  {
    const ModeState &y = initial[static_cast<std::size_t>(n - 1)];
    return {y[0] + y[1] * t, y[1], y[2]};
  };
  const HistoryFunction &history = setup.history ? setup.history : fallback;
  if (setup.history)
  {
    for (std::size_t n = 0; n < modes; n++)
    {
      const ModeState h0 = history(static_cast<long>(n + 1), 0.0);
      for (int k = 0; k < 3; k++)
      {
        if (std::abs(h0[k] - initial[n][k]) > 1e-12 * (1.0 + std::abs(initial[n][k])))
        {
          traj.warnings.push_back("history at t=0 does not match the initial data on mode " +
                                  std::to_string(n + 1));
          break;
        }
      }
    }
  }

  traj.times.resize(static_cast<std::size_t>(outputs) + 1);
  for (long b = 0; b <= outputs; b++)
  {
    traj.times[static_cast<std::size_t>(b)] = static_cast<double>(b) * base;
  }
  traj.per_mode_energy.assign(modes, {});
  traj.final_state.assign(modes, ModeState{});
  traj.refinement.assign(modes, 1);
  std::vector<std::vector<double>> upwind(setup.upwind_check && delay ? modes : 0);
  std::vector<double> bad(modes, std::numeric_limits<double>::quiet_NaN());

  parallel_for(modes, [&](std::size_t m)
  {
    const long n = static_cast<long>(m + 1);
    const double mu = spectrum.eigenvalue(m + 1);
    const ModeODE ode = setup.override_ode ? *setup.override_ode : mode_ode(params, mu);
    const int k = refinement_for(ode.stiffness(), base);
    traj.refinement[m] = k;
    const double h = base / k;
    const long lag = static_cast<long>(M) * k;
    ModeRun run(ode, h, lag, n, history);
    const double failed = run.run(initial[m], outputs * k);
    if (!std::isnan(failed))
    {
      bad[m] = failed;
      return;
    }

    auto &energy = traj.per_mode_energy[m];
    energy.resize(static_cast<std::size_t>(outputs) + 1);
    for (long b = 0; b <= outputs; b++)
    {
      const long j = b * k;
      const ModeState y = run.at(static_cast<double>(j));
      double e = mu * y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
      if (delay)
      {
        // Simpson over the stored history window; lag = M k is even.
        double sum = 0.0;
        for (long i = 0; i <= lag; i++)
        {
          const double tr = trace_of(params, mu, run.at(static_cast<double>(j - i)));
          sum += (i == 0 || i == lag ? 1.0 : (i % 2 ? 4.0 : 2.0)) * tr * tr;
        }
        e += params.xi * sum / (3.0 * static_cast<double>(lag));
      }
      energy[static_cast<std::size_t>(b)] = e;
    }
    traj.final_state[m] = run.at(static_cast<double>(outputs * k));

    if (!upwind.empty())
    {
      // z_t + z_ρ/τ = 0 with z(0,t) = trace(t), first-order upwind, CFL ≤ 1.
      const double d = 1.0 / (kUpwindPoints - 1);
      const int sub = std::max(1, static_cast<int>(std::ceil((base / tau) / d - 1e-12)));
      const double cfl = (base / sub) / (tau * d);
      std::vector<double> z(kUpwindPoints);
      for (int i = 0; i < kUpwindPoints; i++)
      {
        z[static_cast<std::size_t>(i)] =
            trace_of(params, mu, run.at(-static_cast<double>(lag) * i * d));
      }
      auto &ue = upwind[m];
      ue.resize(static_cast<std::size_t>(outputs) + 1);
      auto z_energy = [&]
      {
        double s = 0.5 * (z.front() * z.front() + z.back() * z.back());
        for (int i = 1; i + 1 < kUpwindPoints; i++)
        {
          s += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
        }
        return params.xi * s * d;
      };
      for (long b = 0; b <= outputs; b++)
      {
        const ModeState y = run.at(static_cast<double>(b * k));
        ue[static_cast<std::size_t>(b)] =
            mu * y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + z_energy();
        if (b == outputs)
        {
          break;
        }
        for (int s = 1; s <= sub; s++)
        {
          for (int i = kUpwindPoints - 1; i > 0; i--)
          {
            z[static_cast<std::size_t>(i)] -=
                cfl * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i - 1)]);
          }
          const double pos = static_cast<double>(b * k) + static_cast<double>(s * k) / sub;
          z[0] = trace_of(params, mu, run.at(pos));
        }
      }
    }
  });

  double first_bad = std::numeric_limits<double>::infinity();
  for (double t : bad)
  {
    if (!std::isnan(t))
    {
      first_bad = std::min(first_bad, t);
    }
  }
  if (std::isfinite(first_bad))
  {
    throw DivergenceError("non-finite state at t = " + format_double(first_bad), first_bad);
  }

  traj.total_energy.assign(traj.times.size(), 0.0);
  for (const auto &e : traj.per_mode_energy)
  {
    for (std::size_t b = 0; b < e.size(); b++)
    {
      traj.total_energy[b] += e[b];
    }
  }
  if (!upwind.empty())
  {
    traj.upwind_total_energy.assign(traj.times.size(), 0.0);
    for (const auto &e : upwind)
    {
      for (std::size_t b = 0; b < e.size(); b++)
      {
        traj.upwind_total_energy[b] += e[b];
      }
    }
  }
  return traj;
}

void write_trajectory_csv(std::ostream &out, const Trajectory &traj)
{
  std::vector<std::string> header{"t", "E_total"};
  for (std::size_t m = 0; m < traj.per_mode_energy.size(); m++)
  {
    header.push_back("E_mode_" + std::to_string(m + 1));
  }
  write_csv_row(out, header);
  for (std::size_t b = 0; b < traj.times.size(); b++)
  {
    std::vector<std::string> row{format_double(traj.times[b]),
                                 format_double(traj.total_energy[b])};
    for (const auto &e : traj.per_mode_energy)
    {
      row.push_back(format_double(e[b]));
    }
    write_csv_row(out, row);
  }
}

DecayFit fit_decay(const Trajectory &traj, double t_start, double t_end, DecayModel model)
{
  if (!(t_start < t_end))
  {
    throw ValidationError("fit window must satisfy t_start < t_end");
  }
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t b = 0; b < traj.times.size() && b < traj.total_energy.size(); b++)
  {
    const double t = traj.times[b];
    if (t < t_start - 1e-12 || t > t_end + 1e-12)
    {
      continue;
    }
    const double e = traj.total_energy[b];
    if (!(e > 0.0))
    {
      throw FitUndefinedError("nonpositive energy at t = " + format_double(t));
    }
    if (model == DecayModel::Polynomial && !(t > 0.0))
    {
      throw FitUndefinedError("polynomial fit needs t > 0 in the window");
    }
    x.push_back(model == DecayModel::Exponential ? t : std::log(t));
    y.push_back(std::log(e));
  }
  if (x.size() < 10)
  {
    throw ValidationError("fit window holds " + std::to_string(x.size()) +
                          " samples, at least 10 are needed");
  }
  const double count = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); i++)
  {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); i++)
  {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;

  DecayFit fit;
  fit.model = model;
  fit.value = -0.5 * slope;
  fit.t_start = t_start;
  fit.t_end = t_end;
  fit.samples = x.size();
  fit.caveat = "truncated " + std::to_string(traj.per_mode_energy.size()) + "-mode system";
  if (syy <= 1e-24 * count * (1.0 + my * my))
  {
    fit.quality_defined = false;
    fit.fit_quality = std::numeric_limits<double>::quiet_NaN();
  }
  else
  {
    fit.fit_quality = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  }
  return fit;
}

nlohmann::json to_json(const DecayFit &fit)
{
  nlohmann::json j;
  const bool exp = fit.model == DecayModel::Exponential;
  j["model"] = exp ? "Exponential" : "Polynomial";
  j[exp ? "rate" : "order"] = fit.value;
  if (fit.quality_defined)
  {
    j["fit_quality"] = fit.fit_quality;
  }
  else
  {
    j["fit_quality"] = nullptr;
  }
  j["fit_quality_defined"] = fit.quality_defined;
  j["window"] = {fit.t_start, fit.t_end};
  j["samples"] = fit.samples;
  j["caveat"] = fit.caveat;
  return j;
}

}  // namespace thermosemi
