// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_DYNAMICS_HPP
#define THERMOSEMI_DYNAMICS_HPP

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>
#include <nlohmann/json.hpp>
#include "thermosemi/params.hpp"
#include "thermosemi/spectrum.hpp"

namespace thermosemi
{

// u'' + c_u u + c_ud u(t-τ) + c_v u' + c_vd u'(t-τ) - c_coupling θ = 0
// θ'  + c_theta θ + c_thetad θ(t-τ) + c_cross u' = 0
struct ModeODE
{
  double c_u = 0.0;
  double c_ud = 0.0;
  double c_v = 0.0;
  double c_vd = 0.0;
  double c_coupling = 0.0;
  double c_theta = 0.0;
  double c_thetad = 0.0;
  double c_cross = 0.0;

  // Largest rate the explicit step has to resolve.
  double stiffness() const;
};

ModeODE mode_ode(const ModelParams &params, double mu);

// (u, u', θ) of one mode.
using ModeState = std::array<double, 3>;

// History on [-τ, 0]: mode index (1-based) and time t ≤ 0 give (u, u', θ).
using HistoryFunction = std::function<ModeState(long, double)>;

struct SimulationSetup
{
  long n_modes = 1;
  double horizon = 1.0;
  int steps_per_delay = 64;
  // Initial (u0, u1, θ0) per mode; missing modes start at rest.
  std::vector<ModeState> initial;
  // Defaults to u(t) = u0 + u1 t, u'(t) = u1, θ(t) = θ0.
  HistoryFunction history;
  // Also evolve z on a 129-point ρ-grid with first-order upwinding and record its energy.
  bool upwind_check = false;
  // Integrates the scalar delay ODE with the given coefficients on every mode (testing hook).
  std::optional<ModeODE> override_ode;
};

struct Trajectory
{
  std::vector<double> times;
  std::vector<double> total_energy;
  std::vector<std::vector<double>> per_mode_energy;  // [mode][time]
  std::vector<double> upwind_total_energy;           // empty unless requested
  std::vector<ModeState> final_state;                // per mode, at times.back()
  std::vector<int> refinement;                       // per-mode substeps per output step
  std::vector<std::string> warnings;
};

// Method of steps with classical RK4. The step τ/(M k) uses a per-mode power of two k chosen so
// that stiffness·step ≤ 0.5. Delayed values inside the run come from cubic Hermite
// interpolation of stored (value, derivative) pairs. Energy is sampled every τ/M; its transport
// part is ξ times Simpson's rule over the trailing window of the delayed trace.
// Throws DivergenceError at the first non-finite state.
Trajectory simulate(const ModelParams &params, const Spectrum &spectrum,
                    const SimulationSetup &setup);

void write_trajectory_csv(std::ostream &out, const Trajectory &traj);

enum class DecayModel
{
  Exponential,
  Polynomial
};

struct DecayFit
{
  DecayModel model = DecayModel::Exponential;
  double value = 0.0;        // rate ω (E ~ e^{-2ωt}) or order r (E ~ t^{-2r})
  double fit_quality = 0.0;  // R² of the log-linear regression
  bool quality_defined = true;
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t samples = 0;
  std::string caveat;
};

// Least squares on log E against t (Exponential) or log t (Polynomial) over the samples with
// t_start ≤ t ≤ t_end. Needs ≥ 10 samples; throws FitUndefinedError on nonpositive energy.
DecayFit fit_decay(const Trajectory &traj, double t_start, double t_end, DecayModel model);

nlohmann::json to_json(const DecayFit &fit);

}  // namespace thermosemi

#endif  // THERMOSEMI_DYNAMICS_HPP
