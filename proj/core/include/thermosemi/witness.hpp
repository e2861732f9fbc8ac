// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_WITNESS_HPP
#define THERMOSEMI_WITNESS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>
#include <nlohmann/json.hpp>
#include "thermosemi/resolvent.hpp"

namespace thermosemi
{

// θ (hyperbolic) or v (parabolic) is μ^{-p} in size and λ = μ^q.
struct ExponentChoice
{
  double p = 0.0;
  double q = 0.0;
  double delta = 0.0;
  std::string case_tag;
  double delta_bound = 0.0;  // strict upper bound on δ, 0 when δ is unused
};

// Case tags: "hyp-alpha>0", "hyp-alpha=0", "par-case1", "par-equality", "par-alpha=0".
// δ defaults to half the smallest strict bound, capped at 0.25.
// Throws DomainError outside Q, UnsupportedCaseError for kinds without a witness and for
// DelayParabolic at (β, α) = (1/2, 0), ValidationError for a δ override outside its bounds.
ExponentChoice select_exponents(const ModelParams &params,
                                std::optional<double> delta = std::nullopt);

struct WitnessRow
{
  long n = 0;
  double mu = 0.0;
  double lambda = 0.0;
  ExponentChoice exponents;
  complex phi;
  double norm_U = 0.0;  // before normalization
  double norm_F = 0.0;  // before normalization
  double ratio = 0.0;
  double residual = 0.0;  // energy norm of (iλ - 𝒜)U - F, before normalization
};

struct WitnessMode
{
  double lambda = 0.0;
  ModeForcing F;  // unit energy norm
  ModeVector U;   // scaled with F
  WitnessRow row;
};

// Exact witness pair on mode μ. Fields are evaluated from their closed forms with every power
// term kept, so the pair solves the resolvent equation to rounding error.
// Throws OverflowError when a power of μ leaves the double range (bound μ ≤ 1e12 is safe).
WitnessMode build_witness_mode(const ModelParams &params, double mu,
                               std::optional<double> delta = std::nullopt, long n = 0);

struct WitnessSweep
{
  std::vector<WitnessRow> rows;
  double limit_estimate = 0.0;  // extrapolated ratio, h = 1/n, last three rows
  double min_ratio = 0.0;
  double max_relative_residual = 0.0;
  bool certified = false;
};

WitnessSweep witness_sweep(const ModelParams &params, const Spectrum &spectrum,
                           const std::vector<long> &indices,
                           std::optional<double> delta = std::nullopt);

// Polynomial extrapolation to h = 0 through the points (1/n_i, ratio_i).
double richardson_limit(const std::vector<double> &n, const std::vector<double> &ratio);

void write_witness_csv(std::ostream &out, const std::vector<WitnessRow> &rows);
nlohmann::json witness_summary(const WitnessSweep &sweep, const ModelParams &params);

struct StringWitness
{
  complex phi_coefficient;
  WitnessRow row;
};

// String example on (0,π) for odd n: θ_n = -(1/n²)cos(nx), v_n = ((1+i)/n)sin(nx), λ_n = n².
// Norms include the factor π/2 of ‖sin(n·)‖² = ‖cos(n·)‖². ξ defaults to 2τ/a.
StringWitness string_witness(long n, double a, double tau,
                             std::optional<double> xi = std::nullopt);

}  // namespace thermosemi

#endif  // THERMOSEMI_WITNESS_HPP
