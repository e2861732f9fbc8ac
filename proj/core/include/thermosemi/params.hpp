// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_PARAMS_HPP
#define THERMOSEMI_PARAMS_HPP

#include <limits>
#include <string>
#include <string_view>

namespace thermosemi
{

//
// Which abstract system a parameter record describes.
//
//   DelayHyperbolic      u'' + A u(t-τ) + a A u' - A^β θ = 0,  θ' + A^α θ + A^β u' = 0
//   DelayParabolic       u'' + A u - A^β θ = 0,  θ' + κ A^α θ(t-τ) + a A^α θ + A^β u' = 0
//   NoDelayBaseline      classical α-β system (τ = 0, no damping, no transport variable)
//   DelayedDampingString u_tt - u_xx - a u_xxt(t-τ) + θ_x = 0,  θ_t - θ_xx + u_xt = 0
//                        per sine/cosine mode, with μ = n²
//
enum class SystemKind
{
  DelayHyperbolic,
  DelayParabolic,
  NoDelayBaseline,
  DelayedDampingString
};

std::string_view to_string(SystemKind kind);

// Accepts the enumerator names and the short forms "hyperbolic", "parabolic", "baseline",
// "string". Throws ValidationError otherwise.
SystemKind parse_system_kind(std::string_view text);

// True for kinds carrying a transport variable z on ρ ∈ [0,1].
bool has_delay(SystemKind kind);

struct ModelParams
{
  SystemKind kind = SystemKind::DelayHyperbolic;
  double alpha = 0.5;
  double beta = 0.5;
  double a = 1.0;
  double kappa = 0.5;  // DelayParabolic only
  double tau = 1.0;
  double xi = 2.0;

  // Checks the type invariants. Throws DomainError (α, β) or ValidationError (scalars).
  void validate() const;

  // 2β - α ≤ 1, with the same tolerance classify_region uses.
  bool in_q() const;

  bool operator==(const ModelParams &) const = default;
};

struct Interval
{
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool lower_closed = false;
  bool upper_closed = false;

  bool contains(double x) const;
  std::string to_string() const;
};

// Set of energy weights ξ for which the stability theory applies.
//   DelayHyperbolic (a ≥ τ):  [2τ/a, ∞)
//   DelayParabolic  (a > κ):  ]τ(a - √(a²-κ²)), τ(a + √(a²-κ²))[
//   DelayedDampingString:     same rule as DelayHyperbolic
//   NoDelayBaseline:          (0, ∞)
// Throws AdmissibilityError when the hypothesis in parentheses fails.
Interval xi_admissible(const ModelParams &params);

// Non-throwing check of the hypotheses above plus ξ membership.
bool stability_hypotheses_hold(const ModelParams &params, std::string *reason = nullptr);

}  // namespace thermosemi

#endif  // THERMOSEMI_PARAMS_HPP
