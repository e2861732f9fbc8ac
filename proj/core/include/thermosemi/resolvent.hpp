// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_RESOLVENT_HPP
#define THERMOSEMI_RESOLVENT_HPP

#include <ostream>
#include <vector>
#include "thermosemi/mode.hpp"
#include "thermosemi/params.hpp"
#include "thermosemi/spectrum.hpp"

namespace thermosemi
{

// Right-hand side F = (f1, f2, f3, h) of (iλ - 𝒜)U = F restricted to one mode.
struct ModeForcing
{
  complex f1;
  complex f2;
  complex f3;
  ZProfile h = ExponentialForm();
};

// √(μ|f1|² + |f2|² + |f3|² + ξ∫|h|²); the h term is omitted for NoDelayBaseline.
double forcing_norm(const ModeForcing &F, const ModelParams &params, double mu);

ModeForcing scaled(const ModeForcing &F, complex s);
ModeVector scaled(const ModeVector &U, complex s);

// Exact solution of (iλ - 𝒜)U = F on mode μ. The transport equation is integrated in closed
// form (ExponentialForm h) or with exponentially weighted quadrature (GridSamples h), z(1) is
// substituted into the algebraic rows and the remaining 2×2 system in (u, θ) is solved directly.
// Throws NearSingularError when |det| < 1e-12 times the product of the row norms.
ModeVector solve_mode_resolvent(const ModelParams &params, double mu, double lambda,
                                const ModeForcing &F);

// Determinant of the reduced 2×2 system, and the scale it is compared against.
struct ReducedDeterminant
{
  complex det;
  double scale;
};
ReducedDeterminant reduced_determinant(const ModelParams &params, double mu, double lambda);

// Energy norm of (iλ - 𝒜)U - F. The transport row iλz + z_ρ/τ - h is evaluated pointwise
// (analytic derivative for ExponentialForm, centred differences for GridSamples) and the
// boundary defect z(0) - trace enters with weight ξ.
double mode_residual(const ModelParams &params, double mu, double lambda, const ModeVector &U,
                     const ModeForcing &F);

// Largest gain ‖R F‖/‖F‖ over the trial space spanned by the three scalar slots, the profiles
// e^{2πikρ} for |k| ≤ K and e^{±iλτρ}. NoDelayBaseline uses the scalar slots only.
double mode_resolvent_norm_lb(const ModelParams &params, double mu, double lambda, int K);

struct ScanRow
{
  double lambda = 0.0;
  double sup_lb = 0.0;
  long argmax_n = 0;
  std::vector<long> skipped_modes;
};

// For each λ, the maximum of mode_resolvent_norm_lb over n = 1..n_max, skipping near-singular
// modes. Evaluated in parallel over (λ, n).
std::vector<ScanRow> resolvent_scan(const ModelParams &params, const Spectrum &spectrum,
                                    const std::vector<double> &lambdas, int K, long n_max);

void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows);

}  // namespace thermosemi

#endif  // THERMOSEMI_RESOLVENT_HPP
