// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_MODE_HPP
#define THERMOSEMI_MODE_HPP

#include "thermosemi/params.hpp"
#include "thermosemi/profile.hpp"

namespace thermosemi
{

// Coefficients of one eigenvector e_n in the state U = (u, u', θ, z).
struct ModeVector
{
  long mode_index = 0;
  complex u;
  complex v;
  complex theta;
  ZProfile z = ExponentialForm();
};

// μ|u|² + |v|² + |θ|² + ξ∫₀¹|z|² (no z-term for NoDelayBaseline).
double mode_energy(const ModeVector &state, const ModelParams &params, double mu);

// z(0) required by the transport boundary condition for the given kind:
// μ^{1/2}u, μ^{α/2}θ, μ^{1/2}v (string), or 0 for NoDelayBaseline.
complex boundary_trace(const ModelParams &params, double mu, complex u, complex v,
                       complex theta);

}  // namespace thermosemi

#endif  // THERMOSEMI_MODE_HPP
