// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/mode.hpp"

#include <cmath>
#include "thermosemi/error.hpp"

namespace thermosemi
{

double mode_energy(const ModeVector &state, const ModelParams &params, double mu)
{
  if (!(mu > 0.0))
  {
    throw ValidationError("mode energy needs mu > 0");
  }
  double e = mu * std::norm(state.u) + std::norm(state.v) + std::norm(state.theta);
  if (has_delay(params.kind))
  {
    e += params.xi * l2_norm_sq(state.z);
  }
  return e;
}

complex boundary_trace(const ModelParams &params, double mu, complex u, complex v,
                       complex theta)
{
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      return std::sqrt(mu) * u;
    case SystemKind::DelayParabolic:
      return std::pow(mu, 0.5 * params.alpha) * theta;
    case SystemKind::DelayedDampingString:
      return std::sqrt(mu) * v;
    case SystemKind::NoDelayBaseline:
      break;
  }
  return 0.0;
}

}  // namespace thermosemi
