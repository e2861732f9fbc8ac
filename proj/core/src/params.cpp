// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/params.hpp"

#include <cmath>
#include <sstream>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"

namespace thermosemi
{

namespace
{

constexpr double kRegionTolerance = 1e-12;

bool finite_positive(double x)
{
  return std::isfinite(x) && x > 0.0;
}

}  // namespace

std::string_view to_string(SystemKind kind)
{
  switch (kind)
  {
    case SystemKind::DelayHyperbolic:
      return "DelayHyperbolic";
    case SystemKind::DelayParabolic:
      return "DelayParabolic";
    case SystemKind::NoDelayBaseline:
      return "NoDelayBaseline";
    case SystemKind::DelayedDampingString:
      return "DelayedDampingString";
  }
  return "unknown";
}

SystemKind parse_system_kind(std::string_view text)
{
  if (text == "DelayHyperbolic" || text == "hyperbolic")
  {
    return SystemKind::DelayHyperbolic;
  }
  if (text == "DelayParabolic" || text == "parabolic")
  {
    return SystemKind::DelayParabolic;
  }
  if (text == "NoDelayBaseline" || text == "baseline")
  {
    return SystemKind::NoDelayBaseline;
  }
  if (text == "DelayedDampingString" || text == "string")
  {
    return SystemKind::DelayedDampingString;
  }
  throw ValidationError("unknown system kind '" + std::string(text) + "'");
}

bool has_delay(SystemKind kind)
{
  return kind != SystemKind::NoDelayBaseline;
}

void ModelParams::validate() const
{
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
  {
    throw DomainError("(beta, alpha) = (" + format_double(beta) + ", " +
                      format_double(alpha) + ") is outside [0,1]^2");
  }
  if (!finite_positive(a))
  {
    throw ValidationError("a must be positive, got " + format_double(a));
  }
  if (kind == SystemKind::DelayParabolic && !finite_positive(kappa))
  {
    throw ValidationError("kappa must be positive, got " + format_double(kappa));
  }
  if (has_delay(kind))
  {
    if (!finite_positive(tau))
    {
      throw ValidationError("tau must be positive, got " + format_double(tau));
    }
    if (!finite_positive(xi))
    {
      throw ValidationError("xi must be positive, got " + format_double(xi));
    }
  }
}

bool ModelParams::in_q() const
{
  return 2.0 * beta - alpha <= 1.0 + kRegionTolerance;
}

bool Interval::contains(double x) const
{
  const bool above = lower_closed ? x >= lower : x > lower;
  const bool below = upper_closed ? x <= upper : x < upper;
  return above && below;
}

std::string Interval::to_string() const
{
  std::ostringstream out;
  out << (lower_closed ? '[' : '(') << format_double(lower) << ", "
      << (std::isinf(upper) ? std::string("inf") : format_double(upper))
      << (upper_closed ? ']' : ')');
  return out.str();
}

Interval xi_admissible(const ModelParams &params)
{
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
    case SystemKind::DelayedDampingString:
      if (!(params.a >= params.tau))
      {
        throw AdmissibilityError("admissible xi undefined: requires a >= tau (a = " +
                                 format_double(params.a) +
                                 ", tau = " + format_double(params.tau) + ")");
      }
      return {2.0 * params.tau / params.a, std::numeric_limits<double>::infinity(), true,
              false};
    case SystemKind::DelayParabolic:
    {
      if (!(params.a > params.kappa))
      {
        throw AdmissibilityError("admissible xi undefined: requires a > kappa (a = " +
                                 format_double(params.a) +
                                 ", kappa = " + format_double(params.kappa) + ")");
      }
      const double root = std::sqrt(params.a * params.a - params.kappa * params.kappa);
      return {params.tau * (params.a - root), params.tau * (params.a + root), false, false};
    }
    case SystemKind::NoDelayBaseline:
      return {0.0, std::numeric_limits<double>::infinity(), false, false};
  }
  throw ValidationError("unknown system kind");
}

bool stability_hypotheses_hold(const ModelParams &params, std::string *reason)
{
  try
  {
    const Interval set = xi_admissible(params);
    if (!set.contains(params.xi) && has_delay(params.kind))
    {
      if (reason)
      {
        *reason = "xi = " + format_double(params.xi) + " outside " + set.to_string();
      }
      return false;
    }
  }
  catch (const AdmissibilityError &e)
  {
    if (reason)
    {
      *reason = e.what();
    }
    return false;
  }
  return true;
}

}  // namespace thermosemi
