// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"
#include "thermosemi/parallel.hpp"

namespace thermosemi
{

namespace
{

constexpr complex I{0.0, 1.0};
constexpr double eps = 1e-12;
constexpr double kResidualTolerance = 1e-9;

double default_delta(double bound)
{
  return std::min(0.25, 0.5 * bound);
}

double pick_delta(std::optional<double> delta, double bound)
{
  if (!delta)
  {
    return default_delta(bound);
  }
  if (!(*delta > 0.0) || !(*delta < bound))
  {
    throw ValidationError("delta = " + format_double(*delta) + " outside (0, " +
                          format_double(bound) + ")");
  }
  return *delta;
}

double checked_pow(double mu, double e)
{
  const double v = std::pow(mu, e);
  if (!std::isfinite(v) || v == 0.0)
  {
    throw OverflowError("mu^" + format_double(e) + " leaves the double range at mu = " +
                        format_double(mu) + "; log-domain evaluation is not implemented");
  }
  return v;
}

}  // namespace

ExponentChoice select_exponents(const ModelParams &params, std::optional<double> delta)
{
  params.validate();
  if (!params.in_q())
  {
    throw DomainError("(beta, alpha) = (" + format_double(params.beta) + ", " +
                      format_double(params.alpha) + ") is outside Q (2 beta - alpha > 1)");
  }
  const double alpha = params.alpha;
  const double beta = params.beta;
  ExponentChoice e;
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      if (alpha > eps)
      {
        e.p = 0.5 - beta + alpha;
        e.q = alpha;
        e.case_tag = "hyp-alpha>0";
        return e;
      }
      e.delta_bound = 0.5;
      e.delta = pick_delta(delta, e.delta_bound);
      e.p = 0.5 - beta + e.delta;
      e.q = e.delta;
      e.case_tag = "hyp-alpha=0";
      return e;
    case SystemKind::DelayParabolic:
      if (alpha <= eps && std::abs(beta - 0.5) <= eps)
      {
        throw UnsupportedCaseError(
            "DelayParabolic at (beta, alpha) = (1/2, 0) is outside the witness case analysis");
      }
      if (std::abs(0.5 * alpha + 0.5 - beta) <= eps)
      {
        e.p = 0.5;
        e.q = 0.5;
        e.case_tag = "par-equality";
        return e;
      }
      if (alpha > eps)
      {
        e.delta_bound = std::min({alpha, 0.5, (1.0 + alpha) / 3.0, 1.0 + alpha - 2.0 * beta});
        e.delta = pick_delta(delta, e.delta_bound);
        e.p = 0.5 * alpha - beta + 1.0 - e.delta;
        e.q = e.delta;
        e.case_tag = "par-case1";
        return e;
      }
      e.delta_bound = 0.5;
      e.delta = pick_delta(delta, e.delta_bound);
      e.p = 1.0 - beta;
      e.q = e.delta;
      e.case_tag = "par-alpha=0";
      return e;
    case SystemKind::NoDelayBaseline:
    case SystemKind::DelayedDampingString:
      break;
  }
  throw UnsupportedCaseError("no witness construction for " +
                             std::string(to_string(params.kind)) +
                             " (use string_witness for the string example)");
}

WitnessMode build_witness_mode(const ModelParams &params, double mu,
                               std::optional<double> delta, long n)
{
  const ExponentChoice ex = select_exponents(params, delta);
  if (!(mu > 0.0) || !std::isfinite(mu))
  {
    throw ValidationError("witness needs mu > 0");
  }
  const double lambda = checked_pow(mu, ex.q);
  const double omega = lambda * params.tau;
  if (omega > 1e15)
  {
    throw OverflowError("delay phase lambda*tau = " + format_double(omega) +
                        " exceeds double resolution at mu = " + format_double(mu) +
                        "; log-domain evaluation is not implemented");
  }
  const complex E = std::exp(-I * omega);
  const double sq = std::sqrt(mu);
  const double mb = checked_pow(mu, params.beta);
  const double ma = checked_pow(mu, params.alpha);
  const double ma2 = checked_pow(mu, 0.5 * params.alpha);
  const double mp = checked_pow(mu, -ex.p);

  ModeVector U;
  U.mode_index = n;
  ModeForcing F;
  complex phi;
  if (params.kind == SystemKind::DelayHyperbolic)
  {
    U.theta = -mp;
    U.v = -(I * lambda + ma) * U.theta / mb;
    U.u = U.v / (I * lambda);
    const complex z0 = sq * U.u;
    phi = -(z0 * E + I * lambda * U.v / sq + params.a * sq * U.v - mb / sq * U.theta);
    F.h = ExponentialForm({{phi / params.tau * std::exp(I * omega), 0, -omega}});
    U.z = ExponentialForm::two_term(z0, phi, omega);
  }
  else
  {
    U.v = mp;
    U.u = U.v / (I * lambda);
    U.theta = (I * lambda * U.v + mu * U.u) / mb;
    const complex z0 = ma2 * U.theta;
    phi = -(I * lambda * U.theta / ma2 + (params.a + params.kappa * E) * ma2 * U.theta +
            mb / ma2 * U.v);
    F.h = ExponentialForm(
        {{phi / (params.kappa * params.tau) * std::exp(I * omega), 0, -omega}});
    U.z = ExponentialForm::two_term(z0, phi / params.kappa, omega);
  }
  if (!std::isfinite(std::abs(phi)) || !std::isfinite(std::abs(U.u)))
  {
    throw OverflowError("witness fields overflow at mu = " + format_double(mu));
  }

  WitnessMode w;
  w.lambda = lambda;
  w.row.n = n;
  w.row.mu = mu;
  w.row.lambda = lambda;
  w.row.exponents = ex;
  w.row.phi = phi;
  w.row.norm_U = std::sqrt(mode_energy(U, params, mu));
  w.row.norm_F = forcing_norm(F, params, mu);
  w.row.ratio = w.row.norm_U / w.row.norm_F;
  w.row.residual = mode_residual(params, mu, lambda, U, F);
  w.F = scaled(F, 1.0 / w.row.norm_F);
  w.U = scaled(U, 1.0 / w.row.norm_F);
  return w;
}

double richardson_limit(const std::vector<double> &n, const std::vector<double> &ratio)
{
  if (n.empty() || n.size() != ratio.size())
  {
    throw ValidationError("extrapolation needs matching nonempty inputs");
  }
  const std::size_t k = std::min<std::size_t>(3, n.size());
  const std::size_t first = n.size() - k;
  double limit = 0.0;
  for (std::size_t i = first; i < n.size(); i++)
  {
    double weight = 1.0;
    for (std::size_t j = first; j < n.size(); j++)
    {
      if (j != i)
      {
        const double hi = 1.0 / n[i];
        const double hj = 1.0 / n[j];
        weight *= hj / (hj - hi);
      }
    }
    limit += weight * ratio[i];
  }
  return limit;
}

WitnessSweep witness_sweep(const ModelParams &params, const Spectrum &spectrum,
                           const std::vector<long> &indices, std::optional<double> delta)
{
  if (indices.empty())
  {
    throw ValidationError("witness sweep needs at least one index");
  }
  for (std::size_t i = 0; i < indices.size(); i++)
  {
    if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1]))
    {
      throw ValidationError("witness indices must be positive and increasing");
    }
  }
  select_exponents(params, delta);

  WitnessSweep sweep;
  sweep.rows.resize(indices.size());
  parallel_for(indices.size(), [&](std::size_t i)
  {
    const auto n = static_cast<std::size_t>(indices[i]);
    sweep.rows[i] = build_witness_mode(params, spectrum.eigenvalue(n), delta, indices[i]).row;
  });

  std::vector<double> n;
  std::vector<double> r;
  sweep.min_ratio = sweep.rows.front().ratio;
  for (const auto &row : sweep.rows)
  {
    n.push_back(static_cast<double>(row.n));
    r.push_back(row.ratio);
    sweep.min_ratio = std::min(sweep.min_ratio, row.ratio);
    sweep.max_relative_residual =
        std::max(sweep.max_relative_residual, row.residual / row.norm_F);
  }
  sweep.limit_estimate = richardson_limit(n, r);
  sweep.certified = sweep.limit_estimate > 0.0 && sweep.min_ratio > 0.0 &&
                    sweep.max_relative_residual <= kResidualTolerance;
  return sweep;
}

void write_witness_csv(std::ostream &out, const std::vector<WitnessRow> &rows)
{
  write_csv_row(out, {"n", "mu", "lambda", "p", "q", "delta", "case", "phi_re", "phi_im",
                      "norm_U", "norm_F", "ratio", "residual"});
  for (const auto &row : rows)
  {
    write_csv_row(out, {std::to_string(row.n), format_double(row.mu),
                        format_double(row.lambda), format_double(row.exponents.p),
                        format_double(row.exponents.q), format_double(row.exponents.delta),
                        row.exponents.case_tag, format_double(row.phi.real()),
                        format_double(row.phi.imag()), format_double(row.norm_U),
                        format_double(row.norm_F), format_double(row.ratio),
                        format_double(row.residual)});
  }
}

nlohmann::json witness_summary(const WitnessSweep &sweep, const ModelParams &params)
{
  nlohmann::json j;
  j["limit_estimate"] = sweep.limit_estimate;
  j["certified"] = sweep.certified;
  j["criterion"] = "Lemma 1.4";
  j["min_ratio"] = sweep.min_ratio;
  j["max_relative_residual"] = sweep.max_relative_residual;
  j["rows"] = sweep.rows.size();
  if (!sweep.rows.empty())
  {
    const auto &ex = sweep.rows.front().exponents;
    j["case"] = ex.case_tag;
    j["p"] = ex.p;
    j["q"] = ex.q;
    j["delta"] = ex.delta;
    if (ex.delta_bound > 0.0)
    {
      j["delta_bound"] = ex.delta_bound;
    }
  }
  j["tau_over_sqrt3"] = params.tau / std::sqrt(3.0);
  if (sweep.certified)
  {
    j["conclusion"] = "lim inf over lambda -> infinity of the resolvent norm >= " +
                      format_double(sweep.limit_estimate) +
                      " > 0, contradicting the criterion of Lemma 1.4";
  }
  else
  {
    j["conclusion"] = "not certified";
  }
  return j;
}

StringWitness string_witness(long n, double a, double tau, std::optional<double> xi)
{
  if (n < 1 || n % 2 == 0)
  {
    throw UnsupportedCaseError("string witness needs odd n, got " + std::to_string(n));
  }
  ModelParams p;
  p.kind = SystemKind::DelayHyperbolic;
  p.beta = 0.5;
  p.alpha = 1.0;
  p.a = a;
  p.tau = tau;
  p.xi = xi.value_or(2.0 * tau / a);
  p.validate();
  const double mu = static_cast<double>(n) * static_cast<double>(n);
  WitnessMode w = build_witness_mode(p, mu, std::nullopt, n);
  const double half_pi = std::sqrt(0.5 * std::numbers::pi);
  w.row.exponents.case_tag = "string";
  w.row.norm_U *= half_pi;
  w.row.norm_F *= half_pi;
  w.row.residual *= half_pi;
  return {w.row.phi, w.row};
}

}  // namespace thermosemi
