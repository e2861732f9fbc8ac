// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"
#include "thermosemi/parallel.hpp"

namespace thermosemi
{

namespace
{

constexpr complex I{0.0, 1.0};
constexpr double kSingularTolerance = 1e-12;

// Reduced system A (u, θ)ᵀ = b after eliminating v and z(1).
struct Reduced
{
  complex a11, a12, a21, a22;
};

struct Powers
{
  double sq;   // μ^{1/2}
  double mb;   // μ^β
  double ma;   // μ^α
  double ma2;  // μ^{α/2}
};

Powers powers(const ModelParams &p, double mu)
{
  return {std::sqrt(mu), std::pow(mu, p.beta), std::pow(mu, p.alpha),
          std::pow(mu, 0.5 * p.alpha)};
}

Reduced reduce(const ModelParams &p, const Powers &w, double mu, double lambda)
{
  const complex il = I * lambda;
  const complex E = has_delay(p.kind) ? std::exp(-I * (lambda * p.tau)) : complex(0.0);
  switch (p.kind)
  {
    case SystemKind::DelayHyperbolic:
      return {-lambda * lambda + I * (p.a * mu * lambda) + mu * E, -w.mb, il * w.mb,
              il + w.ma};
    case SystemKind::DelayParabolic:
      return {mu - lambda * lambda, -w.mb, il * w.mb,
              il + p.a * w.ma + p.kappa * w.ma * E};
    case SystemKind::DelayedDampingString:
      return {-lambda * lambda + mu + I * (p.a * mu * lambda) * E, -w.sq, il * w.sq, il + mu};
    case SystemKind::NoDelayBaseline:
      break;
  }
  return {mu - lambda * lambda, -w.mb, il * w.mb, il + w.ma};
}

void check_mu(double mu)
{
  if (!(mu > 0.0) || !std::isfinite(mu))
  {
    throw ValidationError("mode eigenvalue must be finite and positive, got " +
                          format_double(mu));
  }
}

double row_scale(const Reduced &r)
{
  return std::hypot(std::abs(r.a11), std::abs(r.a12)) *
         std::hypot(std::abs(r.a21), std::abs(r.a22));
}

complex energy_inner(const ModeForcing &x, const ModeForcing &y, const ModelParams &p,
                     double mu)
{
  complex s = mu * std::conj(x.f1) * y.f1 + std::conj(x.f2) * y.f2 + std::conj(x.f3) * y.f3;
  if (has_delay(p.kind))
  {
    s += p.xi * inner(std::get<ExponentialForm>(x.h), std::get<ExponentialForm>(y.h));
  }
  return s;
}

complex energy_inner(const ModeVector &x, const ModeVector &y, const ModelParams &p, double mu)
{
  complex s = mu * std::conj(x.u) * y.u + std::conj(x.v) * y.v +
              std::conj(x.theta) * y.theta;
  if (has_delay(p.kind))
  {
    s += p.xi * inner(std::get<ExponentialForm>(x.z), std::get<ExponentialForm>(y.z));
  }
  return s;
}

// ∫₀¹|r|² for r = iλz + z_ρ/τ - h with both profiles in closed form. Like terms are merged
// first so the cancellation happens in the coefficients, then |r|² is integrated with Gauss
// panels fine enough for the highest frequency present.
double transport_defect_closed(const ExponentialForm &z, const ExponentialForm &h, double omega,
                               double tau)
{
  std::vector<ExpTerm> terms;
  for (const auto &t : z.terms())
  {
    terms.push_back({t.c * I * (omega + t.nu) / tau, t.m, t.nu});
    if (t.m > 0)
    {
      terms.push_back({t.c * static_cast<double>(t.m) / tau, t.m - 1, t.nu});
    }
  }
  for (const auto &t : h.terms())
  {
    terms.push_back({-t.c, t.m, t.nu});
  }
  const ExponentialForm r = ExponentialForm(std::move(terms)).simplified();
  if (r.terms().empty())
  {
    return 0.0;
  }
  using rule = boost::math::quadrature::gauss<double, 30>;
  const int panels = std::clamp(static_cast<int>(r.max_frequency() / 8.0) + 1, 1, 8192);
  double sum = 0.0;
  for (int k = 0; k < panels; k++)
  {
    const double lo = static_cast<double>(k) / panels;
    const double hi = static_cast<double>(k + 1) / panels;
    sum += rule::integrate([&r](double rho) { return std::norm(r(rho)); }, lo, hi);
  }
  return sum;
}

double transport_defect_sampled(const ZProfile &z, const ZProfile &h, double lambda, double tau)
{
  const auto *zg = std::get_if<GridSamples>(&z);
  const auto *hg = std::get_if<GridSamples>(&h);
  const std::size_t n = zg ? zg->size() : hg->size();
  const double d = 1.0 / static_cast<double>(n - 1);
  std::vector<complex> r(n);
  for (std::size_t j = 0; j < n; j++)
  {
    const double rho = static_cast<double>(j) * d;
    complex dz;
    if (zg)
    {
      const auto &v = zg->data();
      if (j == 0)
      {
        dz = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * d);
      }
      else if (j == n - 1)
      {
        dz = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * d);
      }
      else
      {
        dz = (v[j + 1] - v[j - 1]) / (2.0 * d);
      }
    }
    else
    {
      dz = std::get<ExponentialForm>(z).derivative(rho);
    }
    r[j] = I * lambda * evaluate(z, rho) + dz / tau - evaluate(h, rho);
  }
  return l2_norm_sq(GridSamples(std::move(r)));
}

}  // namespace

double forcing_norm(const ModeForcing &F, const ModelParams &params, double mu)
{
  double s = mu * std::norm(F.f1) + std::norm(F.f2) + std::norm(F.f3);
  if (has_delay(params.kind))
  {
    s += params.xi * l2_norm_sq(F.h);
  }
  return std::sqrt(s);
}

ModeForcing scaled(const ModeForcing &F, complex s)
{
  return {s * F.f1, s * F.f2, s * F.f3, scaled(F.h, s)};
}

ModeVector scaled(const ModeVector &U, complex s)
{
  return {U.mode_index, s * U.u, s * U.v, s * U.theta, scaled(U.z, s)};
}

ReducedDeterminant reduced_determinant(const ModelParams &params, double mu, double lambda)
{
  check_mu(mu);
  const Reduced r = reduce(params, powers(params, mu), mu, lambda);
  return {r.a11 * r.a22 - r.a12 * r.a21, row_scale(r)};
}

ModeVector solve_mode_resolvent(const ModelParams &params, double mu, double lambda,
                                const ModeForcing &F)
{
  check_mu(mu);
  const Powers w = powers(params, mu);
  const Reduced r = reduce(params, w, mu, lambda);
  const complex det = r.a11 * r.a22 - r.a12 * r.a21;
  if (!(std::abs(det) >= kSingularTolerance * row_scale(r)))
  {
    throw NearSingularError("i*lambda is numerically in the spectrum of mode mu = " +
                            format_double(mu) + " at lambda = " + format_double(lambda));
  }

  const complex il = I * lambda;
  const double omega = lambda * params.tau;
  const bool delay = has_delay(params.kind);
  const complex G = delay ? transport_endpoint(F.h, omega, params.tau) : complex(0.0);
  const complex E = delay ? std::exp(-I * omega) : complex(0.0);

  complex b1;
  complex b2;
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      b1 = F.f2 + (il + params.a * mu) * F.f1 - w.sq * G;
      b2 = F.f3 + w.mb * F.f1;
      break;
    case SystemKind::DelayParabolic:
      b1 = F.f2 + il * F.f1;
      b2 = F.f3 + w.mb * F.f1 - params.kappa * w.ma2 * G;
      break;
    case SystemKind::DelayedDampingString:
      b1 = F.f2 + il * F.f1 + params.a * mu * E * F.f1 - params.a * w.sq * G;
      b2 = F.f3 + w.sq * F.f1;
      break;
    case SystemKind::NoDelayBaseline:
      b1 = F.f2 + il * F.f1;
      b2 = F.f3 + w.mb * F.f1;
      break;
  }

  ModeVector U;
  U.u = (b1 * r.a22 - r.a12 * b2) / det;
  U.theta = (r.a11 * b2 - r.a21 * b1) / det;
  U.v = il * U.u - F.f1;
  if (delay)
  {
    U.z = transport_solution(boundary_trace(params, mu, U.u, U.v, U.theta), F.h, omega,
                             params.tau);
  }
  else
  {
    U.z = ExponentialForm();
  }
  return U;
}

double mode_residual(const ModelParams &params, double mu, double lambda, const ModeVector &U,
                     const ModeForcing &F)
{
  check_mu(mu);
  const Powers w = powers(params, mu);
  const complex il = I * lambda;
  const bool delay = has_delay(params.kind);
  const complex z1 = delay ? evaluate(U.z, 1.0) : complex(0.0);

  const complex r1 = il * U.u - U.v - F.f1;
  complex r2;
  complex r3;
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      r2 = il * U.v + w.sq * z1 + params.a * mu * U.v - w.mb * U.theta - F.f2;
      r3 = il * U.theta + w.ma * U.theta + w.mb * U.v - F.f3;
      break;
    case SystemKind::DelayParabolic:
      r2 = il * U.v + mu * U.u - w.mb * U.theta - F.f2;
      r3 = il * U.theta + params.kappa * w.ma2 * z1 + params.a * w.ma * U.theta +
           w.mb * U.v - F.f3;
      break;
    case SystemKind::DelayedDampingString:
      r2 = il * U.v + mu * U.u + params.a * w.sq * z1 - w.sq * U.theta - F.f2;
      r3 = il * U.theta + mu * U.theta + w.sq * U.v - F.f3;
      break;
    case SystemKind::NoDelayBaseline:
      r2 = il * U.v + mu * U.u - w.mb * U.theta - F.f2;
      r3 = il * U.theta + w.ma * U.theta + w.mb * U.v - F.f3;
      break;
  }

  double s = mu * std::norm(r1) + std::norm(r2) + std::norm(r3);
  if (delay)
  {
    const double omega = lambda * params.tau;
    const auto *zf = std::get_if<ExponentialForm>(&U.z);
    const auto *hf = std::get_if<ExponentialForm>(&F.h);
    const double transport = zf && hf ? transport_defect_closed(*zf, *hf, omega, params.tau)
                                      : transport_defect_sampled(U.z, F.h, lambda, params.tau);
    const complex boundary =
        evaluate(U.z, 0.0) - boundary_trace(params, mu, U.u, U.v, U.theta);
    s += params.xi * (transport + std::norm(boundary));
  }
  return std::sqrt(s);
}

double mode_resolvent_norm_lb(const ModelParams &params, double mu, double lambda, int K)
{
  check_mu(mu);
  if (K < 0)
  {
    throw ValidationError("trial space size K must be nonnegative");
  }
  std::vector<ModeForcing> basis;
  basis.push_back({1.0 / std::sqrt(mu), 0.0, 0.0, ExponentialForm()});
  basis.push_back({0.0, 1.0, 0.0, ExponentialForm()});
  basis.push_back({0.0, 0.0, 1.0, ExponentialForm()});
  if (has_delay(params.kind))
  {
    for (int k = -K; k <= K; k++)
    {
      basis.push_back({0.0, 0.0, 0.0,
                       ExponentialForm({{1.0, 0, 2.0 * std::numbers::pi * k}})});
    }
    const double omega = lambda * params.tau;
    basis.push_back({0.0, 0.0, 0.0, ExponentialForm({{1.0, 0, omega}})});
    basis.push_back({0.0, 0.0, 0.0, ExponentialForm({{1.0, 0, -omega}})});
  }

  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<ModeVector> image;
  image.reserve(basis.size());
  for (const auto &F : basis)
  {
    image.push_back(solve_mode_resolvent(params, mu, lambda, F));
  }
  Eigen::MatrixXcd gf(n, n);
  Eigen::MatrixXcd gu(n, n);
  for (Eigen::Index i = 0; i < n; i++)
  {
    for (Eigen::Index j = i; j < n; j++)
    {
      gf(i, j) = energy_inner(basis[i], basis[j], params, mu);
      gu(i, j) = energy_inner(image[i], image[j], params, mu);
      gf(j, i) = std::conj(gf(i, j));
      gu(j, i) = std::conj(gu(i, j));
    }
  }

  // Orthonormalize the trial space (dropping numerically dependent directions), then take the
  // largest eigenvalue of the image Gram matrix in that basis.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> fs(gf);
  const Eigen::VectorXd &ev = fs.eigenvalues();
  const double cutoff = kSingularTolerance * ev.maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; i++)
  {
    if (ev(i) > cutoff)
    {
      keep.push_back(i);
    }
  }
  Eigen::MatrixXcd W(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); c++)
  {
    W.col(static_cast<Eigen::Index>(c)) = fs.eigenvectors().col(keep[c]) / std::sqrt(ev(keep[c]));
  }
  const Eigen::MatrixXcd M = W.adjoint() * gu * W;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> us(M, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, us.eigenvalues().maxCoeff()));
}

std::vector<ScanRow> resolvent_scan(const ModelParams &params, const Spectrum &spectrum,
                                    const std::vector<double> &lambdas, int K, long n_max)
{
  if (n_max < 1)
  {
    throw ValidationError("scan needs n_max >= 1");
  }
  for (std::size_t i = 0; i < lambdas.size(); i++)
  {
    if (!(lambdas[i] > 0.0) || (i > 0 && !(lambdas[i] > lambdas[i - 1])))
    {
      throw ValidationError("scan frequencies must be positive and increasing");
    }
  }
  const auto modes = static_cast<std::size_t>(n_max);
  const std::vector<double> mu = spectrum.eigenvalues(modes);
  std::vector<double> lb(lambdas.size() * modes);
  parallel_for(lb.size(), [&](std::size_t k)
  {
    const std::size_t i = k / modes;
    const std::size_t n = k % modes;
    try
    {
      lb[k] = mode_resolvent_norm_lb(params, mu[n], lambdas[i], K);
    }
    catch (const NearSingularError &)
    {
      lb[k] = std::numeric_limits<double>::quiet_NaN();
    }
  });

  std::vector<ScanRow> rows(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); i++)
  {
    rows[i].lambda = lambdas[i];
    for (std::size_t n = 0; n < modes; n++)
    {
      const double v = lb[i * modes + n];
      if (std::isnan(v))
      {
        rows[i].skipped_modes.push_back(static_cast<long>(n + 1));
      }
      else if (v > rows[i].sup_lb)
      {
        rows[i].sup_lb = v;
        rows[i].argmax_n = static_cast<long>(n + 1);
      }
    }
  }
  return rows;
}

void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows)
{
  write_csv_row(out, {"lambda", "sup_lb", "argmax_n", "skipped_modes"});
  for (const auto &row : rows)
  {
    std::string skipped;
    for (std::size_t i = 0; i < row.skipped_modes.size(); i++)
    {
      skipped += (i ? ";" : "") + std::to_string(row.skipped_modes[i]);
    }
    write_csv_row(out, {format_double(row.lambda), format_double(row.sup_lb),
                        std::to_string(row.argmax_n), skipped});
  }
}

}  // namespace thermosemi
