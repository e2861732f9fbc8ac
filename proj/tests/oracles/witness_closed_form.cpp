// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include "oracles.hpp"

namespace oracle
{

namespace
{

const complex I(0.0, 1.0);

// z(ρ) = e^{-iωρ}(z0 + ρ c), h(ρ) = (c/τ) e^{-iωρ}.
void finish(ClosedFormWitness &w, double mu_weighted_u_sq, complex c, double tau, double xi)
{
  const double z_sq = std::norm(w.z0) + std::real(w.z0 * std::conj(c)) + std::norm(c) / 3.0;
  w.norm_U = std::sqrt(mu_weighted_u_sq + std::norm(w.v) + std::norm(w.theta) + xi * z_sq);
  w.norm_F = std::sqrt(xi) * std::abs(c) / tau;
  w.ratio = w.norm_U / w.norm_F;
}

}  // namespace

ClosedFormWitness hyperbolic_witness(double alpha, double beta, double a, double tau, double xi,
                                     double mu, double p, double q)
{
  auto pw = [mu](double e) { return std::pow(mu, e); };
  ClosedFormWitness w;
  w.lambda = pw(q);
  const complex E = std::exp(-I * (w.lambda * tau));
  w.theta = -pw(-p);
  w.v = I * pw(-beta - p + q) + pw(alpha - beta - p);
  w.sqrt_mu_u = pw(0.5 - beta - p) - I * pw(0.5 + alpha - beta - p - q);
  const complex minus_phi = w.sqrt_mu_u * E - pw(-0.5 - beta - p + 2.0 * q) +
                            I * pw(-0.5 + alpha - beta - p + q) +
                            I * a * pw(0.5 - beta - p + q) + a * pw(0.5 + alpha - beta - p) +
                            pw(beta - 0.5 - p);
  w.phi = -minus_phi;
  w.z0 = w.sqrt_mu_u;
  finish(w, std::norm(w.sqrt_mu_u), w.phi * std::exp(I * (w.lambda * tau)), tau, xi);
  return w;
}

ClosedFormWitness parabolic_witness(double alpha, double beta, double a, double kappa,
                                    double tau, double xi, double mu, double p, double q)
{
  auto pw = [mu](double e) { return std::pow(mu, e); };
  ClosedFormWitness w;
  w.lambda = pw(q);
  const complex E = std::exp(-I * (w.lambda * tau));
  w.v = pw(-p);
  w.sqrt_mu_u = -I * pw(0.5 - p - q);
  w.theta = I * (pw(-beta - p + q) - pw(1.0 - beta - p - q));
  w.phi = pw(-alpha / 2.0 - beta - p + 2.0 * q) - pw(1.0 - alpha / 2.0 - beta - p) -
          I * (a + kappa * E) *
              (pw(alpha / 2.0 - beta - p + q) - pw(1.0 + alpha / 2.0 - beta - p - q)) -
          pw(beta - alpha / 2.0 - p);
  w.z0 = pw(alpha / 2.0) * w.theta;
  const complex c = w.phi * std::exp(I * (w.lambda * tau)) / kappa;
  finish(w, std::norm(w.sqrt_mu_u), c, tau, xi);
  return w;
}

ClosedFormWitness string_witness(long n, double a, double tau, double xi)
{
  const double nn = static_cast<double>(n);
  ClosedFormWitness w;
  w.lambda = nn * nn;
  const complex E = std::exp(-I * (w.lambda * tau));
  // θ = -cos(nx)/n², v = (1+i)/n sin(nx), u = v/(iλ), u_x = (1-i)/n² cos(nx).
  w.theta = -1.0 / (nn * nn);
  w.v = (1.0 + I) / nn;
  w.sqrt_mu_u = (1.0 - I) / (nn * nn);
  // cos-coefficient of iλ∫_{π/2}^x v - a v_x + θ - u_x e^{-iλτ}.
  w.phi = (1.0 - a) - I * (1.0 + a) - (1.0 + (1.0 - I) * E) / (nn * nn);
  w.z0 = w.sqrt_mu_u;
  finish(w, std::norm(w.sqrt_mu_u), w.phi * std::exp(I * (w.lambda * tau)), tau, xi);
  return w;
}

double extrapolate_to_zero(const std::vector<double> &n, const std::vector<double> &r)
{
  const std::size_t k = n.size();
  const std::size_t first = k >= 3 ? k - 3 : 0;
  double total = 0.0;
  for (std::size_t i = first; i < k; i++)
  {
    double weight = 1.0;
    for (std::size_t j = first; j < k; j++)
    {
      if (j != i)
      {
        const double hi = 1.0 / n[i];
        const double hj = 1.0 / n[j];
        weight *= (0.0 - hj) / (hi - hj);
      }
    }
    total += weight * r[i];
  }
  return total;
}

}  // namespace oracle
