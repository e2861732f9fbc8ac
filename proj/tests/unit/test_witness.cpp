// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <thermosemi/error.hpp>
#include <thermosemi/resolvent.hpp>
#include <thermosemi/witness.hpp>
#include "oracles.hpp"

using namespace thermosemi;

namespace
{

const complex I(0.0, 1.0);
const double kLimit = 1.0 / std::sqrt(3.0);

ModelParams make(SystemKind kind, double beta, double alpha)
{
  ModelParams p;
  p.kind = kind;
  p.beta = beta;
  p.alpha = alpha;
  p.a = kind == SystemKind::DelayParabolic ? 2.0 : 1.0;
  p.kappa = 1.0;
  p.tau = 1.0;
  p.xi = kind == SystemKind::DelayParabolic ? 3.0 : 2.0;
  return p;
}

}  // namespace

TEST_CASE("exponent selection")
{
  auto e = select_exponents(make(SystemKind::DelayHyperbolic, 0.5, 0.5));
  CHECK(e.p == doctest::Approx(0.5));
  CHECK(e.q == doctest::Approx(0.5));
  CHECK(e.case_tag == "hyp-alpha>0");

  e = select_exponents(make(SystemKind::DelayParabolic, 0.75, 0.5));
  CHECK(e.p == doctest::Approx(0.5));
  CHECK(e.q == doctest::Approx(0.5));
  CHECK(e.case_tag == "par-equality");

  e = select_exponents(make(SystemKind::DelayParabolic, 0.5, 0.5));
  CHECK(e.delta_bound == doctest::Approx(0.5));
  CHECK(e.delta == doctest::Approx(0.25));
  CHECK(e.p == doctest::Approx(0.5));
  CHECK(e.q == doctest::Approx(0.25));

  e = select_exponents(make(SystemKind::DelayHyperbolic, 0.25, 0.0));
  CHECK(e.case_tag == "hyp-alpha=0");
  CHECK(e.p == doctest::Approx(0.5));

  CHECK_THROWS_AS(select_exponents(make(SystemKind::DelayHyperbolic, 1.0, 0.5)), DomainError);
  CHECK_THROWS_AS(select_exponents(make(SystemKind::DelayParabolic, 0.5, 0.0)),
                  UnsupportedCaseError);
  CHECK_THROWS_AS(select_exponents(make(SystemKind::NoDelayBaseline, 0.5, 0.5)),
                  UnsupportedCaseError);
  CHECK_THROWS_AS(select_exponents(make(SystemKind::DelayParabolic, 0.5, 0.5), 0.6),
                  ValidationError);
}

TEST_CASE("hyperbolic witness at mu = 1e4 matches the closed form")
{
  const ModelParams p = make(SystemKind::DelayHyperbolic, 0.5, 0.5);
  const WitnessMode w = build_witness_mode(p, 1e4);
  CHECK(w.lambda == doctest::Approx(100.0));
  const double k = w.row.norm_F;
  CHECK(std::abs(k * w.U.v - (1.0 + I) * 1e-2) < 1e-14);
  CHECK(std::abs(k * std::sqrt(1e4) * w.U.u - (1.0 - I) * 1e-2) < 1e-14);
  CHECK(std::abs(k * w.U.theta) == doctest::Approx(1e-2));
  CHECK(std::abs(w.row.phi + (1.0 + I)) < 0.05);

  const auto ref = oracle::hyperbolic_witness(0.5, 0.5, 1.0, 1.0, 2.0, 1e4, 0.5, 0.5);
  CHECK(std::abs(w.row.phi - ref.phi) < 1e-13);
  CHECK(w.row.ratio == doctest::Approx(ref.ratio).epsilon(1e-12));
  CHECK(w.row.norm_U == doctest::Approx(ref.norm_U).epsilon(1e-12));
  CHECK(forcing_norm(w.F, p, 1e4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mode_residual(p, 1e4, w.lambda, w.U, w.F) <= 1e-9);
}

TEST_CASE("witness ratios match the closed-form norms across cases")
{
  struct Case
  {
    SystemKind kind;
    double beta;
    double alpha;
    double p;
    double q;
  };
  const Case cases[] = {
      {SystemKind::DelayHyperbolic, 0.5, 0.5, 0.5, 0.5},
      {SystemKind::DelayHyperbolic, 0.25, 0.25, 0.5, 0.25},
      {SystemKind::DelayHyperbolic, 0.75, 0.5, 0.25, 0.5},
      {SystemKind::DelayHyperbolic, 0.5, 0.0, 0.25, 0.25},
      {SystemKind::DelayHyperbolic, 1.0, 1.0, 0.5, 1.0},
      {SystemKind::DelayParabolic, 0.5, 0.5, 0.5, 0.25},
      {SystemKind::DelayParabolic, 0.75, 0.5, 0.5, 0.5},
      {SystemKind::DelayParabolic, 0.25, 0.0, 0.75, 0.25},
  };
  for (const Case &c : cases)
  {
    const ModelParams p = make(c.kind, c.beta, c.alpha);
    const auto e = select_exponents(p);
    CHECK(e.p == doctest::Approx(c.p));
    CHECK(e.q == doctest::Approx(c.q));
    for (double mu : {16.0, 1e3, 1e6})
    {
      const WitnessMode w = build_witness_mode(p, mu);
      const auto ref =
          c.kind == SystemKind::DelayHyperbolic
              ? oracle::hyperbolic_witness(c.alpha, c.beta, p.a, p.tau, p.xi, mu, c.p, c.q)
              : oracle::parabolic_witness(c.alpha, c.beta, p.a, p.kappa, p.tau, p.xi, mu, c.p,
                                          c.q);
      INFO("kind=", to_string(c.kind), " beta=", c.beta, " alpha=", c.alpha, " mu=", mu);
      CHECK(w.lambda == doctest::Approx(ref.lambda).epsilon(1e-14));
      CHECK(std::abs(w.row.phi - ref.phi) <= 1e-12 * std::abs(ref.phi));
      CHECK(w.row.ratio == doctest::Approx(ref.ratio).epsilon(1e-11));
      CHECK(w.row.residual <= 1e-9 * w.row.norm_F);
      CHECK(mode_residual(p, mu, w.lambda, w.U, w.F) <= 1e-9);
    }
  }
}

TEST_CASE("parabolic Case 1 coefficient tends to i(a + kappa e^{-i lambda tau})")
{
  const ModelParams p = make(SystemKind::DelayParabolic, 0.5, 0.5);
  for (double mu : {1e6, 1e9, 1e12})
  {
    const WitnessMode w = build_witness_mode(p, mu);
    const complex lead = I * (p.a + p.kappa * std::exp(-I * (w.lambda * p.tau)));
    CHECK(std::abs(w.row.phi) >= p.a - p.kappa - 0.05);
    CHECK(std::abs(w.row.phi) <= p.a + p.kappa + 0.05);
    // Remaining terms of the display, evaluated one by one.
    const double d = 0.25;
    const double rest = std::pow(mu, -p.alpha - 1 + 3 * d) + std::pow(mu, d - p.alpha) +
                        (p.a + p.kappa) * std::pow(mu, -1 + 2 * d) +
                        std::pow(mu, d - (p.alpha + 1 - 2 * p.beta));
    CHECK(std::abs(w.row.phi - lead) <= rest * (1.0 + 1e-12));
  }
}

TEST_CASE("hyperbolic Case 1 coefficient against its displayed leading terms")
{
  const ModelParams p = make(SystemKind::DelayHyperbolic, 0.5, 0.5);
  for (double mu : {1e2, 1e4, 1e8})
  {
    const WitnessMode w = build_witness_mode(p, mu);
    const complex lead = -((I - 1.0) * std::pow(mu, p.alpha - 1.0) + p.a * (I + 1.0));
    // With p = 1/2 - β + α, q = α, the remaining powers of -Φ are
    // (1 - i μ^{α-q})μ^{1/2-β-p} e^{-iλτ} and μ^{β-1/2-p}.
    const double pp = 0.5 - p.beta + p.alpha;
    const double rest = std::sqrt(2.0) * std::pow(mu, 0.5 - p.beta - pp) +
                        std::pow(mu, p.beta - 0.5 - pp);
    CHECK(std::abs(w.row.phi - lead) <= rest * (1.0 + 1e-12));
  }
}

TEST_CASE("ratio invariance and vanishing fields")
{
  const ModelParams p = make(SystemKind::DelayHyperbolic, 0.5, 0.5);
  const WitnessMode w = build_witness_mode(p, 1e5);
  const complex c(-3.0, 0.5);
  const ModeVector U = scaled(w.U, c);
  const ModeForcing F = scaled(w.F, c);
  const double ratio = std::sqrt(mode_energy(U, p, 1e5)) / forcing_norm(F, p, 1e5);
  CHECK(ratio == doctest::Approx(w.row.ratio).epsilon(1e-12));

  const Spectrum s = make_spectrum(SpectrumSpec{});
  const std::vector<long> n{16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
  const auto base = witness_sweep(p, s, n);
  ModelParams wide = p;
  wide.xi = 10.0;
  const auto other = witness_sweep(wide, s, n);
  CHECK(std::abs(other.limit_estimate - base.limit_estimate) < 0.02 * base.limit_estimate);

  double previous = 1e300;
  for (const auto &row : base.rows)
  {
    const WitnessMode m = build_witness_mode(p, row.mu);
    const double k = m.row.norm_F;
    const double largest = k * std::max({std::abs(m.U.theta), std::abs(m.U.v),
                                         std::sqrt(row.mu) * std::abs(m.U.u)});
    CHECK(largest < previous);
    previous = largest;
    CHECK(row.ratio >= 0.9 * kLimit);
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("witness_sweep bookkeeping")
{
  const ModelParams p = make(SystemKind::DelayHyperbolic, 0.5, 0.5);
  const Spectrum s = make_spectrum(SpectrumSpec{});
  const auto one = witness_sweep(p, s, {64});
  CHECK(one.limit_estimate == one.rows[0].ratio);
  CHECK_THROWS_AS(witness_sweep(p, s, {}), ValidationError);
  CHECK_THROWS_AS(witness_sweep(p, s, {8, 4}), ValidationError);

  std::vector<long> n;
  std::vector<double> ratios;
  for (int k = 4; k <= 12; k++)
  {
    n.push_back(1L << k);
  }
  const auto sweep = witness_sweep(p, s, n);
  CHECK(sweep.certified);
  for (std::size_t i = 0; i < n.size(); i++)
  {
    const double mu = static_cast<double>(n[i] * n[i]);
    ratios.push_back(oracle::hyperbolic_witness(0.5, 0.5, 1.0, 1.0, 2.0, mu, 0.5, 0.5).ratio);
  }
  std::vector<double> nd(n.begin(), n.end());
  CHECK(sweep.limit_estimate ==
        doctest::Approx(oracle::extrapolate_to_zero(nd, ratios)).epsilon(1e-10));
  CHECK(std::abs(sweep.limit_estimate - kLimit) < 0.02 * kLimit);

  const auto summary = witness_summary(sweep, p);
  CHECK(summary["certified"] == true);
  CHECK(summary["case"] == "hyp-alpha>0");
  CHECK(summary["tau_over_sqrt3"].get<double>() == doctest::Approx(kLimit));
}

TEST_CASE("overflow is reported")
{
  const ModelParams p = make(SystemKind::DelayHyperbolic, 0.5, 0.5);
  CHECK_THROWS_AS(build_witness_mode(p, 1e300), OverflowError);
}

TEST_CASE("string witness")
{
  const auto w = string_witness(101, 1.0, 1.0);
  CHECK(std::abs(w.phi_coefficient + 2.0 * I) < 1e-3);
  const auto w2 = string_witness(101, 2.0, 1.0);
  CHECK(std::abs(w2.phi_coefficient - complex(-1.0, -3.0)) < 1e-3);
  CHECK_THROWS_AS(string_witness(100, 1.0, 1.0), UnsupportedCaseError);
  for (long n : {51L, 101L, 201L, 1001L})
  {
    const auto ref = oracle::string_witness(n, 1.0, 1.0, 2.0);
    const auto got = string_witness(n, 1.0, 1.0);
    CHECK(std::abs(got.phi_coefficient - ref.phi) < 1e-12);
    CHECK(got.row.ratio == doctest::Approx(ref.ratio).epsilon(1e-10));
  }
  CHECK(std::abs(string_witness(2001, 1.0, 1.0).row.ratio - kLimit) < 0.01);
}
