// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/profile.hpp"

#include <algorithm>
#include <cmath>
#include <boost/math/quadrature/gauss.hpp>
#include "thermosemi/error.hpp"

namespace thermosemi
{

namespace
{

constexpr complex I{0.0, 1.0};

bool same_frequency(double x, double y)
{
  return std::abs(x - y) <= 1e-14 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

// ∫₀^ρ s^m e^{iκs} ds expanded as ExpTerms in ρ (frequency κ or 0).
std::vector<ExpTerm> antiderivative(int m, double kappa)
{
  std::vector<ExpTerm> out;
  if (std::abs(kappa) < 0.5)
  {
    // Σ_k (iκ)^k/k! ρ^{m+k+1}/(m+k+1)
    complex coeff = 1.0;
    for (int k = 0; k < 60; k++)
    {
      out.push_back({coeff / static_cast<double>(m + k + 1), m + k + 1, 0.0});
      coeff *= I * kappa / static_cast<double>(k + 1);
      if (std::abs(coeff) < 1e-19)
      {
        break;
      }
    }
    return out;
  }
  const complex ik = I * kappa;
  // e^{iκρ} Σ_j (-1)^j m!/(m-j)! ρ^{m-j}/(iκ)^{j+1}  -  (-1)^m m!/(iκ)^{m+1}
  double falling = 1.0;
  complex power = ik;
  for (int j = 0; j <= m; j++)
  {
    const double sign = j % 2 ? -1.0 : 1.0;
    out.push_back({sign * falling / power, m - j, kappa});
    falling *= static_cast<double>(m - j);
    power *= ik;
  }
  double factorial = 1.0;
  for (int j = 2; j <= m; j++)
  {
    factorial *= j;
  }
  complex tail = 1.0;
  for (int j = 0; j <= m; j++)
  {
    tail *= ik;
  }
  const double sign = m % 2 ? -1.0 : 1.0;
  out.push_back({-sign * factorial / tail, 0, 0.0});
  return out;
}

complex gauss_moment(int m, double nu)
{
  using rule = boost::math::quadrature::gauss<double, 30>;
  const int panels = 1 + static_cast<int>(std::abs(nu) / 10.0);
  complex sum = 0.0;
  for (int p = 0; p < panels; p++)
  {
    const double lo = static_cast<double>(p) / panels;
    const double hi = static_cast<double>(p + 1) / panels;
    const auto re = rule::integrate(
        [&](double r) { return std::pow(r, m) * std::cos(nu * r); }, lo, hi);
    const auto im = rule::integrate(
        [&](double r) { return std::pow(r, m) * std::sin(nu * r); }, lo, hi);
    sum += complex(re, im);
  }
  return sum;
}

// Filon weights on one cell of width d: ∫₀^d e^{iωt}(1-t/d) dt and ∫₀^d e^{iωt} t/d dt.
std::pair<complex, complex> cell_weights(double omega, double d)
{
  const complex x = I * (omega * d);
  complex phi0;
  complex phi1;
  if (std::abs(omega * d) < 0.1)
  {
    // φ0 = Σ x^k/(k+1)!,  φ1 = Σ x^k/(k!(k+2))
    complex xk = 1.0;
    double fact = 1.0;
    phi0 = 0.0;
    phi1 = 0.0;
    for (int k = 0; k < 12; k++)
    {
      phi0 += xk / (fact * (k + 1));
      phi1 += xk / (fact * (k + 2));
      xk *= x;
      fact *= (k + 1);
    }
  }
  else
  {
    const complex ex = std::exp(x);
    phi0 = (ex - 1.0) / x;
    phi1 = (ex * (x - 1.0) + 1.0) / (x * x);
  }
  return {d * (phi0 - phi1), d * phi1};
}

}  // namespace

ExponentialForm::ExponentialForm(std::vector<ExpTerm> terms) : list(std::move(terms))
{
  for (const auto &t : list)
  {
    if (t.m < 0)
    {
      throw ValidationError("negative power in exponential form");
    }
  }
}

ExponentialForm ExponentialForm::two_term(complex c0, complex c1, double omega)
{
  return ExponentialForm({{c0, 0, -omega}, {c1 * std::exp(I * omega), 1, -omega}});
}

ExponentialForm ExponentialForm::constant(complex c)
{
  return ExponentialForm({{c, 0, 0.0}});
}

complex ExponentialForm::operator()(double rho) const
{
  complex sum = 0.0;
  for (const auto &t : list)
  {
    sum += t.c * std::pow(rho, t.m) * std::exp(I * (t.nu * rho));
  }
  return sum;
}

complex ExponentialForm::derivative(double rho) const
{
  complex sum = 0.0;
  for (const auto &t : list)
  {
    const complex poly = (t.m > 0 ? t.m * std::pow(rho, t.m - 1) : 0.0) +
                         I * t.nu * std::pow(rho, t.m);
    sum += t.c * poly * std::exp(I * (t.nu * rho));
  }
  return sum;
}

double ExponentialForm::max_frequency() const
{
  double w = 0.0;
  for (const auto &t : list)
  {
    w = std::max(w, std::abs(t.nu));
  }
  return w;
}

ExponentialForm ExponentialForm::simplified() const
{
  std::vector<ExpTerm> out;
  for (const auto &t : list)
  {
    auto it = std::find_if(out.begin(), out.end(), [&](const ExpTerm &o)
                           { return o.m == t.m && same_frequency(o.nu, t.nu); });
    if (it == out.end())
    {
      out.push_back(t);
    }
    else
    {
      it->c += t.c;
    }
  }
  std::erase_if(out, [](const ExpTerm &t) { return t.c == complex(0.0); });
  return ExponentialForm(std::move(out));
}

ExponentialForm &ExponentialForm::operator+=(const ExponentialForm &other)
{
  list.insert(list.end(), other.list.begin(), other.list.end());
  return *this;
}

ExponentialForm &ExponentialForm::operator*=(complex s)
{
  for (auto &t : list)
  {
    t.c *= s;
  }
  return *this;
}

ExponentialForm operator+(ExponentialForm lhs, const ExponentialForm &rhs)
{
  lhs += rhs;
  return lhs;
}

ExponentialForm operator*(complex s, ExponentialForm f)
{
  f *= s;
  return f;
}

GridSamples::GridSamples(std::vector<complex> samples) : values(std::move(samples))
{
  if (values.size() < 2)
  {
    throw ValidationError("grid profile needs at least 2 samples");
  }
}

GridSamples GridSamples::sample(const ExponentialForm &f, std::size_t points)
{
  if (points < 2)
  {
    throw ValidationError("grid profile needs at least 2 samples");
  }
  std::vector<complex> v(points);
  for (std::size_t j = 0; j < points; j++)
  {
    v[j] = f(static_cast<double>(j) / static_cast<double>(points - 1));
  }
  return GridSamples(std::move(v));
}

complex GridSamples::operator()(double rho) const
{
  const double x = std::clamp(rho, 0.0, 1.0) * static_cast<double>(values.size() - 1);
  const auto j = std::min(static_cast<std::size_t>(x), values.size() - 2);
  const double t = x - static_cast<double>(j);
  return (1.0 - t) * values[j] + t * values[j + 1];
}

complex evaluate(const ZProfile &z, double rho)
{
  return std::visit([rho](const auto &p) { return p(rho); }, z);
}

complex moment(int m, double nu)
{
  if (m < 0)
  {
    throw ValidationError("negative moment order");
  }
  const double a = std::abs(nu);
  if (a < 1.0)
  {
    complex sum = 0.0;
    complex term = 1.0;
    for (int k = 0; k < 40; k++)
    {
      sum += term / static_cast<double>(m + k + 1);
      term *= I * nu / static_cast<double>(k + 1);
      if (std::abs(term) < 1e-18)
      {
        break;
      }
    }
    return sum;
  }
  if (a > 2.0 * m + 2.0)
  {
    const complex ik = I * nu;
    const complex e = std::exp(ik);
    complex value = (e - 1.0) / ik;
    for (int k = 1; k <= m; k++)
    {
      value = (e - static_cast<double>(k) * value) / ik;
    }
    return value;
  }
  return gauss_moment(m, nu);
}

complex inner(const ExponentialForm &f, const ExponentialForm &g)
{
  complex sum = 0.0;
  for (const auto &s : f.terms())
  {
    for (const auto &t : g.terms())
    {
      sum += std::conj(s.c) * t.c * moment(s.m + t.m, t.nu - s.nu);
    }
  }
  return sum;
}

double l2_norm_sq(const ZProfile &z)
{
  if (const auto *f = std::get_if<ExponentialForm>(&z))
  {
    return std::max(0.0, inner(*f, *f).real());
  }
  const auto &v = std::get<GridSamples>(z).data();
  double sum = 0.5 * (std::norm(v.front()) + std::norm(v.back()));
  for (std::size_t j = 1; j + 1 < v.size(); j++)
  {
    sum += std::norm(v[j]);
  }
  return sum / static_cast<double>(v.size() - 1);
}

ZProfile scaled(const ZProfile &z, complex s)
{
  if (const auto *f = std::get_if<ExponentialForm>(&z))
  {
    return s * *f;
  }
  auto g = std::get<GridSamples>(z);
  for (auto &x : g.data())
  {
    x *= s;
  }
  return g;
}

ZProfile transport_solution(complex z0, const ZProfile &h, double omega, double tau)
{
  if (const auto *f = std::get_if<ExponentialForm>(&h))
  {
    std::vector<ExpTerm> out{{z0, 0, -omega}};
    for (const auto &t : f->terms())
    {
      // τ e^{-iωρ} c ∫₀^ρ s^m e^{i(ω+ν)s} ds
      for (const auto &a : antiderivative(t.m, omega + t.nu))
      {
        const double nu = a.nu == 0.0 ? -omega : t.nu;
        out.push_back({tau * t.c * a.c, a.m, nu});
      }
    }
    return ExponentialForm(std::move(out)).simplified();
  }
  const auto &hv = std::get<GridSamples>(h).data();
  const std::size_t n = hv.size();
  const double d = 1.0 / static_cast<double>(n - 1);
  const auto [w0, w1] = cell_weights(omega, d);
  const complex step = std::exp(-I * (omega * d));
  // w_j = e^{-iωρ_j} ∫₀^{ρ_j} e^{iωs} h(s) ds, advanced cell by cell.
  std::vector<complex> z(n);
  complex w = 0.0;
  z[0] = z0;
  complex base = z0;
  for (std::size_t j = 0; j + 1 < n; j++)
  {
    w = step * (w + w0 * hv[j] + w1 * hv[j + 1]);
    base *= step;
    z[j + 1] = base + tau * w;
  }
  z[n - 1] = z0 * std::exp(-I * omega) + tau * w;
  return GridSamples(std::move(z));
}

complex transport_endpoint(const ZProfile &h, double omega, double tau)
{
  return evaluate(transport_solution(0.0, h, omega, tau), 1.0);
}

}  // namespace thermosemi
