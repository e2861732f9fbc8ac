// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_PROFILE_HPP
#define THERMOSEMI_PROFILE_HPP

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace thermosemi
{

using complex = std::complex<double>;

// c ρ^m e^{iνρ}
struct ExpTerm
{
  complex c;
  int m = 0;
  double nu = 0.0;
};

// Finite sum of ExpTerm on ρ ∈ [0,1]. The two-term shape c0 e^{-iωρ} + ρ c1 e^{iω(1-ρ)} is the
// one produced by the witnesses; transport integration of any ExponentialForm stays in the class.
class ExponentialForm
{
public:
  ExponentialForm() = default;
  explicit ExponentialForm(std::vector<ExpTerm> terms);

  static ExponentialForm two_term(complex c0, complex c1, double omega);
  static ExponentialForm constant(complex c);

  complex operator()(double rho) const;
  complex derivative(double rho) const;

  // Largest |ν| over the terms.
  double max_frequency() const;

  // Merges terms with equal m and (to relative 1e-14) equal ν, dropping exact zeros.
  ExponentialForm simplified() const;

  ExponentialForm &operator+=(const ExponentialForm &other);
  ExponentialForm &operator*=(complex s);

  const std::vector<ExpTerm> &terms() const { return list; }

private:
  std::vector<ExpTerm> list;
};

ExponentialForm operator+(ExponentialForm lhs, const ExponentialForm &rhs);
ExponentialForm operator*(complex s, ExponentialForm f);

// Samples on the uniform grid ρ_j = j/(N-1), N ≥ 2.
class GridSamples
{
public:
  GridSamples() : values(2) {}
  explicit GridSamples(std::vector<complex> samples);

  static GridSamples sample(const ExponentialForm &f, std::size_t points = 257);

  std::size_t size() const { return values.size(); }
  double spacing() const { return 1.0 / static_cast<double>(values.size() - 1); }

  // Piecewise linear interpolation.
  complex operator()(double rho) const;

  const std::vector<complex> &data() const { return values; }
  std::vector<complex> &data() { return values; }

private:
  std::vector<complex> values;
};

using ZProfile = std::variant<ExponentialForm, GridSamples>;

constexpr std::size_t kDefaultGridPoints = 257;

complex evaluate(const ZProfile &z, double rho);

// ∫₀¹ ρ^m e^{iνρ} dρ.
complex moment(int m, double nu);

// ∫₀¹ conj(f) g dρ, exact.
complex inner(const ExponentialForm &f, const ExponentialForm &g);

// ∫₀¹ |z|² dρ: exact for ExponentialForm, composite trapezoid for GridSamples.
double l2_norm_sq(const ZProfile &z);

ZProfile scaled(const ZProfile &z, complex s);

// Solution of  iλz + z_ρ/τ = h  with z(0) = z0, written with ω = λτ as
//   z(ρ) = z0 e^{-iωρ} + τ e^{-iωρ} ∫₀^ρ e^{iωs} h(s) ds.
// ExponentialForm h gives an exact ExponentialForm. GridSamples h uses piecewise-linear h with
// exact exponential weights per cell and returns samples on the same grid.
ZProfile transport_solution(complex z0, const ZProfile &h, double omega, double tau);

// τ ∫₀¹ e^{iω(s-1)} h(s) ds, the forced part of z(1).
complex transport_endpoint(const ZProfile &h, double omega, double tau);

}  // namespace thermosemi

#endif  // THERMOSEMI_PROFILE_HPP
